#include "subrosa/edge_language.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "subrosa/cyclo.hpp"

namespace subrosa {

namespace {

// The increasing corner run n%2, n%2 + 2, ..., n-2.
std::vector<int> corner_run(int n) {
  std::vector<int> run;
  for (int m = n % 2; m <= n - 2; m += 2) run.push_back(m);
  return run;
}

void require_n(int n, const char* what) {
  if (n < 2) throw std::invalid_argument(std::string(what) + ": n must be >= 2, got " + std::to_string(n));
}

}  // namespace

bool EdgeSequence::is_palindrome() const { return std::equal(labels.begin(), labels.end(), labels.rbegin()); }

int corner_run_length(int n) {
  require_n(n, "corner_run_length");
  return static_cast<int>(corner_run(n).size());
}

EdgeSequence sigma(int n) {
  require_n(n, "sigma");
  if (n <= 3) {
    const int m = n % 2;
    return {n, {m, m}};
  }
  // First half: the corner run of n, then the mirrored corner runs of every
  // smaller member of the same parity. The mirrored runs up to n - 4 are the
  // tail of sigma(n - 2)'s first half; the mirrored run of n - 2 follows.
  const EdgeSequence smaller = sigma(n - 2);
  const std::size_t smaller_half = smaller.size() / 2;
  std::vector<int> half = corner_run(n);
  const auto smaller_run = corner_run(n - 2);
  // Tail of the smaller first half (everything after its corner run).
  half.insert(half.end(), smaller.labels.begin() + static_cast<long>(smaller_run.size()),
              smaller.labels.begin() + static_cast<long>(smaller_half));
  half.insert(half.end(), smaller_run.rbegin(), smaller_run.rend());

  EdgeSequence out{n, half};
  out.labels.insert(out.labels.end(), half.rbegin(), half.rend());
  return out;
}

EdgeSequence alpha(int n) {
  const EdgeSequence s = sigma(n);
  const std::size_t run = static_cast<std::size_t>(corner_run_length(n));
  return {n, std::vector<int>(s.labels.begin() + static_cast<long>(run), s.labels.end() - static_cast<long>(run))};
}

int label_multiplicity(int m, int n) {
  require_n(n, "label_multiplicity");
  if (m < 0 || m > n - 2 || (n - m) % 2 != 0) {
    throw std::invalid_argument("label_multiplicity: label " + std::to_string(m) + " invalid for n=" +
                                std::to_string(n));
  }
  return (n - m) / 2 - 1;
}

std::pair<std::vector<int>, std::vector<int>> split_in_out(const EdgeSequence& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("split_in_out: odd-length edge sequence");
  const auto mid = s.labels.begin() + static_cast<long>(s.size() / 2);
  return {std::vector<int>(s.labels.begin(), mid), std::vector<int>(mid, s.labels.end())};
}

double edge_length_from_sigma(int n) {
  double total = 0.0;
  for (int m : sigma(n).labels) total += (m == 0) ? 1.0 : diagonal_measure(n, m);
  return total;
}

}  // namespace subrosa
