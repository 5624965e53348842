#pragma once

// Edge substitution sequences: the labels of the unit rhombuses bisected by a
// super-rhombus edge, read from one corner to the other.

#include <utility>
#include <vector>

namespace subrosa {

/// A palindromic label sequence. Label m > 0 denotes the rhombus (m, n-m)
/// bisected through its corner m; label 0 (even n only) is a unit edge lying
/// on the super-edge.
struct EdgeSequence {
  int n = 0;
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  bool is_palindrome() const;
};

/// The full edge sequence, built from the recursive blueprint.
EdgeSequence sigma(int n);

/// sigma(n) without the runs that lie inside the corner roses.
EdgeSequence alpha(int n);

/// Length of the increasing run at each end of sigma(n) (floor(n/2)).
int corner_run_length(int n);

/// Number of occurrences of label m in each half of alpha(n): (n - m)/2 - 1.
int label_multiplicity(int m, int n);

/// Midpoint split into (in-half, out-half).
std::pair<std::vector<int>, std::vector<int>> split_in_out(const EdgeSequence& s);

/// Sum of the diagonal measures along sigma(n), with 0 labels counted as 1.
double edge_length_from_sigma(int n);

}  // namespace subrosa
