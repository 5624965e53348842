#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "subrosa/cyclo.hpp"
#include "subrosa/edge_language.hpp"

using namespace subrosa;

namespace {

// Erase everything except k and m; compare with k^i (mk)^j (km)^j k^i.
std::vector<int> expected_two_label_pattern(int k, int m, int i, int j) {
  std::vector<int> v;
  for (int t = 0; t < i; ++t) v.push_back(k);
  for (int t = 0; t < j; ++t) v.insert(v.end(), {m, k});
  for (int t = 0; t < j; ++t) v.insert(v.end(), {k, m});
  for (int t = 0; t < i; ++t) v.push_back(k);
  return v;
}

}  // namespace

TEST(Sigma, SmallRows) {
  EXPECT_EQ(sigma(2).labels, (std::vector<int>{0, 0}));
  EXPECT_EQ(sigma(3).labels, (std::vector<int>{1, 1}));
  EXPECT_EQ(sigma(4).labels, (std::vector<int>{0, 2, 0, 0, 2, 0}));
  EXPECT_EQ(sigma(5).labels, (std::vector<int>{1, 3, 1, 1, 3, 1}));
  EXPECT_EQ(sigma(7).labels, (std::vector<int>{1, 3, 5, 1, 3, 1, 1, 3, 1, 5, 3, 1}));
  EXPECT_THROW(sigma(1), std::invalid_argument);
}

TEST(Sigma, ShapeInvariants) {
  for (int n = 2; n <= 100; ++n) {
    const EdgeSequence s = sigma(n);
    ASSERT_EQ(s.size() % 2, 0u) << n;
    EXPECT_TRUE(s.is_palindrome()) << n;
    for (int m : s.labels) {
      EXPECT_EQ((n - m) % 2, 0) << n;
      EXPECT_GE(m, 0);
      EXPECT_LE(m, n - 2);
    }
    const int run = corner_run_length(n);
    EXPECT_EQ(run, n / 2);
    for (int t = 0; t < run; ++t) EXPECT_EQ(s.labels[static_cast<std::size_t>(t)], n % 2 + 2 * t) << n;
  }
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(7).labels, (std::vector<int>{1, 3, 1, 1, 3, 1}));
  EXPECT_TRUE(alpha(3).labels.empty());
  EXPECT_EQ(alpha(4).labels, (std::vector<int>{0, 0}));
}

TEST(Alpha, MultiplicityPerHalf) {
  for (int n = 2; n <= 60; ++n) {
    const EdgeSequence a = alpha(n);
    EXPECT_TRUE(a.is_palindrome());
    const auto [in, out] = split_in_out(a);
    for (int m = n % 2; m <= n - 2; m += 2) {
      EXPECT_EQ(std::count(in.begin(), in.end(), m), label_multiplicity(m, n)) << n << ' ' << m;
      EXPECT_EQ(std::count(out.begin(), out.end(), m), label_multiplicity(m, n)) << n << ' ' << m;
    }
  }
}

TEST(Alpha, TwoLabelProjection) {
  for (int n = 4; n <= 30; ++n) {
    const EdgeSequence a = alpha(n);
    for (int k = n % 2; k <= n - 2; k += 2) {
      for (int m = k + 2; m <= n - 2; m += 2) {
        std::vector<int> proj;
        std::copy_if(a.labels.begin(), a.labels.end(), std::back_inserter(proj),
                     [&](int x) { return x == k || x == m; });
        const int i = label_multiplicity(k, n) - label_multiplicity(m, n);
        const int j = label_multiplicity(m, n);
        EXPECT_EQ(proj, expected_two_label_pattern(k, m, i, j)) << n << ' ' << k << ' ' << m;
      }
    }
  }
}

TEST(LabelMultiplicity, ValuesAndErrors) {
  EXPECT_EQ(label_multiplicity(1, 5), 1);
  EXPECT_EQ(label_multiplicity(3, 7), 1);
  for (int n = 2; n <= 20; ++n) EXPECT_EQ(label_multiplicity(n - 2, n), 0);
  EXPECT_THROW(label_multiplicity(2, 5), std::invalid_argument);
  EXPECT_THROW(label_multiplicity(5, 5), std::invalid_argument);
}

TEST(SplitInOut, Halves) {
  EXPECT_EQ(split_in_out(sigma(3)), (std::pair<std::vector<int>, std::vector<int>>{{1}, {1}}));
  EXPECT_EQ(split_in_out(sigma(5)), (std::pair<std::vector<int>, std::vector<int>>{{1, 3, 1}, {1, 3, 1}}));
  EXPECT_EQ(split_in_out(sigma(2)), (std::pair<std::vector<int>, std::vector<int>>{{0}, {0}}));
  EXPECT_THROW(split_in_out(EdgeSequence{5, {1, 3, 1}}), std::invalid_argument);
}

TEST(EdgeLength, MatchesScalingFactor) {
  EXPECT_NEAR(edge_length_from_sigma(2), 2.0, 1e-12);
  EXPECT_NEAR(edge_length_from_sigma(4), 4.0 + 2.0 * std::sqrt(2.0), 1e-9);
  const double d1 = diagonal_measure(7, 1), d3 = diagonal_measure(7, 3), d5 = diagonal_measure(7, 5);
  EXPECT_NEAR(edge_length_from_sigma(7), 2 * (d1 + d3 + d5 + d1 + d3 + d1), 1e-9);
  for (int n = 2; n <= 100; ++n) {
    EXPECT_LT(std::abs(edge_length_from_sigma(n) - scaling_factor(n)) / scaling_factor(n), 1e-9) << n;
  }
}
