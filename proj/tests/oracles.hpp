#pragma once

// Brute-force reference implementations shared by the unit and acceptance
// tests. They use nothing from the library except SymmetryContext and the
// word/matching types.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <vector>

#include "subrosa/cyclo.hpp"

namespace oracle {

using subrosa::DoubledDirection;
using subrosa::SymmetryContext;
using subrosa::Word;
using Matching = std::vector<std::size_t>;

inline bool chords_interleave(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
  if (p > q) std::swap(p, q);
  if (r > s) std::swap(r, s);
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

/// Every matching of each letter with an antiparallel one in which chords of
/// the same direction class never cross. Enumerates all bijections per class.
inline std::vector<Matching> noncrossing_matchings(int n, const Word& w) {
  const SymmetryContext ctx(n);
  std::vector<std::vector<std::size_t>> plus(static_cast<std::size_t>(2 * n)), minus(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int d = ctx.wrap(w[i]);
    (d < 2 * n ? plus[static_cast<std::size_t>(d)] : minus[static_cast<std::size_t>(d - 2 * n)]).push_back(i);
  }
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> per_class;
  for (int c = 0; c < 2 * n; ++c) {
    auto& P = plus[static_cast<std::size_t>(c)];
    auto Q = minus[static_cast<std::size_t>(c)];
    if (P.size() != Q.size()) return {};
    if (P.empty()) continue;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options;
    std::sort(Q.begin(), Q.end());
    do {
      std::vector<std::pair<std::size_t, std::size_t>> chords;
      for (std::size_t t = 0; t < P.size(); ++t) chords.emplace_back(P[t], Q[t]);
      bool ok = true;
      for (std::size_t x = 0; x < chords.size() && ok; ++x)
        for (std::size_t y = x + 1; y < chords.size() && ok; ++y)
          ok = !chords_interleave(chords[x].first, chords[x].second, chords[y].first, chords[y].second);
      if (ok) options.push_back(std::move(chords));
    } while (std::next_permutation(Q.begin(), Q.end()));
    per_class.push_back(std::move(options));
  }
  std::vector<Matching> out;
  Matching m(w.size());
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == per_class.size()) {
      out.push_back(m);
      return;
    }
    for (const auto& chords : per_class[c]) {
      for (const auto& [p, q] : chords) {
        m[p] = q;
        m[q] = p;
      }
      rec(c + 1);
    }
  };
  rec(0);
  return out;
}

/// The crossing condition checked chord pair by chord pair: whenever two
/// chords interleave as x .. y .. x-bar .. y-bar, y must lie strictly
/// counterclockwise of x by less than a half turn.
inline bool satisfies_crossing_condition(int n, const Word& w, const Matching& m) {
  const SymmetryContext ctx(n);
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      const std::size_t q = m[p];
      const std::size_t s = m[r];
      auto ahead = [&](std::size_t from, std::size_t to) { return (to + w.size() - from) % w.size(); };
      if (!(ahead(p, r) < ahead(p, q) && ahead(p, q) < ahead(p, s))) continue;
      const int gap = ctx.ccw_gap(w[p], w[r]);
      if (!(gap > 0 && gap < 2 * n)) return false;
    }
  }
  return true;
}

/// Number of interleaving chord pairs per rhombus shape k (index k).
inline std::vector<std::size_t> crossings_by_shape(int n, const Word& w, const Matching& m) {
  const SymmetryContext ctx(n);
  std::vector<std::size_t> count(static_cast<std::size_t>(n / 2 + 1), 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t r = p + 1; r < w.size(); ++r) {
      if (p > m[p] || r > m[r]) continue;
      if (!chords_interleave(p, m[p], r, m[r])) continue;
      const int g = ctx.wrap(w[p] - w[r]) % (2 * n);
      ++count[static_cast<std::size_t>(std::min(g, 2 * n - g) / 2)];
    }
  }
  return count;
}

/// Calls f on every balanced word over {a, b, a-bar, b-bar} of length len.
template <class F>
void for_each_balanced_word(DoubledDirection a, DoubledDirection b, int n, int len, F&& f) {
  const SymmetryContext ctx(n);
  const DoubledDirection alphabet[4] = {ctx.wrap(a), ctx.wrap(b), ctx.antiparallel(a), ctx.antiparallel(b)};
  Word w(static_cast<std::size_t>(len));
  std::function<void(int, int, int)> rec = [&](int pos, int da, int db) {
    const int left = len - pos;
    if (std::abs(da) + std::abs(db) > left) return;
    if (pos == len) {
      f(static_cast<const Word&>(w));
      return;
    }
    const int delta_a[4] = {1, 0, -1, 0};
    const int delta_b[4] = {0, 1, 0, -1};
    for (int c = 0; c < 4; ++c) {
      w[static_cast<std::size_t>(pos)] = alphabet[c];
      rec(pos + 1, da + delta_a[c], db + delta_b[c]);
    }
  };
  rec(0, 0, 0);
}

}  // namespace oracle
