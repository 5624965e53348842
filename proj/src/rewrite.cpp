#include "subrosa/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace subrosa {

std::string RewriteRule::name() const {
  std::string s{first, second};
  return s + (kind == RuleKind::kSwap ? std::string("->") + second + first : std::string("->e"));
}

const std::vector<RewriteRule>& rewrite_rules() {
  static const std::vector<RewriteRule> rules = {
      {RuleKind::kSwap, 'a', 'b'},   {RuleKind::kSwap, 'b', 'A'},   {RuleKind::kSwap, 'A', 'B'},
      {RuleKind::kSwap, 'B', 'a'},   {RuleKind::kCancel, 'a', 'A'}, {RuleKind::kCancel, 'A', 'a'},
      {RuleKind::kCancel, 'b', 'B'}, {RuleKind::kCancel, 'B', 'b'},
  };
  return rules;
}

ProjectionWord step(const ProjectionWord& w, const RewriteRule& rule, std::size_t pos) {
  const std::size_t len = w.letters.size();
  if (len < 2 || pos >= len) throw std::invalid_argument("step: position out of range");
  const std::size_t next = (pos + 1) % len;
  const std::string abs = w.abstract();
  if (abs[pos] != rule.first || abs[next] != rule.second) {
    throw std::invalid_argument("step: rule " + rule.name() + " does not apply at position " + std::to_string(pos));
  }
  ProjectionWord out = w;
  if (rule.kind == RuleKind::kSwap) {
    std::swap(out.letters[pos], out.letters[next]);
    std::swap(out.positions[pos], out.positions[next]);
    return out;
  }
  const std::size_t lo = std::min(pos, next);
  const std::size_t hi = std::max(pos, next);
  out.letters.erase(out.letters.begin() + static_cast<long>(hi));
  out.letters.erase(out.letters.begin() + static_cast<long>(lo));
  out.positions.erase(out.positions.begin() + static_cast<long>(hi));
  out.positions.erase(out.positions.begin() + static_cast<long>(lo));
  return out;
}

// ---------------------------------------------------------------------------

CircularReducer::CircularReducer(int n, Word letters, const Matching& partner)
    : ctx_(n), letter_(std::move(letters)), partner_(partner) {
  if (partner_.size() != letter_.size()) throw std::invalid_argument("CircularReducer: matching size mismatch");
  for (std::size_t i = 0; i < letter_.size(); ++i) {
    if (partner_[i] >= letter_.size() || partner_[partner_[i]] != i || partner_[i] == i) {
      throw std::invalid_argument("CircularReducer: matching is not an involution");
    }
    if (letter_[partner_[i]] != ctx_.antiparallel(letter_[i])) {
      throw std::invalid_argument("CircularReducer: matched letters are not antiparallel");
    }
  }
  order_.resize(letter_.size());
  where_.resize(letter_.size());
  for (std::size_t i = 0; i < letter_.size(); ++i) order_[i] = where_[i] = i;
}

Word CircularReducer::letters() const {
  Word w;
  w.reserve(order_.size());
  for (auto id : order_) w.push_back(letter_[id]);
  return w;
}

bool CircularReducer::matched_adjacent(std::size_t pos) const {
  const std::size_t len = order_.size();
  return len >= 2 && partner_[order_[pos]] == order_[(pos + 1) % len];
}

bool CircularReducer::crossing_adjacent(std::size_t pos) const {
  const std::size_t len = order_.size();
  if (len < 4) return false;
  const std::size_t nxt = (pos + 1) % len;
  const std::size_t q1 = where_[partner_[order_[pos]]];
  const std::size_t q2 = where_[partner_[order_[nxt]]];
  if (q1 == nxt) return false;
  // Chord (pos, q1) separates nxt from q2 iff q1 comes first walking on from nxt.
  return (q1 + len - nxt) % len < (q2 + len - nxt) % len;
}

std::size_t CircularReducer::crossing_count() const {
  std::size_t count = 0;
  const std::size_t len = order_.size();
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t pi = where_[partner_[order_[i]]];
    if (pi < i) continue;
    for (std::size_t j = i + 1; j < pi; ++j) {
      const std::size_t pj = where_[partner_[order_[j]]];
      if (pj > pi) ++count;
    }
  }
  return count;
}

std::optional<Move> CircularReducer::next_move(std::string* failure) const {
  const std::size_t len = order_.size();
  if (len == 0) return std::nullopt;
  for (std::size_t i = 0; i < len; ++i) {
    if (matched_adjacent(i)) return Move{RuleKind::kCancel, i};
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!crossing_adjacent(i)) continue;
    const DoubledDirection x = letter_at(i);
    const DoubledDirection y = letter_at((i + 1) % len);
    const int gap = ctx_.ccw_gap(x, y);
    if (gap > 0 && gap < ctx_.half_turn()) return Move{RuleKind::kSwap, i};
    if (failure) {
      *failure = "crossing at position " + std::to_string(i) + " is clockwise (" + std::to_string(x) + "," +
                 std::to_string(y) + ")";
    }
    return std::nullopt;
  }
  if (failure) *failure = "no applicable rule";
  return std::nullopt;
}

void CircularReducer::apply(const Move& m) {
  const std::size_t len = order_.size();
  const std::size_t nxt = (m.pos + 1) % len;
  if (m.kind == RuleKind::kSwap) {
    std::swap(order_[m.pos], order_[nxt]);
    where_[order_[m.pos]] = m.pos;
    where_[order_[nxt]] = nxt;
    return;
  }
  const std::size_t lo = std::min(m.pos, nxt);
  const std::size_t hi = std::max(m.pos, nxt);
  order_.erase(order_.begin() + static_cast<long>(hi));
  order_.erase(order_.begin() + static_cast<long>(lo));
  for (std::size_t i = 0; i < order_.size(); ++i) where_[order_[i]] = i;
}

ReductionResult reduce_to_empty(int n, const Word& letters, const Matching& partner) {
  ReductionResult res;
  CircularReducer r(n, letters, partner);
  while (!r.empty()) {
    auto mv = r.next_move(&res.reason);
    if (!mv) {
      res.stuck_word = r.letters();
      return res;
    }
    r.apply(*mv);
    res.trace.push_back(*mv);
  }
  res.success = true;
  return res;
}

ReductionResult reduce_to_empty(const ProjectionWord& w, const Matching& partner) {
  return reduce_to_empty(w.n, w.letters, partner);
}

Word replay(int n, const Word& letters, const ReductionTrace& trace) {
  const SymmetryContext ctx(n);
  Word w = letters;
  for (const Move& m : trace) {
    const std::size_t len = w.size();
    const std::size_t nxt = (m.pos + 1) % len;
    if (m.kind == RuleKind::kSwap) {
      const int gap = ctx.ccw_gap(w[m.pos], w[nxt]);
      if (gap <= 0 || gap >= ctx.half_turn()) throw std::invalid_argument("replay: swap is not a rewrite rule");
      std::swap(w[m.pos], w[nxt]);
    } else {
      if (w[nxt] != ctx.antiparallel(w[m.pos])) throw std::invalid_argument("replay: cancel of non-antiparallel pair");
      w.erase(w.begin() + static_cast<long>(std::max(m.pos, nxt)));
      w.erase(w.begin() + static_cast<long>(std::min(m.pos, nxt)));
    }
  }
  return w;
}

Matching restrict_matching(const Matching& full, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> local(full.size(), SIZE_MAX);
  for (std::size_t i = 0; i < positions.size(); ++i) local[positions[i]] = i;
  Matching out(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const std::size_t j = local[full[positions[i]]];
    if (j == SIZE_MAX) throw std::invalid_argument("restrict_matching: partner outside the projection");
    out[i] = j;
  }
  return out;
}

Word cyclic_swap(int n, const Word& u, std::size_t split) {
  if (split > u.size()) throw std::invalid_argument("cyclic_swap: split beyond word");
  const SymmetryContext ctx(n);
  Word out(u.begin() + static_cast<long>(split), u.end());
  for (std::size_t i = 0; i < split; ++i) out.push_back(ctx.antiparallel(u[i]));
  return out;
}

CrossingReport crossing_condition(const BoundaryWord& w) {
  const SymmetryContext ctx(w.n);
  CrossingReport rep;
  const Matching full = canonical_matching(w.n, w.letters);
  std::set<int> classes;
  for (DoubledDirection d : w.letters) classes.insert(ctx.wrap(d) % (2 * w.n));
  const std::vector<int> cls(classes.begin(), classes.end());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      const ProjectionWord p = project(w, cls[i], cls[j]);
      const auto res = reduce_to_empty(p, restrict_matching(full, p.positions));
      PairVerdict v{p.a, p.b, res.success, p.abstract(), "", res.reason};
      if (!res.success) {
        ProjectionWord stuck = p;
        stuck.letters = res.stuck_word;
        v.stuck = stuck.abstract();
      }
      rep.pairs.push_back(std::move(v));
    }
  }
  rep.pass = std::all_of(rep.pairs.begin(), rep.pairs.end(), [](const PairVerdict& v) { return v.pass; });
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// All perfect matchings of the circular letter list `idx` (positions of one
// direction class) joining opposite letters with no two chords crossing.
void noncrossing_matchings(const std::vector<std::size_t>& idx, const std::vector<int>& side, std::size_t lo,
                           std::size_t hi, std::vector<std::pair<std::size_t, std::size_t>>& acc,
                           const std::function<void()>& emit);

void match_range(const std::vector<std::size_t>& idx, const std::vector<int>& side, std::size_t lo, std::size_t hi,
                 std::vector<std::pair<std::size_t, std::size_t>>& acc, const std::function<void()>& emit) {
  noncrossing_matchings(idx, side, lo, hi, acc, emit);
}

void noncrossing_matchings(const std::vector<std::size_t>& idx, const std::vector<int>& side, std::size_t lo,
                           std::size_t hi, std::vector<std::pair<std::size_t, std::size_t>>& acc,
                           const std::function<void()>& emit) {
  if (lo >= hi) {
    emit();
    return;
  }
  for (std::size_t j = lo + 1; j < hi; j += 2) {
    if (side[lo] == side[j]) continue;
    acc.emplace_back(idx[lo], idx[j]);
    match_range(idx, side, lo + 1, j, acc, [&] { match_range(idx, side, j + 1, hi, acc, emit); });
    acc.pop_back();
  }
}

}  // namespace

bool reducible_with_some_matching(int n, const Word& letters) {
  const SymmetryContext ctx(n);
  if (!balance_check(n, letters)) return false;
  std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(2 * n));
  std::vector<std::vector<int>> side(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const DoubledDirection d = ctx.wrap(letters[i]);
    by_class[static_cast<std::size_t>(d % (2 * n))].push_back(i);
    side[static_cast<std::size_t>(d % (2 * n))].push_back(d < 2 * n ? 0 : 1);
  }
  std::vector<std::size_t> used;
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    if (!by_class[c].empty()) used.push_back(c);
  }
  Matching partner(letters.size());
  bool found = false;
  std::vector<std::pair<std::size_t, std::size_t>> acc;
  std::function<void(std::size_t)> per_class = [&](std::size_t ci) {
    if (found) return;
    if (ci == used.size()) {
      found = reduce_to_empty(n, letters, partner).success;
      return;
    }
    const auto& idx = by_class[used[ci]];
    const std::size_t base = acc.size();
    noncrossing_matchings(idx, side[used[ci]], 0, idx.size(), acc, [&] {
      for (std::size_t t = base; t < acc.size(); ++t) {
        partner[acc[t].first] = acc[t].second;
        partner[acc[t].second] = acc[t].first;
      }
      per_class(ci + 1);
    });
  };
  per_class(0);
  return found;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Word> linear_successors(const SymmetryContext& ctx, const Word& w, bool cyclic) {
  std::vector<Word> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const int gap = ctx.ccw_gap(w[p], w[p + 1]);
    if (gap == ctx.half_turn()) {
      Word v = w;
      v.erase(v.begin() + static_cast<long>(p), v.begin() + static_cast<long>(p) + 2);
      out.push_back(std::move(v));
    } else if (gap > 0 && gap < ctx.half_turn()) {
      Word v = w;
      std::swap(v[p], v[p + 1]);
      out.push_back(std::move(v));
    }
  }
  if (cyclic) {
    for (std::size_t s = 1; s <= w.size(); ++s) out.push_back(cyclic_swap(ctx.n(), w, s));
  }
  return out;
}

}  // namespace

bool derivable(int n, const Word& from, const Word& to, bool allow_cyclic_swap, std::size_t max_states) {
  const SymmetryContext ctx(n);
  std::set<Word> seen{from};
  std::deque<Word> queue{from};
  while (!queue.empty() && seen.size() < max_states) {
    Word w = std::move(queue.front());
    queue.pop_front();
    if (w == to) return true;
    for (auto& v : linear_successors(ctx, w, allow_cyclic_swap)) {
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen.count(to) != 0;
}

HalfWordDerivation half_word_derivation(int i, int j) {
  if (i < 0 || j < 1) throw std::invalid_argument("half_word_derivation: need i >= 0 and j >= 1");
  constexpr int n = 5;
  const SymmetryContext ctx(n);
  const DoubledDirection a = 1;
  const DoubledDirection b = 3;
  const DoubledDirection abar = ctx.antiparallel(a);
  HalfWordDerivation r;
  for (int t = 0; t < i; ++t) r.start.insert(r.start.end(), {b, a});
  for (int t = 0; t < j; ++t) r.start.insert(r.start.end(), {b, abar});
  if (i < j) {
    r.derived.assign(static_cast<std::size_t>(2 * i), b);
    for (int t = 0; t < j - i; ++t) r.derived.insert(r.derived.end(), {b, abar});
  } else {
    for (int t = 0; t < i - j; ++t) r.derived.insert(r.derived.end(), {b, a});
    r.derived.insert(r.derived.end(), static_cast<std::size_t>(2 * j), b);
  }
  r.derived_reversal.assign(r.derived.rbegin(), r.derived.rend());
  r.reached_derived = derivable(n, r.start, r.derived, true);
  r.reached_reversal = derivable(n, r.derived, r.derived_reversal, false);
  Word full = r.start;
  const Word bar = ctx.antiparallel(r.start);
  full.insert(full.end(), bar.begin(), bar.end());
  r.full_word_reduces = reduce_to_empty(n, full, canonical_matching(n, full)).success;
  return r;
}

}  // namespace subrosa
