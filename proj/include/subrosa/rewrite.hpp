#pragma once

// The rewrite system on boundary words over {a, b, a-bar, b-bar}.
//
// Swaps exchange two adjacent letters x y -> y x when x, y, x-bar, y-bar is a
// counterclockwise rhombus; cancels delete an adjacent antiparallel pair. A
// circular word with a matching reduces to the empty word exactly when the
// matching satisfies the crossing condition.

#include <optional>
#include <string>
#include <vector>

#include "subrosa/boundary.hpp"

namespace subrosa {

enum class RuleKind { kSwap, kCancel };

/// One of the eight rules, over the abstract letters 'a', 'b', 'A' (a-bar), 'B' (b-bar).
struct RewriteRule {
  RuleKind kind;
  char first;
  char second;
  std::string name() const;
};

/// ab->ba, bA->Ab, AB->BA, Ba->aB, then aA, Aa, bB, Bb -> empty.
const std::vector<RewriteRule>& rewrite_rules();

/// Applies `rule` at `pos` (pos and pos+1, wrapping) of a circular projection
/// word. Throws if the left-hand side does not occur there.
ProjectionWord step(const ProjectionWord& w, const RewriteRule& rule, std::size_t pos);

struct Move {
  RuleKind kind;
  std::size_t pos;  ///< first of the two adjacent positions (second is pos+1 mod size)
  friend bool operator==(const Move&, const Move&) = default;
};

using ReductionTrace = std::vector<Move>;

/// Reduction state for a circular word with a fixed matching. Letters keep
/// stable ids, so a swap carries each letter's partner along.
class CircularReducer {
 public:
  CircularReducer(int n, Word letters, const Matching& partner);

  int n() const { return ctx_.n(); }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  Word letters() const;
  DoubledDirection letter_at(std::size_t pos) const { return letter_[order_[pos]]; }
  /// Stable id of the letter at pos, and the id it is matched with.
  std::size_t id_at(std::size_t pos) const { return order_[pos]; }
  std::size_t partner_id(std::size_t id) const { return partner_[id]; }

  bool matched_adjacent(std::size_t pos) const;
  bool crossing_adjacent(std::size_t pos) const;
  /// Matched chord pairs that interleave (quadratic; for diagnostics and tests).
  std::size_t crossing_count() const;

  /// Deterministic choice: the lowest cancel, else the lowest crossing swap.
  /// Returns nullopt with `failure` set when stuck or when a crossing pair is
  /// not counterclockwise.
  std::optional<Move> next_move(std::string* failure) const;
  void apply(const Move& m);

 private:
  SymmetryContext ctx_;
  std::vector<DoubledDirection> letter_;  // by id
  std::vector<std::size_t> partner_;      // by id
  std::vector<std::size_t> order_;        // position -> id
  std::vector<std::size_t> where_;        // id -> position
};

struct ReductionResult {
  bool success = false;
  ReductionTrace trace;
  Word stuck_word;  ///< remaining letters on failure
  std::string reason;
};

ReductionResult reduce_to_empty(int n, const Word& letters, const Matching& partner);
ReductionResult reduce_to_empty(const ProjectionWord& w, const Matching& partner);

/// Replays a trace; returns the resulting word.
Word replay(int n, const Word& letters, const ReductionTrace& trace);

/// Partner map of the letters kept by a projection.
Matching restrict_matching(const Matching& full, const std::vector<std::size_t>& positions);

/// x y ~> y x-bar for u = x y split after `split` letters.
Word cyclic_swap(int n, const Word& u, std::size_t split);

struct PairVerdict {
  DoubledDirection a;
  DoubledDirection b;
  bool pass;
  std::string projection;  ///< abstract letters
  std::string stuck;       ///< abstract letters left when the reduction failed
  std::string reason;
};

struct CrossingReport {
  std::vector<PairVerdict> pairs;
  bool pass = false;
};

/// Runs the reduction on the projection of w onto every pair of direction
/// classes that occur in w, using the canonical matching.
CrossingReport crossing_condition(const BoundaryWord& w);

/// True if some matching without crossings between equal directions lets
/// the circular word reduce to the empty word.
bool reducible_with_some_matching(int n, const Word& letters);

struct HalfWordDerivation {
  Word start;
  Word derived;           ///< the word the half-word derivation aims for
  Word derived_reversal;
  bool reached_derived = false;   ///< start =>* derived (rewrites and cyclic swaps)
  bool reached_reversal = false;  ///< derived ->* its reversal (rewrites only)
  bool full_word_reduces = false; ///< start followed by its antiparallel ->* empty
};

/// Builds (ba)^i (b a-bar)^j over a = 1, b = 3 at n = 5 and replays the
/// half-word argument for it.
HalfWordDerivation half_word_derivation(int i, int j);

/// Whether `to` is reachable from `from` with linear (non-circular) rewrite
/// steps, optionally also cyclic swaps. Breadth-first, bounded by max_states.
bool derivable(int n, const Word& from, const Word& to, bool allow_cyclic_swap, std::size_t max_states = 200000);

}  // namespace subrosa
