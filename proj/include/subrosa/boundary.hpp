#pragma once

// Boundary words of super-rhombus interiors, projections onto direction
// pairs, and the canonical antiparallel matching.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "subrosa/cyclo.hpp"

namespace subrosa {

/// Closed counterclockwise path of unit steps, stored as its letters and the
/// start vertex. Super-rhombus words also record their eight segments A..H.
struct BoundaryWord {
  int n = 2;
  Word letters;
  CycloVector anchor;
  /// Start index of segments A..H, plus letters.size() as a sentinel. Empty
  /// for words that do not come from a super-rhombus.
  std::vector<std::size_t> segment_starts;

  std::size_t size() const { return letters.size(); }
  /// Vertex i is where letter i starts; vertices()[size()] == anchor for a closed path.
  std::vector<CycloVector> vertices() const;
  Word segment(char tag) const;
  /// First half u of a word of the form u followed by its antiparallel.
  Word half() const;
  bool has_antiparallel_halves() const;
};

enum class RoseSegments {
  kR21,         ///< traced from R2^1 (the working construction)
  kSortedR2,    ///< letters in the monotone order of the full rose R2 (fails)
};

/// Boundary of the region left to tile inside the (k, n-k) super-rhombus,
/// oriented with edge A along direction 0 and corner k at its left end.
BoundaryWord super_boundary(int n, int k, RoseSegments roses = RoseSegments::kR21);

/// Corners of the enlarged rhombus: V0 (corner k) at the origin, then
/// counterclockwise.
std::array<CycloVector, 4> super_corners(int n, int k);

/// Exact vector of one super-edge along doubled direction d.
CycloVector super_edge_vector(int n, DoubledDirection d);

/// Letters of the non-corner bisected rhombuses along an edge of direction d.
Word edge_segment_letters(int n, DoubledDirection d);

/// Normalized representatives with -n < a < b <= n (in doubled units, taken
/// as signed), so that a, b, a+2n, b+2n is a counterclockwise rhombus.
std::pair<DoubledDirection, DoubledDirection> normalize_pair(int n, DoubledDirection a, DoubledDirection b);

struct ProjectionWord {
  int n = 2;
  DoubledDirection a = 0;
  DoubledDirection b = 0;
  Word letters;
  std::vector<std::size_t> positions;  ///< index of each letter in the source word

  /// Letters in the abstract alphabet: "a", "b", "A" (a-bar), "B" (b-bar).
  std::string abstract() const;
};

ProjectionWord project(const BoundaryWord& w, DoubledDirection a, DoubledDirection b);
ProjectionWord project(int n, std::span<const DoubledDirection> letters, DoubledDirection a, DoubledDirection b);

/// partner[i] is the index matched with letter i.
using Matching = std::vector<std::size_t>;

/// The non-crossing matching of each direction with its antiparallel. When
/// the occurrences of a and a-bar form one block each on the circle, the i-th
/// a is paired with the i-th last a-bar and the matching is unique. Throws if
/// the word is unbalanced.
Matching canonical_matching(int n, std::span<const DoubledDirection> letters);

/// The bisected-rhombus label of a direction on segment A: the m in [0, n]
/// with x = +-m (mod 2n).
int diam(DoubledDirection x, int n);
/// The orientation, x or its antiparallel, actually contributed on segment A.
DoubledDirection orient_s(DoubledDirection x, int n);

bool balance_check(int n, std::span<const DoubledDirection> letters);

struct SimplicityReport {
  bool closed = false;
  bool simple = false;
  int touching_vertices = 0;
  std::string detail;
};
SimplicityReport simple_check(const BoundaryWord& w);

/// One line per segment, "A: d,d,d". Words without segments print one line.
std::string boundary_text(const BoundaryWord& w);

}  // namespace subrosa
