#pragma once

// Tilings of regions bounded by unit-step boundary words, obtained by
// replaying the rewrite reduction of the full word: every swap places one
// rhombus, every cancel closes a zero-width spike.

#include <string>
#include <vector>

#include "subrosa/boundary.hpp"
#include "subrosa/patch.hpp"
#include "subrosa/rewrite.hpp"

namespace subrosa {

struct TilingResult {
  bool success = false;
  Patch patch;
  std::string failure;
  std::size_t moves = 0;
};

/// Greedy tiling of the region inside w, using the canonical matching.
TilingResult tile_region(const BoundaryWord& w);

/// Lattice maps generated by `gens` (the identity included).
std::vector<LatticeMap> group_closure(int n, const std::vector<LatticeMap>& gens);

/// Symmetries of the (k, n-k) super-rhombus with V0 at the origin: D2, or D4
/// for squares.
std::vector<LatticeMap> super_rhombus_group(int n, int k);

/// Regular octagon of unit sides at n = 4 with its first vertex at the origin
/// and its D8 symmetry group.
BoundaryWord unit_octagon();
std::vector<LatticeMap> octagon_group();

struct SymmetricTilingResult {
  bool success = false;
  Patch patch;
  std::string failure;
  std::size_t orbits = 0;
  /// Candidate moves skipped because their images overlap.
  std::size_t conflicts = 0;
};

/// Tiles the region rewriting whole orbits of moves under `group` at once.
/// Takes the first candidate (cancels, then swaps, by position) whose images
/// touch disjoint letters and untangle distinct chord pairs; fails when no
/// candidate qualifies.
SymmetricTilingResult tile_region_symmetric(const BoundaryWord& w, const std::vector<LatticeMap>& group);

/// The four corner rose sectors of the (k, n-k) super-rhombus.
Patch super_rose_sectors(int n, int k);
/// Rhombuses bisected by the super-edges that belong to this super-rhombus:
/// on each edge, the half nearer its counterclockwise end.
Patch super_edge_tiles(int n, int k);

/// Complete super-tile: interior tiling, rose sectors and edge tiles. Throws
/// if the interior cannot be tiled.
Patch super_rhombus_patch(int n, int k, bool symmetric = true);

}  // namespace subrosa
