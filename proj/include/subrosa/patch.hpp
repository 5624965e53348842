#pragma once

// A finite set of placed unit rhombuses.

#include <map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subrosa/cyclo.hpp"

namespace subrosa {

/// Directed unit edge between two canonical lattice points.
struct UnitEdge {
  CycloVector from;
  CycloVector to;
  friend bool operator==(const UnitEdge&, const UnitEdge&) = default;
  friend auto operator<=>(const UnitEdge&, const UnitEdge&) = default;
};

class Patch {
 public:
  explicit Patch(int n = 2) : n_(n) {}
  Patch(int n, std::vector<PlacedRhombus> tiles);

  int n() const { return n_; }
  /// Tiles in (pos, rot, k) order, without duplicates.
  const std::vector<PlacedRhombus>& tiles() const { return tiles_; }
  std::size_t size() const { return tiles_.size(); }
  bool empty() const { return tiles_.empty(); }

  void insert(const PlacedRhombus& t);
  /// Union; identical tiles are kept once.
  void merge(const Patch& other);
  bool contains(const PlacedRhombus& t) const;

  Patch transformed(const Isometry& g) const;
  Patch transformed(const LatticeMap& g) const;

  double area() const;
  /// Count of tiles per prototile k (index k, size floor(n/2) + 1).
  std::vector<std::size_t> shape_counts() const;

  /// Directed edge -> tiles traversing it counterclockwise.
  std::map<UnitEdge, std::vector<std::size_t>> edge_index() const;

 private:
  void normalize();

  int n_;
  std::vector<PlacedRhombus> tiles_;
};

/// Outer boundary of a patch whose union is a simple closed region, as a
/// counterclockwise loop of unit steps. Returns the start vertex and the
/// word; throws if the boundary is not a single loop.
std::pair<CycloVector, Word> boundary_loop(const Patch& p);

}  // namespace subrosa
