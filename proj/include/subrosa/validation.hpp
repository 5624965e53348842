#pragma once

// Patch validators. Each check records the first counterexample it finds.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subrosa/patch.hpp"

namespace subrosa {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  ///< empty when pass
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_json() const;
};

using Polygon = std::vector<std::pair<double, double>>;

// The span overloads take raw tile lists, which may contain duplicates.

/// Every two tiles are disjoint, share one vertex, or share one full edge.
CheckResult check_edge_to_edge(std::span<const PlacedRhombus> tiles);
CheckResult check_edge_to_edge(const Patch& p);

/// Corner labels sum to 2n at every interior vertex and at most 2n elsewhere.
CheckResult check_vertex_sums(int n, std::span<const PlacedRhombus> tiles);
CheckResult check_vertex_sums(const Patch& p);

/// Tile interiors are pairwise disjoint; with a region, the tile areas add up
/// to the region's area (relative tolerance 1e-6).
CheckResult check_overlap_and_coverage(std::span<const PlacedRhombus> tiles,
                                       const std::optional<Polygon>& region = std::nullopt);
CheckResult check_overlap_and_coverage(const Patch& p, const std::optional<Polygon>& region = std::nullopt);

/// Exact invariance under rotation by 2*pi/order about the point
/// twice_centre / 2. Throws std::invalid_argument if the rotation does not
/// map the lattice to itself.
CheckResult check_rotational_symmetry(const Patch& p, const CycloVector& twice_centre, int order);

/// Runs edge-to-edge, vertex sums and overlap (and coverage when a region is given).
ValidationReport validate(const Patch& p, const std::optional<Polygon>& region = std::nullopt);

double polygon_area(const Polygon& poly);
Polygon lattice_polygon(const std::vector<CycloVector>& corners, double scale = 1.0);

}  // namespace subrosa
