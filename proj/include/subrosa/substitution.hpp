#pragma once

// The substitution: enlarge by S(n), then replace every tile by the super
// patch of its prototile in the same pose.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "subrosa/patch.hpp"

namespace subrosa {

inline constexpr std::size_t kDefaultMaxTiles = 2'000'000;

/// Thrown when an operation would produce more tiles than allowed.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::size_t projected, std::size_t cap);
  std::size_t projected() const { return projected_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t projected_;
  std::size_t cap_;
};

class SubstitutionRule {
 public:
  /// Builds the super patch of every prototile (symmetric interior tilings by
  /// default).
  explicit SubstitutionRule(int n, bool symmetric = true);

  int n() const { return n_; }
  double scale() const;
  /// Super patch of prototile k, with corner k at the origin and its first
  /// edge along direction 0.
  const Patch& super_patch(int k) const { return supers_.at(static_cast<std::size_t>(k)); }
  /// The enlargement e(j) -> super-edge vector E(j), extended linearly.
  CycloVector inflate(const CycloVector& p) const;

 private:
  int n_;
  std::vector<Patch> supers_;       // index k
  std::vector<CycloVector> edges_;  // E(j), j in [0, 4n)
};

/// Per-thread cached rule for n.
const SubstitutionRule& substitution_rule(int n);

Patch substitute(const Patch& patch, const SubstitutionRule& rule, std::size_t max_tiles = kDefaultMaxTiles);

struct Generation {
  int n = 2;
  int index = 0;
  Patch patch;
};

/// R2^1 for n >= 3; a single unit square for n = 2, where R2^1 is empty.
Patch seed_patch(int n);

/// g-fold substitution of the seed. Throws ResourceLimit before building a
/// generation larger than max_tiles.
Generation iterate_from_rose(int n, int g, std::size_t max_tiles = kDefaultMaxTiles);

/// Membership index for repeated pattern searches in one patch.
class TileSet {
 public:
  explicit TileSet(const Patch& p);
  bool contains(const PlacedRhombus& t) const { return set_.count(t) != 0; }
  bool contains_all(const Patch& q, const Isometry& pose) const;

 private:
  std::unordered_set<PlacedRhombus, RhombusHash> set_;
};

/// Rotation r in {0, 1} such that R2^1 turned by r and centred at `centre` is
/// a sub-patch, if any. (R2^1 is invariant under turning by 2.)
std::optional<int> rose_at(const TileSet& tiles, int n, const CycloVector& centre);

struct PrimitivityReport {
  int n = 2;
  /// contains[k][m]: super patch k contains prototile m.
  std::vector<std::vector<bool>> contains;
  bool all_shapes = false;
  /// Entry k-1: the second-order image of prototile k contains a full R2^1
  /// (empty when not run).
  std::vector<bool> rose_in_second_order;
  bool pass = false;
};

PrimitivityReport primitivity_check(int n, bool second_order = true);

/// Exact invariance of the generation under turning by 2 about the origin.
bool symmetry_check(const Generation& gen);

/// Rotation of the central rose of a patch built from the seed.
std::optional<int> central_rose_rotation(const Patch& p);

}  // namespace subrosa
