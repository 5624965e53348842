#pragma once

// Rose patches: rings of unit rhombuses arranged around a single vertex.
//
// Rose R1 has n-fold symmetry and rings (2, n-2), (4, n-4), ...; rose R2^b has
// 2n-fold symmetry with rings (1, n-1), (2, n-2), ..., (n-1, 1) of which the b
// outermost are omitted. The roses are centred at the origin. Ring j of R2^b
// is bisected by the rays at doubled directions of parity n + j, so the rays
// at even directions pass through the rhombuses of the corner runs of sigma(n).

#include "subrosa/patch.hpp"

namespace subrosa {

struct RosePatch {
  int kind = 2;           ///< 1 or 2
  int omitted_rings = 0;  ///< b
  Patch tiles;
};

RosePatch rose_R1(int n);
RosePatch rose_R2(int n, int omitted_rings);

/// The part of R2^1 with corner_label * pi / n of angle, between the rays at
/// doubled directions 0 and 2 * corner_label, placed by `pose`. Rhombuses
/// bisected by a ray belong to the sector on the clockwise side of that ray,
/// i.e. the sector includes its counterclockwise bounding ray only.
Patch rose_sector(int n, int corner_label, const Isometry& pose);

/// Outer end of the run of R2^1 rhombuses bisected by the ray at even doubled
/// direction `ray` (for n = 2, the tip of the unit edge on that ray).
CycloVector rose_ray_point(int n, DoubledDirection ray);

/// Outer boundary of R2^1 walked clockwise about the centre from the ray
/// point at `from_ray` to the ray point at `to_ray` (both even).
Word rose_boundary_path(int n, DoubledDirection from_ray, DoubledDirection to_ray);

/// The same endpoints joined with the letters sorted into the monotone
/// clockwise order the full rose R2 would give. Used as a negative control.
Word rose_boundary_path_sorted(int n, DoubledDirection from_ray, DoubledDirection to_ray);

}  // namespace subrosa
