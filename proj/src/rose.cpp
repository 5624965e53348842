#include "subrosa/rose.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace subrosa {

namespace {

struct RingTile {
  PlacedRhombus tile;
  DoubledDirection radial;
};

// Rings 1..rings of R2 with 2n tiles each; ring j at radial directions of
// parity n + j, anchored at its corner j on the radial ray.
std::vector<RingTile> r2_rings(int n, int rings) {
  const SymmetryContext ctx(n);
  const int offset = n % 2;
  std::vector<RingTile> out;
  // anchors[phi] for the current ring
  std::vector<CycloVector> anchors(static_cast<std::size_t>(ctx.modulus()), CycloVector(n));
  for (int j = 1; j <= rings; ++j) {
    std::vector<CycloVector> next(static_cast<std::size_t>(ctx.modulus()), CycloVector(n));
    for (int i = 0; i < 2 * n; ++i) {
      const DoubledDirection phi = ctx.wrap(offset + j + 2 * i);
      CycloVector q(n);
      if (j > 1) {
        q = anchors[static_cast<std::size_t>(ctx.wrap(phi - 1))];
        q.add_unit(phi - 1 + (j - 1));
      }
      next[static_cast<std::size_t>(phi)] = q;
      out.push_back({PlacedRhombus::from_corner(n, q, phi - j, j), phi});
    }
    anchors = std::move(next);
  }
  return out;
}

const std::vector<RingTile>& r21_cached(int n) {
  thread_local std::map<int, std::vector<RingTile>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, r2_rings(n, n - 2)).first;
  return it->second;
}

}  // namespace

RosePatch rose_R1(int n) {
  if (n < 3) throw std::invalid_argument("rose_R1: n must be >= 3, got " + std::to_string(n));
  const SymmetryContext ctx(n);
  const int rings = (n - 1) / 2;
  std::vector<PlacedRhombus> tiles;
  std::vector<CycloVector> anchors(static_cast<std::size_t>(ctx.modulus()), CycloVector(n));
  for (int j = 1; j <= rings; ++j) {
    std::vector<CycloVector> next(static_cast<std::size_t>(ctx.modulus()), CycloVector(n));
    for (int i = 0; i < n; ++i) {
      const DoubledDirection phi = ctx.wrap(2 * (j - 1) + 4 * i);
      CycloVector q(n);
      if (j > 1) {
        q = anchors[static_cast<std::size_t>(ctx.wrap(phi - 2))];
        q.add_unit(phi - 2 + 2 * (j - 1));
      }
      next[static_cast<std::size_t>(phi)] = q;
      tiles.push_back(PlacedRhombus::from_corner(n, q, phi - 2 * j, 2 * j));
    }
    anchors = std::move(next);
  }
  return {1, 0, Patch(n, std::move(tiles))};
}

RosePatch rose_R2(int n, int omitted_rings) {
  SymmetryContext ctx(n);
  if (omitted_rings < 0 || omitted_rings > n - 1) {
    throw std::invalid_argument("rose_R2: omitted rings must be in [0, n-1], got " + std::to_string(omitted_rings));
  }
  std::vector<PlacedRhombus> tiles;
  for (const auto& rt : r2_rings(n, n - 1 - omitted_rings)) tiles.push_back(rt.tile);
  return {2, omitted_rings, Patch(n, std::move(tiles))};
}

Patch rose_sector(int n, int corner_label, const Isometry& pose) {
  const SymmetryContext ctx(n);
  if (corner_label < 1 || corner_label > n - 1) {
    throw std::invalid_argument("rose_sector: corner label must be in [1, n-1], got " + std::to_string(corner_label));
  }
  std::vector<PlacedRhombus> tiles;
  for (const auto& rt : r21_cached(n)) {
    const int gap = rt.radial;  // counterclockwise from ray 0
    if (gap > 0 && gap <= 2 * corner_label) tiles.push_back(rt.tile.transformed(pose));
  }
  return Patch(n, std::move(tiles));
}

CycloVector rose_ray_point(int n, DoubledDirection ray) {
  const SymmetryContext ctx(n);
  if (ray % 2 != 0) throw std::invalid_argument("rose_ray_point: ray must be an even direction");
  CycloVector p(n);
  if (n % 2 == 0) p.add_unit(ray);  // the unit edge of the zeroth ring
  for (int j = 2 - n % 2; j <= n - 2; j += 2) {
    p.add_unit(ray + j);
    p.add_unit(ray - j);
  }
  return p.canonical();
}

namespace {

struct RoseLoop {
  std::vector<CycloVector> vertices;  // canonical, vertices[i] starts word[i]
  Word word;                          // counterclockwise
};

const RoseLoop& r21_loop(int n) {
  thread_local std::map<int, RoseLoop> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PlacedRhombus> tiles;
  for (const auto& rt : r21_cached(n)) tiles.push_back(rt.tile);
  auto [start, word] = boundary_loop(Patch(n, std::move(tiles)));
  RoseLoop loop;
  CycloVector p = start;
  for (DoubledDirection d : word) {
    loop.vertices.push_back(p.canonical());
    p.add_unit(d);
  }
  loop.word = std::move(word);
  return cache.emplace(n, std::move(loop)).first->second;
}

}  // namespace

Word rose_boundary_path(int n, DoubledDirection from_ray, DoubledDirection to_ray) {
  const SymmetryContext ctx(n);
  if (n == 2) {
    // Degenerate rose: through the centre along the two unit edges.
    return {ctx.antiparallel(ctx.wrap(from_ray)), ctx.wrap(to_ray)};
  }
  const RoseLoop& loop = r21_loop(n);
  const CycloVector from = rose_ray_point(n, ctx.wrap(from_ray));
  const CycloVector to = rose_ray_point(n, ctx.wrap(to_ray));
  const auto find = [&](const CycloVector& p) {
    auto it = std::find(loop.vertices.begin(), loop.vertices.end(), p);
    if (it == loop.vertices.end()) throw std::logic_error("rose_boundary_path: ray point not on the rose boundary");
    return static_cast<std::size_t>(it - loop.vertices.begin());
  };
  const std::size_t len = loop.word.size();
  std::size_t i = find(from);
  const std::size_t stop = find(to);
  Word path;
  // Clockwise: walk the counterclockwise loop backwards, reversing each step.
  while (i != stop) {
    i = (i + len - 1) % len;
    path.push_back(ctx.antiparallel(loop.word[i]));
  }
  return path;
}

Word rose_boundary_path_sorted(int n, DoubledDirection from_ray, DoubledDirection to_ray) {
  const SymmetryContext ctx(n);
  Word path = rose_boundary_path(n, from_ray, to_ray);
  // Clockwise tangent at the starting ray is from_ray - n; letters decrease from there.
  const int top = ctx.wrap(static_cast<long long>(from_ray) - n);
  std::stable_sort(path.begin(), path.end(),
                   [&](DoubledDirection x, DoubledDirection y) { return ctx.wrap(top - x) < ctx.wrap(top - y); });
  return path;
}

}  // namespace subrosa
