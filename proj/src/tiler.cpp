#include "subrosa/tiler.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "subrosa/edge_language.hpp"
#include "subrosa/rose.hpp"

namespace subrosa {

namespace {

// Reducer plus the vertex where each remaining letter starts.
class GeometricReducer {
 public:
  explicit GeometricReducer(const BoundaryWord& w)
      : ctx_(w.n), red_(w.n, w.letters, canonical_matching(w.n, w.letters)) {
    verts_ = w.vertices();
    verts_.pop_back();
    for (const auto& v : verts_) hashes_.push_back(v.hash());
  }

  CircularReducer& reducer() { return red_; }
  const CircularReducer& reducer() const { return red_; }
  std::size_t size() const { return verts_.size(); }
  const CycloVector& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
  std::size_t vertex_hash(std::size_t i) const { return hashes_[i % hashes_.size()]; }

  bool valid(const Move& m) const {
    if (m.kind == RuleKind::kCancel) return red_.matched_adjacent(m.pos);
    if (!red_.crossing_adjacent(m.pos)) return false;
    const int gap = ctx_.ccw_gap(red_.letter_at(m.pos), red_.letter_at((m.pos + 1) % size()));
    return gap > 0 && gap < ctx_.half_turn();
  }

  // Applies m; appends the placed rhombus for a swap.
  void apply(const Move& m, std::vector<PlacedRhombus>& out) {
    const std::size_t len = size();
    const std::size_t nxt = (m.pos + 1) % len;
    if (m.kind == RuleKind::kSwap) {
      const DoubledDirection x = red_.letter_at(m.pos);
      const DoubledDirection y = red_.letter_at(nxt);
      const int gap = ctx_.ccw_gap(x, y);
      if (gap % 2 != 0) {
        throw std::logic_error("tiler: swap of letters " + std::to_string(x) + "," + std::to_string(y) +
                               " is not a prototile corner");
      }
      out.push_back(PlacedRhombus::from_corner(ctx_.n(), verts_[m.pos], x, gap / 2));
      red_.apply(m);
      CycloVector mid = verts_[m.pos];
      mid.add_unit(y);
      verts_[nxt] = mid.canonical();
      hashes_[nxt] = verts_[nxt].hash();
      return;
    }
    red_.apply(m);
    const std::size_t lo = std::min(m.pos, nxt);
    const std::size_t hi = std::max(m.pos, nxt);
    verts_.erase(verts_.begin() + static_cast<long>(hi));
    verts_.erase(verts_.begin() + static_cast<long>(lo));
    hashes_.erase(hashes_.begin() + static_cast<long>(hi));
    hashes_.erase(hashes_.begin() + static_cast<long>(lo));
  }

 private:
  SymmetryContext ctx_;
  CircularReducer red_;
  std::vector<CycloVector> verts_;
  std::vector<std::size_t> hashes_;
};

struct Linear {
  int sign;
  int shift;
};

Linear linear_part(const LatticeMap& g) {
  return g.reflect ? Linear{-1, g.axis + g.rotation} : Linear{1, g.rotation};
}

LatticeMap from_linear(int n, Linear l, CycloVector t) {
  const SymmetryContext ctx(n);
  LatticeMap g;
  g.reflect = l.sign < 0;
  if (g.reflect) {
    g.axis = ctx.wrap(l.shift);
  } else {
    g.rotation = ctx.wrap(l.shift);
  }
  g.translation = t.canonical();
  return g;
}

// (g h)(p) = g(h(p))
LatticeMap compose(int n, const LatticeMap& g, const LatticeMap& h) {
  const Linear lg = linear_part(g);
  const Linear lh = linear_part(h);
  return from_linear(n, {lg.sign * lh.sign, lg.sign * lh.shift + lg.shift}, g.apply(h.translation));
}

auto map_key(const LatticeMap& g) { return std::tuple(g.reflect, g.axis, g.rotation, g.translation); }

}  // namespace

TilingResult tile_region(const BoundaryWord& w) {
  TilingResult res;
  res.patch = Patch(w.n);
  GeometricReducer gr(w);
  std::vector<PlacedRhombus> tiles;
  while (gr.size() > 0) {
    auto mv = gr.reducer().next_move(&res.failure);
    if (!mv) break;
    gr.apply(*mv, tiles);
    ++res.moves;
  }
  res.success = gr.size() == 0;
  if (res.success) res.failure.clear();
  res.patch = Patch(w.n, std::move(tiles));
  return res;
}

std::vector<LatticeMap> group_closure(int n, const std::vector<LatticeMap>& gens) {
  std::vector<LatticeMap> group{from_linear(n, {1, 0}, CycloVector(n))};
  std::set<decltype(map_key(group[0]))> seen{map_key(group[0])};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      LatticeMap h = compose(n, g, group[i]);
      if (seen.insert(map_key(h)).second) group.push_back(std::move(h));
      if (group.size() > 64) throw std::invalid_argument("group_closure: generators do not give a finite point group");
    }
  }
  return group;
}

std::vector<LatticeMap> super_rhombus_group(int n, int k) {
  const auto v = super_corners(n, k);
  std::vector<LatticeMap> gens;
  gens.push_back(from_linear(n, {1, 2 * n}, v[2]));          // half turn about the centre
  gens.push_back(from_linear(n, {-1, 2 * k}, CycloVector(n)));  // mirror in the V0-V2 diagonal
  if (2 * k == n) gens.push_back(from_linear(n, {1, n}, v[1]));  // quarter turn
  return group_closure(n, gens);
}

BoundaryWord unit_octagon() {
  BoundaryWord w;
  w.n = 4;
  for (int d = 0; d < 16; d += 2) w.letters.push_back(d);
  w.anchor = CycloVector(4);
  return w;
}

std::vector<LatticeMap> octagon_group() {
  const CycloVector e0 = CycloVector::unit(4, 0);
  return group_closure(4, {from_linear(4, {1, 2}, e0), from_linear(4, {-1, 8}, e0)});
}

namespace {

enum class OrbitStatus { kOk, kOverlap, kMissing };

// Positions of the images of move m under the group, or the reason they
// cannot all be rewritten at once.
OrbitStatus move_orbit(const GeometricReducer& gr, const Move& m, const std::vector<LatticeMap>& group,
                       std::set<std::size_t>& positions) {
  const std::size_t len = gr.size();
  const std::size_t nxt = (m.pos + 1) % len;
  const CycloVector& a = gr.vertex(m.pos);
  const CycloVector& mid = gr.vertex(nxt);
  const CycloVector& b = gr.vertex(nxt + 1);
  positions.clear();
  for (const auto& g : group) {
    const CycloVector gm = g.apply(mid).canonical();
    const CycloVector ga = g.apply(a).canonical();
    const CycloVector gb = g.apply(b).canonical();
    const std::size_t h = gm.hash();
    bool found = false;
    for (std::size_t j = 0; j < len && !found; ++j) {
      if (gr.vertex_hash(j) != h || gr.vertex(j) != gm) continue;
      const CycloVector& before = gr.vertex(j + len - 1);
      const CycloVector& after = gr.vertex(j + 1);
      if ((before == ga && after == gb) || (before == gb && after == ga)) {
        positions.insert((j + len - 1) % len);
        found = true;
      }
    }
    if (!found) return OrbitStatus::kMissing;
  }
  // Images must touch disjoint letters, and two swaps must not untangle the
  // same pair of chords from both ends.
  std::set<std::pair<std::size_t, std::size_t>> chord_pairs;
  const auto& red = gr.reducer();
  for (std::size_t p : positions) {
    if (positions.count((p + 1) % len) != 0) return OrbitStatus::kOverlap;
    if (!gr.valid({m.kind, p})) return OrbitStatus::kOverlap;
    if (m.kind == RuleKind::kSwap) {
      const std::size_t x = red.id_at(p);
      const std::size_t y = red.id_at((p + 1) % len);
      const std::size_t cx = std::min(x, red.partner_id(x));
      const std::size_t cy = std::min(y, red.partner_id(y));
      if (!chord_pairs.insert(std::minmax(cx, cy)).second) return OrbitStatus::kOverlap;
    }
  }
  return OrbitStatus::kOk;
}

}  // namespace

SymmetricTilingResult tile_region_symmetric(const BoundaryWord& w, const std::vector<LatticeMap>& group) {
  SymmetricTilingResult res;
  res.patch = Patch(w.n);
  GeometricReducer gr(w);
  std::vector<PlacedRhombus> tiles;
  std::set<std::size_t> positions;
  while (gr.size() > 0) {
    const std::size_t len = gr.size();
    std::vector<Move> candidates;
    for (std::size_t i = 0; i < len; ++i) {
      if (gr.valid({RuleKind::kCancel, i})) candidates.push_back({RuleKind::kCancel, i});
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (gr.valid({RuleKind::kSwap, i})) candidates.push_back({RuleKind::kSwap, i});
    }
    if (candidates.empty()) {
      gr.reducer().next_move(&res.failure);
      break;
    }
    bool applied = false;
    for (const Move& mv : candidates) {
      const OrbitStatus st = move_orbit(gr, mv, group, positions);
      if (st == OrbitStatus::kMissing) {
        res.failure = "boundary is not invariant under the group at position " + std::to_string(mv.pos);
        res.patch = Patch(w.n, std::move(tiles));
        return res;
      }
      if (st == OrbitStatus::kOverlap) {
        ++res.conflicts;
        continue;
      }
      // Descending order keeps the remaining positions valid; a pair wrapping
      // through position 0 goes last.
      std::vector<std::size_t> order(positions.rbegin(), positions.rend());
      std::stable_partition(order.begin(), order.end(), [&](std::size_t p) { return p + 1 < len; });
      for (std::size_t p : order) gr.apply({mv.kind, p + 1 < len ? p : gr.size() - 1}, tiles);
      ++res.orbits;
      applied = true;
      break;
    }
    if (!applied) {
      res.failure = "every available move has an overlapping orbit";
      break;
    }
  }
  res.success = gr.size() == 0;
  if (res.success) res.failure.clear();
  res.patch = Patch(w.n, std::move(tiles));
  return res;
}

Patch super_rose_sectors(int n, int k) {
  const auto v = super_corners(n, k);
  Patch out(n);
  const int labels[4] = {k, n - k, k, n - k};
  const int rots[4] = {0, 2 * k, 2 * n, 2 * n + 2 * k};
  for (int c = 0; c < 4; ++c) out.merge(rose_sector(n, labels[c], Isometry{rots[c], v[static_cast<std::size_t>(c)]}));
  return out;
}

Patch super_edge_tiles(int n, int k) {
  const auto v = super_corners(n, k);
  const EdgeSequence s = sigma(n);
  const std::size_t len = s.size();
  const std::size_t run = static_cast<std::size_t>(corner_run_length(n));
  const int dirs[4] = {0, 2 * k, 2 * n, 2 * n + 2 * k};
  Patch out(n);
  for (int c = 0; c < 4; ++c) {
    const DoubledDirection d = dirs[c];
    CycloVector p = v[static_cast<std::size_t>(c)];
    for (std::size_t t = 0; t < len; ++t) {
      const int m = s.labels[t];
      if (m > 0 && t >= len / 2 && t + run < len) out.insert(PlacedRhombus::from_corner(n, p, d - m, m));
      if (m == 0) {
        p.add_unit(d);
      } else {
        p.add_unit(d + m);
        p.add_unit(d - m);
      }
    }
  }
  return out;
}

Patch super_rhombus_patch(int n, int k, bool symmetric) {
  const BoundaryWord w = super_boundary(n, k);
  Patch interior(n);
  if (symmetric) {
    auto r = tile_region_symmetric(w, super_rhombus_group(n, k));
    if (!r.success) throw std::runtime_error("super_rhombus_patch: symmetric tiling failed: " + r.failure);
    interior = std::move(r.patch);
  } else {
    auto r = tile_region(w);
    if (!r.success) throw std::runtime_error("super_rhombus_patch: tiling failed: " + r.failure);
    interior = std::move(r.patch);
  }
  interior.merge(super_rose_sectors(n, k));
  interior.merge(super_edge_tiles(n, k));
  return interior;
}

}  // namespace subrosa
