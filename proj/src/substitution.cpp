#include "subrosa/substitution.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

#include "subrosa/boundary.hpp"
#include "subrosa/rose.hpp"
#include "subrosa/tiler.hpp"

namespace subrosa {

ResourceLimit::ResourceLimit(std::size_t projected, std::size_t cap)
    : std::runtime_error("tile cap exceeded: " + std::to_string(projected) + " tiles projected, cap " +
                         std::to_string(cap)),
      projected_(projected),
      cap_(cap) {}

SubstitutionRule::SubstitutionRule(int n, bool symmetric) : n_(n) {
  const SymmetryContext ctx(n);
  supers_.emplace_back(n);  // no prototile 0
  for (int k = 1; 2 * k <= n; ++k) supers_.push_back(super_rhombus_patch(n, k, symmetric));
  for (int j = 0; j < ctx.modulus(); ++j) edges_.push_back(super_edge_vector(n, j));
}

double SubstitutionRule::scale() const { return scaling_factor(n_); }

CycloVector SubstitutionRule::inflate(const CycloVector& p) const {
  CycloVector out(n_);
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    const std::int64_t c = p[j];
    if (c == 0) continue;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[j][i] != 0) out.add_unit(static_cast<DoubledDirection>(i), c * edges_[j][i]);
    }
  }
  return out.canonical();
}

const SubstitutionRule& substitution_rule(int n) {
  thread_local std::map<int, std::unique_ptr<SubstitutionRule>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SubstitutionRule>(n);
  return *slot;
}

Patch substitute(const Patch& patch, const SubstitutionRule& rule, std::size_t max_tiles) {
  if (patch.n() != rule.n()) throw std::invalid_argument("substitute: patch and rule disagree on n");
  std::size_t projected = 0;
  for (const auto& t : patch.tiles()) projected += rule.super_patch(t.k).size();
  if (projected > max_tiles) throw ResourceLimit(projected, max_tiles);
  std::vector<PlacedRhombus> out;
  out.reserve(projected);
  for (const auto& t : patch.tiles()) {
    const Isometry pose{t.rot, rule.inflate(t.pos)};
    for (const auto& s : rule.super_patch(t.k).tiles()) out.push_back(s.transformed(pose));
  }
  return Patch(rule.n(), std::move(out));
}

Patch seed_patch(int n) {
  if (n == 2) return Patch(2, {PlacedRhombus::from_corner(2, CycloVector(2), 0, 1)});
  return rose_R2(n, 1).tiles;
}

Generation iterate_from_rose(int n, int g, std::size_t max_tiles) {
  if (g < 0) throw std::invalid_argument("iterate_from_rose: generation must be >= 0");
  Generation gen{n, 0, seed_patch(n)};
  if (gen.patch.size() > max_tiles) throw ResourceLimit(gen.patch.size(), max_tiles);
  if (g == 0) return gen;
  const SubstitutionRule& rule = substitution_rule(n);
  while (gen.index < g) {
    gen.patch = substitute(gen.patch, rule, max_tiles);
    ++gen.index;
  }
  return gen;
}

TileSet::TileSet(const Patch& p) : set_(p.tiles().begin(), p.tiles().end()) {}

bool TileSet::contains_all(const Patch& q, const Isometry& pose) const {
  for (const auto& t : q.tiles()) {
    if (!contains(t.transformed(pose))) return false;
  }
  return true;
}

namespace {

const Patch& r21(int n) {
  thread_local std::map<int, Patch> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, rose_R2(n, 1).tiles).first;
  return it->second;
}

}  // namespace

std::optional<int> rose_at(const TileSet& tiles, int n, const CycloVector& centre) {
  const Patch& rose = r21(n);
  if (rose.empty()) return std::nullopt;
  for (int r = 0; r < 2; ++r) {
    if (tiles.contains_all(rose, Isometry{r, centre})) return r;
  }
  return std::nullopt;
}

PrimitivityReport primitivity_check(int n, bool second_order) {
  PrimitivityReport rep;
  rep.n = n;
  const SubstitutionRule& rule = substitution_rule(n);
  const int shapes = n / 2;
  rep.all_shapes = true;
  rep.contains.assign(static_cast<std::size_t>(shapes) + 1, std::vector<bool>(static_cast<std::size_t>(shapes) + 1));
  for (int k = 1; k <= shapes; ++k) {
    const auto counts = rule.super_patch(k).shape_counts();
    for (int m = 1; m <= shapes; ++m) {
      const bool has = counts[static_cast<std::size_t>(m)] > 0;
      rep.contains[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = has;
      rep.all_shapes = rep.all_shapes && has;
    }
  }
  rep.pass = rep.all_shapes;
  if (!second_order || n < 3) return rep;
  for (int k = 1; k <= shapes; ++k) {
    const Patch image = substitute(rule.super_patch(k), rule);
    const TileSet index(image);
    std::set<CycloVector> centres;
    for (const auto& t : image.tiles()) {
      for (const auto& v : t.vertices()) centres.insert(v.canonical());
    }
    bool found = false;
    for (const auto& c : centres) {
      if (rose_at(index, n, c)) {
        found = true;
        break;
      }
    }
    rep.rose_in_second_order.push_back(found);
    rep.pass = rep.pass && found;
  }
  return rep;
}

bool symmetry_check(const Generation& gen) {
  const Patch turned = gen.patch.transformed(Isometry{2, CycloVector(gen.n)});
  return turned.tiles() == gen.patch.tiles();
}

std::optional<int> central_rose_rotation(const Patch& p) {
  return rose_at(TileSet(p), p.n(), CycloVector(p.n()));
}

}  // namespace subrosa
