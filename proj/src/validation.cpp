#include "subrosa/validation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace subrosa {

namespace {

constexpr double kEps = 1e-9;

struct Pt {
  double x;
  double y;
};

Pt embed(const CycloVector& v) {
  const auto [x, y] = v.embed();
  return {x, y};
}

std::string fmt(Pt p) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

std::string describe(const PlacedRhombus& t) {
  return "tile k=" + std::to_string(t.k) + " rot=" + std::to_string(t.rot) + " at " + fmt(embed(t.pos));
}

std::array<Pt, 4> corners(const PlacedRhombus& t) {
  std::array<Pt, 4> out{};
  const auto v = t.vertices();
  for (std::size_t i = 0; i < 4; ++i) out[i] = embed(v[i]);
  return out;
}

// Unit-cell buckets over numeric coordinates.
class Grid {
 public:
  void add(Pt lo, Pt hi, std::size_t id) {
    for (long x = cell(lo.x); x <= cell(hi.x); ++x) {
      for (long y = cell(lo.y); y <= cell(hi.y); ++y) cells_[key(x, y)].push_back(id);
    }
  }
  template <class F>
  void visit(Pt lo, Pt hi, F&& f) const {
    for (long x = cell(lo.x); x <= cell(hi.x); ++x) {
      for (long y = cell(lo.y); y <= cell(hi.y); ++y) {
        auto it = cells_.find(key(x, y));
        if (it == cells_.end()) continue;
        for (std::size_t id : it->second) f(id);
      }
    }
  }

 private:
  static long cell(double v) { return static_cast<long>(std::floor(v)); }
  static long long key(long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }
  std::unordered_map<long long, std::vector<std::size_t>> cells_;
};

std::pair<Pt, Pt> bbox(const std::array<Pt, 4>& c, double pad) {
  Pt lo{c[0].x, c[0].y};
  Pt hi = lo;
  for (const Pt& p : c) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    hi.x = std::max(hi.x, p.x);
    hi.y = std::max(hi.y, p.y);
  }
  return {{lo.x - pad, lo.y - pad}, {hi.x + pad, hi.y + pad}};
}

bool interiors_overlap(const std::array<Pt, 4>& a, const std::array<Pt, 4>& b) {
  for (const auto* poly : {&a, &b}) {
    for (std::size_t i = 0; i < 2; ++i) {
      const Pt e{(*poly)[i + 1].x - (*poly)[i].x, (*poly)[i + 1].y - (*poly)[i].y};
      const Pt axis{-e.y, e.x};
      double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
      for (const Pt& p : a) {
        const double d = p.x * axis.x + p.y * axis.y;
        amin = std::min(amin, d);
        amax = std::max(amax, d);
      }
      for (const Pt& p : b) {
        const double d = p.x * axis.x + p.y * axis.y;
        bmin = std::min(bmin, d);
        bmax = std::max(bmax, d);
      }
      if (std::min(amax, bmax) - std::max(amin, bmin) < kEps) return false;
    }
  }
  return true;
}

CheckResult fail(CheckResult r, std::string why) {
  r.pass = false;
  r.counterexample = std::move(why);
  return r;
}

}  // namespace

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["pass"] = pass();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (c.pass) {
      e["counterexample"] = nullptr;
    } else {
      e["counterexample"] = c.counterexample;
    }
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

CheckResult check_edge_to_edge(std::span<const PlacedRhombus> tiles) {
  CheckResult r{"edge_to_edge", true, {}};
  std::map<CycloVector, Pt> verts;
  for (const auto& t : tiles) {
    for (const auto& v : t.vertices()) {
      const CycloVector c = v.canonical();
      if (!verts.count(c)) verts.emplace(c, embed(c));
    }
  }
  std::vector<Pt> pts;
  Grid grid;
  for (const auto& [c, p] : verts) {
    grid.add(p, p, pts.size());
    pts.push_back(p);
  }
  for (const auto& t : tiles) {
    const auto c = corners(t);
    for (std::size_t i = 0; i < 4; ++i) {
      const Pt a = c[i];
      const Pt b = c[(i + 1) % 4];
      const Pt lo{std::min(a.x, b.x) - kEps, std::min(a.y, b.y) - kEps};
      const Pt hi{std::max(a.x, b.x) + kEps, std::max(a.y, b.y) + kEps};
      std::optional<Pt> bad;
      grid.visit(lo, hi, [&](std::size_t id) {
        if (bad) return;
        const Pt p = pts[id];
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double s = ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
        const double dist = std::fabs((p.x - a.x) * dy - (p.y - a.y) * dx);
        if (dist < kEps && s > kEps && s < 1.0 - kEps) bad = p;
      });
      if (bad) return fail(r, "vertex " + fmt(*bad) + " lies inside an edge of " + describe(t));
    }
  }
  return r;
}

CheckResult check_edge_to_edge(const Patch& p) { return check_edge_to_edge(std::span<const PlacedRhombus>(p.tiles())); }

CheckResult check_vertex_sums(int n, std::span<const PlacedRhombus> tiles) {
  CheckResult r{"vertex_sums", true, {}};
  std::map<CycloVector, int> sum;
  std::map<std::pair<CycloVector, CycloVector>, int> directed;
  for (const auto& t : tiles) {
    const auto v = t.vertices();
    const auto labels = t.corner_labels();
    std::array<CycloVector, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = v[i].canonical();
    for (std::size_t i = 0; i < 4; ++i) {
      sum[c[i]] += labels[i];
      ++directed[{c[i], c[(i + 1) % 4]}];
    }
  }
  std::map<CycloVector, bool> on_boundary;
  for (const auto& [e, count] : directed) {
    if (!directed.count({e.second, e.first})) {
      on_boundary[e.first] = true;
      on_boundary[e.second] = true;
    }
  }
  for (const auto& [v, s] : sum) {
    if (s > 2 * n) return fail(r, "labels at " + fmt(embed(v)) + " sum to " + std::to_string(s));
    if (s != 2 * n && !on_boundary.count(v)) {
      return fail(r, "interior vertex " + fmt(embed(v)) + " has label sum " + std::to_string(s));
    }
  }
  return r;
}

CheckResult check_vertex_sums(const Patch& p) {
  return check_vertex_sums(p.n(), std::span<const PlacedRhombus>(p.tiles()));
}

CheckResult check_overlap_and_coverage(std::span<const PlacedRhombus> tiles, const std::optional<Polygon>& region) {
  CheckResult r{region ? "overlap_and_coverage" : "overlap", true, {}};
  std::map<std::pair<CycloVector, CycloVector>, std::size_t> owner;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto v = tiles[i].vertices();
    for (std::size_t e = 0; e < 4; ++e) {
      auto [it, fresh] = owner.emplace(std::pair{v[e].canonical(), v[(e + 1) % 4].canonical()}, i);
      if (!fresh) {
        return fail(r, describe(tiles[it->second]) + " and " + describe(tiles[i]) + " share a directed edge");
      }
    }
  }
  std::vector<std::array<Pt, 4>> polys;
  polys.reserve(tiles.size());
  Grid grid;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    polys.push_back(corners(tiles[i]));
    const auto [lo, hi] = bbox(polys.back(), 0.0);
    grid.add(lo, hi, i);
  }
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto [lo, hi] = bbox(polys[i], 0.0);
    std::optional<std::size_t> hit;
    grid.visit(lo, hi, [&](std::size_t j) {
      if (!hit && j > i && interiors_overlap(polys[i], polys[j])) hit = j;
    });
    if (hit) return fail(r, describe(tiles[i]) + " overlaps " + describe(tiles[*hit]));
  }
  if (region) {
    double total = 0.0;
    for (const auto& t : tiles) total += t.area();
    const double want = std::fabs(polygon_area(*region));
    if (want <= 0.0 || std::fabs(total - want) / want > 1e-6) {
      std::ostringstream os;
      os.precision(12);
      os << "tile area " << total << " differs from region area " << want;
      return fail(r, os.str());
    }
  }
  return r;
}

CheckResult check_overlap_and_coverage(const Patch& p, const std::optional<Polygon>& region) {
  return check_overlap_and_coverage(std::span<const PlacedRhombus>(p.tiles()), region);
}

CheckResult check_rotational_symmetry(const Patch& p, const CycloVector& twice_centre, int order) {
  const SymmetryContext ctx(p.n());
  if (order < 1 || ctx.modulus() % order != 0) {
    throw std::invalid_argument("check_rotational_symmetry: order " + std::to_string(order) +
                                " does not divide 4n = " + std::to_string(ctx.modulus()));
  }
  const int rot = ctx.modulus() / order;
  const CycloVector twice_t = (twice_centre - twice_centre.rotated(rot)).canonical();
  std::vector<std::int64_t> half;
  for (auto c : twice_t.coeffs()) {
    if (c % 2 != 0) throw std::invalid_argument("check_rotational_symmetry: rotation does not preserve the lattice");
    half.push_back(c / 2);
  }
  CheckResult r{"symmetry_order_" + std::to_string(order), true, {}};
  const Isometry g{rot, CycloVector(std::move(half))};
  for (const auto& t : p.tiles()) {
    const PlacedRhombus image = t.transformed(g);
    if (!p.contains(image)) return fail(r, "image of " + describe(t) + " is missing");
  }
  return r;
}

ValidationReport validate(const Patch& p, const std::optional<Polygon>& region) {
  ValidationReport rep;
  rep.checks.push_back(check_edge_to_edge(p));
  rep.checks.push_back(check_vertex_sums(p));
  rep.checks.push_back(check_overlap_and_coverage(p, region));
  return rep;
}

double polygon_area(const Polygon& poly) {
  double a = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& [x1, y1] = poly[i];
    const auto& [x2, y2] = poly[(i + 1) % poly.size()];
    a += x1 * y2 - x2 * y1;
  }
  return a / 2.0;
}

Polygon lattice_polygon(const std::vector<CycloVector>& corners, double scale) {
  Polygon poly;
  for (const auto& c : corners) {
    const auto [x, y] = c.embed();
    poly.emplace_back(x * scale, y * scale);
  }
  return poly;
}

}  // namespace subrosa
