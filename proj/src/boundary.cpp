#include "subrosa/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "subrosa/edge_language.hpp"
#include "subrosa/rose.hpp"

namespace subrosa {

std::vector<CycloVector> BoundaryWord::vertices() const {
  std::vector<CycloVector> v;
  v.reserve(letters.size() + 1);
  CycloVector p = anchor;
  v.push_back(p.canonical());
  for (DoubledDirection d : letters) {
    p.add_unit(d);
    v.push_back(p.canonical());
  }
  return v;
}

Word BoundaryWord::segment(char tag) const {
  const int idx = tag - 'A';
  if (segment_starts.size() != 9 || idx < 0 || idx >= 8) throw std::invalid_argument("segment: no such segment");
  return Word(letters.begin() + static_cast<long>(segment_starts[static_cast<std::size_t>(idx)]),
              letters.begin() + static_cast<long>(segment_starts[static_cast<std::size_t>(idx) + 1]));
}

Word BoundaryWord::half() const { return Word(letters.begin(), letters.begin() + static_cast<long>(letters.size() / 2)); }

bool BoundaryWord::has_antiparallel_halves() const {
  if (letters.size() % 2 != 0) return false;
  const SymmetryContext ctx(n);
  const std::size_t h = letters.size() / 2;
  for (std::size_t i = 0; i < h; ++i) {
    if (letters[i + h] != ctx.antiparallel(letters[i])) return false;
  }
  return true;
}

CycloVector super_edge_vector(int n, DoubledDirection d) {
  CycloVector v(n);
  for (int m : sigma(n).labels) {
    if (m == 0) {
      v.add_unit(d);
    } else {
      v.add_unit(d + m);
      v.add_unit(d - m);
    }
  }
  return v.canonical();
}

std::array<CycloVector, 4> super_corners(int n, int k) {
  const CycloVector a = super_edge_vector(n, 0);
  const CycloVector c = super_edge_vector(n, 2 * k);
  return {CycloVector(n), a, (a + c).canonical(), c};
}

Word edge_segment_letters(int n, DoubledDirection d) {
  const SymmetryContext ctx(n);
  Word out;
  for (int m : alpha(n).labels) {
    if (m == 0) {
      out.push_back(ctx.wrap(d));
    } else {
      out.push_back(ctx.wrap(d + m));
      out.push_back(ctx.wrap(d - m));
    }
  }
  return out;
}

BoundaryWord super_boundary(int n, int k, RoseSegments roses) {
  const SymmetryContext ctx(n);
  if (k < 1 || k > n - 1) throw std::invalid_argument("super_boundary: k must be in [1, n-1]");
  const int h = 2 * n;
  const int c = 2 * k;
  const auto rose = [&](int from, int to) {
    return roses == RoseSegments::kR21 ? rose_boundary_path(n, from, to) : rose_boundary_path_sorted(n, from, to);
  };
  // Edges A, C, E, G run along 0, 2k, 2n, 2k+2n; each rose segment walks
  // clockwise about its corner from the incoming edge's ray to the outgoing one.
  const std::array<Word, 8> segments = {
      edge_segment_letters(n, 0),  rose(h, c),
      edge_segment_letters(n, c),  rose(c + h, h),
      edge_segment_letters(n, h),  rose(0, c + h),
      edge_segment_letters(n, c + h), rose(c, 0),
  };
  BoundaryWord w;
  w.n = n;
  for (const auto& s : segments) {
    w.segment_starts.push_back(w.letters.size());
    for (DoubledDirection d : s) w.letters.push_back(ctx.wrap(d));
  }
  w.segment_starts.push_back(w.letters.size());
  w.anchor = rose_ray_point(n, 0);
  return w;
}

std::pair<DoubledDirection, DoubledDirection> normalize_pair(int n, DoubledDirection a, DoubledDirection b) {
  const SymmetryContext ctx(n);
  const auto signed_rep = [&](DoubledDirection d) {
    int r = ctx.wrap(d) % (2 * n);
    return r > n ? r - 2 * n : r;
  };
  int x = signed_rep(a);
  int y = signed_rep(b);
  if (x == y) throw std::invalid_argument("normalize_pair: directions are parallel or antiparallel");
  if (x > y) std::swap(x, y);
  return {ctx.wrap(x), ctx.wrap(y)};
}

std::string ProjectionWord::abstract() const {
  const SymmetryContext ctx(n);
  std::string s;
  for (DoubledDirection d : letters) {
    if (d == a) s += 'a';
    else if (d == b) s += 'b';
    else if (d == ctx.antiparallel(a)) s += 'A';
    else s += 'B';
  }
  return s;
}

ProjectionWord project(int n, std::span<const DoubledDirection> letters, DoubledDirection a, DoubledDirection b) {
  const SymmetryContext ctx(n);
  const auto [na, nb] = normalize_pair(n, a, b);
  ProjectionWord p;
  p.n = n;
  p.a = na;
  p.b = nb;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const DoubledDirection d = ctx.wrap(letters[i]);
    if (d == na || d == nb || d == ctx.antiparallel(na) || d == ctx.antiparallel(nb)) {
      p.letters.push_back(d);
      p.positions.push_back(i);
    }
  }
  return p;
}

ProjectionWord project(const BoundaryWord& w, DoubledDirection a, DoubledDirection b) {
  return project(w.n, w.letters, a, b);
}

Matching canonical_matching(int n, std::span<const DoubledDirection> letters) {
  const SymmetryContext ctx(n);
  std::vector<std::vector<std::size_t>> occ(static_cast<std::size_t>(2 * n));
  for (std::size_t i = 0; i < letters.size(); ++i) {
    occ[static_cast<std::size_t>(ctx.wrap(letters[i]) % (2 * n))].push_back(i);
  }
  Matching partner(letters.size());
  for (int c = 0; c < 2 * n; ++c) {
    const auto& idx = occ[static_cast<std::size_t>(c)];
    // +1 for direction c, -1 for its antiparallel; start the stack just after
    // the lowest prefix sum so it never underflows on the circle.
    long sum = 0;
    long low = 0;
    std::size_t cut = 0;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      sum += ctx.wrap(letters[idx[t]]) == c ? 1 : -1;
      if (sum < low) {
        low = sum;
        cut = t + 1;
      }
    }
    if (sum != 0) throw std::invalid_argument("canonical_matching: unbalanced word (direction " + std::to_string(c) + ")");
    std::vector<std::size_t> stack;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const std::size_t i = idx[(cut + t) % idx.size()];
      if (!stack.empty() && ctx.wrap(letters[stack.back()]) != ctx.wrap(letters[i])) {
        partner[i] = stack.back();
        partner[stack.back()] = i;
        stack.pop_back();
      } else {
        stack.push_back(i);
      }
    }
  }
  return partner;
}

int diam(DoubledDirection x, int n) {
  const int r = SymmetryContext(n).wrap(x) % (2 * n);
  return std::min(r, 2 * n - r);
}

DoubledDirection orient_s(DoubledDirection x, int n) {
  const SymmetryContext ctx(n);
  const int m = diam(x, n);
  const DoubledDirection d = ctx.wrap(x);
  if (d == ctx.wrap(m) || d == ctx.wrap(-m)) return d;
  return ctx.antiparallel(d);
}

bool balance_check(int n, std::span<const DoubledDirection> letters) {
  const SymmetryContext ctx(n);
  std::vector<long> count(static_cast<std::size_t>(ctx.modulus()), 0);
  for (DoubledDirection d : letters) ++count[static_cast<std::size_t>(ctx.wrap(d))];
  for (int d = 0; d < 2 * n; ++d) {
    if (count[static_cast<std::size_t>(d)] != count[static_cast<std::size_t>(d + 2 * n)]) return false;
  }
  return true;
}

namespace {

struct Pt {
  double x;
  double y;
};

double cross(Pt o, Pt a, Pt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

bool on_segment(Pt p, Pt a, Pt b, double eps) {
  return std::fabs(cross(a, b, p)) < eps && p.x >= std::min(a.x, b.x) - eps && p.x <= std::max(a.x, b.x) + eps &&
         p.y >= std::min(a.y, b.y) - eps && p.y <= std::max(a.y, b.y) + eps;
}

bool near(Pt a, Pt b, double eps) { return std::hypot(a.x - b.x, a.y - b.y) < eps; }

}  // namespace

SimplicityReport simple_check(const BoundaryWord& w) {
  const SymmetryContext ctx(w.n);
  SimplicityReport rep;
  const std::size_t L = w.letters.size();
  const auto verts = w.vertices();
  rep.closed = L > 0 && verts.back() == verts.front();
  if (!rep.closed) {
    rep.detail = "path does not close";
    return rep;
  }
  for (std::size_t i = 0; i < L; ++i) {
    if (w.letters[(i + 1) % L] == ctx.antiparallel(w.letters[i])) {
      rep.detail = "path backtracks at letter " + std::to_string(i + 1);
      return rep;
    }
  }
  std::vector<Pt> pts;
  pts.reserve(L);
  for (std::size_t i = 0; i < L; ++i) {
    const auto [x, y] = verts[i].embed();
    pts.push_back({x, y});
  }
  // Repeated vertices are allowed only as touchings whose corner wedges do not overlap.
  std::map<CycloVector, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < L; ++i) at[verts[i]].push_back(i);
  for (const auto& [p, idx] : at) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      for (std::size_t t = s + 1; t < idx.size(); ++t) {
        const std::size_t i = idx[s];
        const std::size_t j = idx[t];
        const DoubledDirection out_i = w.letters[i];
        const DoubledDirection back_i = ctx.antiparallel(w.letters[(i + L - 1) % L]);
        const DoubledDirection out_j = w.letters[j];
        const DoubledDirection back_j = ctx.antiparallel(w.letters[(j + L - 1) % L]);
        // Either the interior wedge of j sits in the exterior wedge of i
        // (two lobes of the region meet) or the exterior wedge of j sits in
        // the interior wedge of i (two parts of the outside meet).
        const int g1 = ctx.ccw_gap(back_i, out_j);
        const int g2 = ctx.ccw_gap(back_i, back_j);
        const int g3 = ctx.ccw_gap(back_i, out_i);
        const int h1 = ctx.ccw_gap(out_i, back_j);
        const int h2 = ctx.ccw_gap(out_i, out_j);
        const int h3 = ctx.ccw_gap(out_i, back_i);
        const bool lobes = 0 < g1 && g1 < g2 && g2 < g3;
        const bool pinch = 0 < h1 && h1 < h2 && h2 < h3;
        if (!lobes && !pinch) {
          rep.detail = "path crosses itself at repeated vertex " + std::to_string(i) + "/" + std::to_string(j);
          return rep;
        }
        ++rep.touching_vertices;
      }
    }
  }
  constexpr double eps = 1e-9;
  for (std::size_t i = 0; i < L; ++i) {
    const Pt a = pts[i];
    const Pt b = pts[(i + 1) % L];
    for (std::size_t j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;  // adjacent through the wrap
      const Pt c = pts[j];
      const Pt d = pts[(j + 1) % L];
      if (std::max(a.x, b.x) < std::min(c.x, d.x) - eps || std::max(c.x, d.x) < std::min(a.x, b.x) - eps ||
          std::max(a.y, b.y) < std::min(c.y, d.y) - eps || std::max(c.y, d.y) < std::min(a.y, b.y) - eps) {
        continue;
      }
      const double d1 = cross(c, d, a);
      const double d2 = cross(c, d, b);
      const double d3 = cross(a, b, c);
      const double d4 = cross(a, b, d);
      const bool proper = ((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
                          ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps));
      if (proper) {
        rep.detail = "edges " + std::to_string(i) + " and " + std::to_string(j) + " cross";
        return rep;
      }
      // Any contact other than coincident endpoints is a violation.
      for (const auto& [p, q1, q2] : {std::tuple{a, c, d}, std::tuple{b, c, d}, std::tuple{c, a, b}, std::tuple{d, a, b}}) {
        if (on_segment(p, q1, q2, eps) && !near(p, q1, eps) && !near(p, q2, eps)) {
          rep.detail = "edges " + std::to_string(i) + " and " + std::to_string(j) + " touch";
          return rep;
        }
      }
    }
  }
  rep.simple = true;
  return rep;
}

std::string boundary_text(const BoundaryWord& w) {
  std::ostringstream os;
  const auto emit = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) os << (i > from ? "," : "") << w.letters[i];
    os << '\n';
  };
  if (w.segment_starts.size() == 9) {
    for (int s = 0; s < 8; ++s) {
      os << static_cast<char>('A' + s) << ": ";
      emit(w.segment_starts[static_cast<std::size_t>(s)], w.segment_starts[static_cast<std::size_t>(s) + 1]);
    }
  } else {
    emit(0, w.letters.size());
  }
  return os.str();
}

}  // namespace subrosa
