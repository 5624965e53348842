#include "subrosa/cyclo.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace subrosa {

SymmetryContext::SymmetryContext(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("symmetry parameter n must be >= 2, got " + std::to_string(n));
}

DoubledDirection SymmetryContext::wrap(long long d) const {
  const long long m = 4LL * n_;
  long long r = d % m;
  if (r < 0) r += m;
  return static_cast<DoubledDirection>(r);
}

Word SymmetryContext::turn(std::span<const DoubledDirection> w, int x) const {
  Word out;
  out.reserve(w.size());
  for (DoubledDirection d : w) out.push_back(wrap(static_cast<long long>(d) + x));
  return out;
}

double diagonal_measure(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("diagonal_measure: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  return 2.0 * std::cos(k * std::numbers::pi / (2.0 * n));
}

double scaling_factor(int n) {
  if (n < 2) throw std::invalid_argument("scaling_factor: n must be >= 2");
  if (n % 2 == 1) {
    const double h = std::numbers::pi / (2.0 * n);
    const double s = std::sin(h);
    return std::cos(h) / (s * s);
  }
  return 2.0 / (1.0 - std::cos(std::numbers::pi / n));
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division a / b for monic b.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int N) {
  thread_local std::map<int, Poly> cache;
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  Poly p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return cache.emplace(N, std::move(p)).first->second;
}

CycloVector::CycloVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 4 != 0) {
    throw std::invalid_argument("CycloVector: coefficient count must be a positive multiple of 4");
  }
}

CycloVector CycloVector::unit(int n, DoubledDirection d) {
  CycloVector v(n);
  v.add_unit(d);
  return v;
}

bool CycloVector::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

CycloVector& CycloVector::operator+=(const CycloVector& o) {
  if (coeffs_.empty()) coeffs_.assign(o.coeffs_.size(), 0);
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("CycloVector: mismatched n");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

CycloVector& CycloVector::operator-=(const CycloVector& o) {
  if (coeffs_.empty()) coeffs_.assign(o.coeffs_.size(), 0);
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("CycloVector: mismatched n");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

CycloVector& CycloVector::add_unit(DoubledDirection d, std::int64_t times) {
  const long long m = static_cast<long long>(coeffs_.size());
  long long r = d % m;
  if (r < 0) r += m;
  coeffs_[static_cast<std::size_t>(r)] += times;
  return *this;
}

CycloVector CycloVector::operator-() const {
  CycloVector r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloVector CycloVector::rotated(DoubledDirection d) const {
  const long long m = static_cast<long long>(coeffs_.size());
  CycloVector r(n());
  for (long long j = 0; j < m; ++j) {
    if (coeffs_[static_cast<std::size_t>(j)] == 0) continue;
    long long t = (j + d) % m;
    if (t < 0) t += m;
    r.coeffs_[static_cast<std::size_t>(t)] = coeffs_[static_cast<std::size_t>(j)];
  }
  return r;
}

CycloVector CycloVector::reflected(int axis) const {
  const long long m = static_cast<long long>(coeffs_.size());
  CycloVector r(n());
  for (long long j = 0; j < m; ++j) {
    if (coeffs_[static_cast<std::size_t>(j)] == 0) continue;
    long long t = (axis - j) % m;
    if (t < 0) t += m;
    r.coeffs_[static_cast<std::size_t>(t)] += coeffs_[static_cast<std::size_t>(j)];
  }
  return r;
}

CycloVector CycloVector::canonical() const {
  const int N = static_cast<int>(coeffs_.size());
  const Poly& phi = cyclotomic_polynomial(N);
  const std::size_t deg = phi.size() - 1;
  Poly rem(coeffs_.begin(), coeffs_.end());
  for (std::size_t i = rem.size(); i-- > deg;) {
    const std::int64_t c = rem[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) rem[i - deg + j] -= c * phi[j];
  }
  return CycloVector(std::move(rem));
}

std::pair<double, double> CycloVector::embed() const {
  const double m = static_cast<double>(coeffs_.size());
  double x = 0.0;
  double y = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / m;
    x += static_cast<double>(coeffs_[j]) * std::cos(a);
    y += static_cast<double>(coeffs_[j]) * std::sin(a);
  }
  return {x, y};
}

std::size_t CycloVector::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto c : coeffs_) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool points_equal(const CycloVector& p, const CycloVector& q, double eps) {
  const auto [px, py] = p.embed();
  const auto [qx, qy] = q.embed();
  return std::hypot(px - qx, py - qy) < eps;
}

// ---------------------------------------------------------------------------

CycloVector Isometry::apply(const CycloVector& p) const { return p.rotated(rotation) + translation; }

DoubledDirection Isometry::apply_direction(DoubledDirection d) const {
  return SymmetryContext(translation.n()).wrap(static_cast<long long>(d) + rotation);
}

Isometry Isometry::compose(const Isometry& other) const {
  return {SymmetryContext(translation.n()).wrap(static_cast<long long>(rotation) + other.rotation),
          other.translation.rotated(rotation) + translation};
}

CycloVector LatticeMap::apply(const CycloVector& p) const {
  CycloVector q = reflect ? p.reflected(axis) : p;
  return q.rotated(rotation) + translation;
}

DoubledDirection LatticeMap::apply_direction(int n, DoubledDirection d) const {
  const SymmetryContext ctx(n);
  const long long base = reflect ? static_cast<long long>(axis) - d : d;
  return ctx.wrap(base + rotation);
}

// ---------------------------------------------------------------------------

Prototile::Prototile(int n, int k) : n_(n), k_(k) {
  if (n < 2 || k < 1 || 2 * k > n) {
    throw std::invalid_argument("Prototile: need 1 <= k <= n/2, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
}

double Prototile::area() const { return std::sin(k_ * std::numbers::pi / n_); }

PlacedRhombus PlacedRhombus::from_corner(int n, const CycloVector& p, DoubledDirection x, int m) {
  if (m < 1 || m >= n) throw std::invalid_argument("PlacedRhombus: corner label out of range");
  const SymmetryContext ctx(n);
  int k = m;
  CycloVector anchor = p;
  DoubledDirection rot = ctx.wrap(x);
  if (2 * m > n) {
    k = n - m;
    anchor.add_unit(x);
    rot = ctx.wrap(static_cast<long long>(x) + 2 * m);
  }
  // Walk the corners labelled k until rot lands in the canonical window.
  const int window = (2 * k == n) ? n : 2 * n;
  const int step = (2 * k == n) ? 1 : 2;  // corners visited per re-anchoring
  while (rot >= window) {
    for (int s = 0; s < step; ++s) {
      const DoubledDirection out = (s % 2 == 0) ? rot : ctx.wrap(static_cast<long long>(rot) + 2 * k);
      anchor.add_unit(out);
    }
    rot = ctx.wrap(static_cast<long long>(rot) + (step == 1 ? 2 * k : 2 * n));
  }
  return {k, rot, anchor.canonical()};
}

std::vector<CycloVector> PlacedRhombus::vertices() const {
  std::vector<CycloVector> v;
  v.reserve(4);
  CycloVector p = pos;
  for (DoubledDirection d : edge_directions()) {
    v.push_back(p);
    p.add_unit(d);
  }
  return v;
}

std::vector<int> PlacedRhombus::corner_labels() const {
  const int nn = n();
  return {k, nn - k, k, nn - k};
}

std::vector<DoubledDirection> PlacedRhombus::edge_directions() const {
  const SymmetryContext ctx(n());
  const int nn = n();
  return {rot, ctx.wrap(rot + 2 * k), ctx.wrap(rot + 2 * nn), ctx.wrap(rot + 2 * k + 2 * nn)};
}

double PlacedRhombus::area() const { return std::sin(k * std::numbers::pi / n()); }

PlacedRhombus PlacedRhombus::transformed(const Isometry& g) const {
  return from_corner(n(), g.apply(pos), g.apply_direction(rot), k);
}

PlacedRhombus PlacedRhombus::transformed(const LatticeMap& g) const {
  const int nn = n();
  if (!g.reflect) return from_corner(nn, g.apply(pos), g.apply_direction(nn, rot), k);
  // A reflection reverses orientation: the image corner spans from the image
  // of rot + 2k counterclockwise to the image of rot.
  return from_corner(nn, g.apply(pos), g.apply_direction(nn, rot + 2 * k), k);
}

std::size_t RhombusHash::operator()(const PlacedRhombus& t) const {
  std::size_t h = t.pos.hash();
  h ^= static_cast<std::size_t>(t.rot * 131 + t.k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace subrosa
