#pragma once

// Exact plane geometry on the lattice spanned by the 4n-th roots of unity.
//
// Directions are stored doubled: an integer d modulo 4n denotes the angle
// d*pi/(2n). A unit vector in direction d is written e(d). Points are integer
// combinations of the e(d) (CycloVector), so every tile vertex produced by the
// library is represented exactly.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace subrosa {

/// Integer multiple of pi/(2n), always kept in [0, 4n) by SymmetryContext.
using DoubledDirection = int;
using Word = std::vector<DoubledDirection>;

class SymmetryContext {
 public:
  explicit SymmetryContext(int n);

  int n() const { return n_; }
  int modulus() const { return 4 * n_; }
  int half_turn() const { return 2 * n_; }

  DoubledDirection wrap(long long d) const;
  DoubledDirection antiparallel(DoubledDirection d) const { return wrap(d + 2 * n_); }
  /// Adds x to every letter; turn(w, 2n) is the antiparallel word.
  Word turn(std::span<const DoubledDirection> w, int x) const;
  Word antiparallel(std::span<const DoubledDirection> w) const { return turn(w, 2 * n_); }

  /// Counterclockwise angle from `from` to `to`, in [0, 4n).
  int ccw_gap(DoubledDirection from, DoubledDirection to) const { return wrap(to - from); }

 private:
  int n_;
};

/// d_n(k) = 2 cos(k pi / 2n): length of the diagonal bisecting corner k.
double diagonal_measure(int n, int k);

/// Linear enlargement of the substitution for symmetry parameter n.
double scaling_factor(int n);

class CycloVector {
 public:
  CycloVector() = default;
  explicit CycloVector(int n) : coeffs_(static_cast<std::size_t>(4 * n), 0) {}
  explicit CycloVector(std::vector<std::int64_t> coeffs);

  static CycloVector unit(int n, DoubledDirection d);

  int n() const { return static_cast<int>(coeffs_.size() / 4); }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t j) const { return coeffs_[j]; }
  bool is_zero() const;

  CycloVector& operator+=(const CycloVector& o);
  CycloVector& operator-=(const CycloVector& o);
  CycloVector& add_unit(DoubledDirection d, std::int64_t times = 1);
  friend CycloVector operator+(CycloVector a, const CycloVector& b) { return a += b; }
  friend CycloVector operator-(CycloVector a, const CycloVector& b) { return a -= b; }
  CycloVector operator-() const;

  /// Rotation about the origin by d * pi/(2n).
  CycloVector rotated(DoubledDirection d) const;
  /// Reflection in the line through the origin at doubled direction axis/2,
  /// i.e. e(j) -> e(axis - j).
  CycloVector reflected(int axis) const;

  /// Unique representative: the coefficient polynomial reduced modulo the
  /// 4n-th cyclotomic polynomial. Two vectors denote the same point iff their
  /// canonical forms are equal.
  CycloVector canonical() const;

  std::pair<double, double> embed() const;

  friend bool operator==(const CycloVector&, const CycloVector&) = default;
  friend auto operator<=>(const CycloVector& a, const CycloVector& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

  std::size_t hash() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

struct CycloHash {
  std::size_t operator()(const CycloVector& v) const { return v.hash(); }
};

/// Numeric point equality with tolerance eps (default 1e-9).
bool points_equal(const CycloVector& p, const CycloVector& q, double eps = 1e-9);

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int N);

/// Orientation-preserving lattice isometry p -> rotate(p, rotation) + translation.
struct Isometry {
  DoubledDirection rotation = 0;
  CycloVector translation;

  static Isometry identity(int n) { return {0, CycloVector(n)}; }

  CycloVector apply(const CycloVector& p) const;
  DoubledDirection apply_direction(DoubledDirection d) const;
  /// (this * other)(p) = this(other(p)).
  Isometry compose(const Isometry& other) const;
};

/// Any lattice isometry, possibly orientation-reversing:
/// p -> (reflect ? reflected(p, axis) : p) rotated, then translated.
struct LatticeMap {
  bool reflect = false;
  int axis = 0;           ///< used when reflect
  DoubledDirection rotation = 0;
  CycloVector translation;

  CycloVector apply(const CycloVector& p) const;
  DoubledDirection apply_direction(int n, DoubledDirection d) const;
};

/// The (k, n-k) unit rhombus.
class Prototile {
 public:
  Prototile(int n, int k);
  int k() const { return k_; }
  int n() const { return n_; }
  bool is_square() const { return 2 * k_ == n_; }
  double area() const;

  friend bool operator==(const Prototile&, const Prototile&) = default;

 private:
  int n_;
  int k_;
};

/// A unit rhombus (k, n-k) with its corner labelled k at `pos` and the edge
/// leaving that corner counterclockwise-first at doubled direction `rot`.
/// Edges read counterclockwise: rot, rot+2k, rot+2n, rot+2k+2n.
///
/// Values are canonical: rot is reduced to [0, 2n) ([0, n) for squares) by
/// re-anchoring at a symmetric corner, and pos is in canonical form, so equal
/// tiles compare equal.
struct PlacedRhombus {
  int k = 0;
  DoubledDirection rot = 0;
  CycloVector pos;

  /// Canonical tile with the corner of angle label m (1..n-1) at p, spanning
  /// counterclockwise from direction x to x + 2m.
  static PlacedRhombus from_corner(int n, const CycloVector& p, DoubledDirection x, int m);

  int n() const { return pos.n(); }
  /// Vertices counterclockwise starting at the anchor; labels k, n-k, k, n-k.
  std::vector<CycloVector> vertices() const;
  std::vector<int> corner_labels() const;
  std::vector<DoubledDirection> edge_directions() const;
  double area() const;

  PlacedRhombus transformed(const Isometry& g) const;
  PlacedRhombus transformed(const LatticeMap& g) const;

  friend bool operator==(const PlacedRhombus&, const PlacedRhombus&) = default;
  /// Ordering by (pos, rot, k).
  friend auto operator<=>(const PlacedRhombus& a, const PlacedRhombus& b) {
    if (auto c = a.pos <=> b.pos; c != 0) return c;
    if (auto c = a.rot <=> b.rot; c != 0) return c;
    return a.k <=> b.k;
  }
};

struct RhombusHash {
  std::size_t operator()(const PlacedRhombus& t) const;
};

}  // namespace subrosa
