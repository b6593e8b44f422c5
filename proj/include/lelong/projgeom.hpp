#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lelong/error.hpp"
#include "lelong/rational.hpp"

namespace lelong {

using Triple = std::array<Rational, 3>;

// Lexicographic order on rational sequences; mpq_class has no <=>.
template <std::size_t N>
std::strong_ordering compare_coords(const std::array<Rational, N>& a, const std::array<Rational, N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

/// Scales a nonzero coordinate vector so its first nonzero entry is 1.
/// Throws ZeroForm on the zero vector.
template <std::size_t N>
std::array<Rational, N> canonical(std::array<Rational, N> v) {
  for (auto& x : v) x.canonicalize();  // callers may build unreduced mpq values
  std::size_t lead = 0;
  while (lead < N && v[lead] == 0) ++lead;
  if (lead == N) throw Error(ErrorCode::ZeroForm, "all coordinates are zero");
  const Rational inv = 1 / v[lead];
  for (auto& x : v) x *= inv;
  return v;
}

/// Homogeneous triple up to scale, stored canonically so that equality of
/// projective objects is plain coordinate equality.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const Rational& a, const Rational& b, const Rational& c) : coords_(canonical(Triple{a, b, c})) {}
  explicit Homogeneous(const Triple& v) : coords_(canonical(v)) {}

  const Triple& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Homogeneous& a, const Homogeneous& b) {
    return compare_coords(a.coords_, b.coords_);
  }

 private:
  Triple coords_;
};

struct PointTag {};
struct LineTag {};
using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

Rational dot(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);

/// Quadratic form a00 x² + a01 xy + a02 xz + a11 y² + a12 yz + a22 z², up to
/// scale. Any nonzero form is admitted, so line pairs and double lines are
/// conics too.
class Conic {
 public:
  using Coeffs = std::array<Rational, 6>;

  explicit Conic(const Coeffs& q) : q_(canonical(q)) {}

  /// Product of two linear forms: the line pair l1 ∪ l2 (double line when equal).
  static Conic line_pair(const ProjLine& l1, const ProjLine& l2);
  /// Form with the given symmetric Gram matrix (off-diagonals are half the
  /// monomial coefficients).
  static Conic from_matrix(const std::array<Triple, 3>& m);

  const Coeffs& coeffs() const { return q_; }
  Rational eval(const Triple& p) const;
  Triple gradient(const Triple& p) const;
  std::array<Triple, 3> matrix() const;
  /// Rank of the Gram matrix: 3 irreducible, 2 line pair, 1 double line.
  int rank() const;

  friend bool operator==(const Conic& a, const Conic& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Conic& a, const Conic& b) { return compare_coords(a.q_, b.q_); }

 private:
  Coeffs q_;
};

/// A component curve of a divisor current: a line or an irreducible conic.
/// Reducible conics must be entered as their line components.
class Curve {
 public:
  Curve(const ProjLine& line) : value_(line) {}  // NOLINT(google-explicit-constructor)
  /// Throws ReducibleConic unless rank 3.
  Curve(const Conic& conic);  // NOLINT(google-explicit-constructor)

  int degree() const { return is_line() ? 1 : 2; }
  bool is_line() const { return std::holds_alternative<ProjLine>(value_); }
  bool is_conic() const { return !is_line(); }
  const ProjLine& line() const { return std::get<ProjLine>(value_); }
  const Conic& conic() const { return std::get<Conic>(value_); }
  /// Defining form evaluated at a representative of p.
  Rational eval(const ProjPoint& p) const;

  friend bool operator==(const Curve&, const Curve&) = default;
  friend std::strong_ordering operator<=>(const Curve& a, const Curve& b);

 private:
  std::variant<ProjLine, Conic> value_;
};

std::string describe(const ProjPoint& p);
std::string describe(const Curve& c);

bool incidence(const ProjPoint& p, const ProjLine& l);
bool incidence(const ProjPoint& p, const Conic& q);
bool incidence(const ProjPoint& p, const Curve& c);

/// Throws EqualPoints when p == q.
ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
/// Throws EqualLines when l1 == l2.
ProjPoint intersect_lines(const ProjLine& l1, const ProjLine& l2);

/// Multiplicity of p on the curve: 0 off it, 1 at smooth points, 2 at the
/// singular point of a line pair or anywhere on a double line.
int multiplicity(const ProjPoint& p, const Conic& q);
int multiplicity(const ProjPoint& p, const Curve& c);

/// Points of l ∩ q. Throws IrrationalIntersection when they are not
/// rational and EqualLines when l is a component of q.
std::vector<ProjPoint> intersect(const ProjLine& l, const Conic& q);
/// Points of q1 ∩ q2 for two irreducible conics, via a rational degenerate
/// member of their pencil. Throws IrrationalIntersection when no such split
/// exists or some intersection point is irrational.
std::vector<ProjPoint> intersect(const Conic& q1, const Conic& q2);
/// All common points of two distinct component curves.
std::vector<ProjPoint> intersect(const Curve& a, const Curve& b);

/// Monomial row of p for forms of degree j: (x, y, z) or
/// (x², xy, xz, y², yz, z²).
std::vector<Rational> veronese_row(const ProjPoint& p, int degree);

/// Basis of the quadratic forms vanishing on every point.
std::vector<Conic::Coeffs> conic_space(std::span<const ProjPoint> points);

/// True iff a nonzero form of degree j (1 or 2) vanishes on all points.
bool subset_on_curve_of_degree(std::span<const ProjPoint> points, int degree);

/// Largest number of the (distinct) points lying on one curve of degree j.
int m_j(std::span<const ProjPoint> points, int degree);

/// Sorted copy with duplicates removed.
std::vector<ProjPoint> unique_points(std::span<const ProjPoint> points);

using Mat3 = std::array<Triple, 3>;

/// Invertible projective transformation acting on points by x -> Mx, on
/// lines by the inverse transpose and on quadratic forms by congruence.
class ProjTransform {
 public:
  /// Throws SingularMatrix when det M = 0.
  explicit ProjTransform(const Mat3& m);

  static ProjTransform identity();

  const Mat3& matrix() const { return m_; }
  const Mat3& inverse() const { return inv_; }

  ProjPoint operator()(const ProjPoint& p) const;
  ProjLine operator()(const ProjLine& l) const;
  Conic operator()(const Conic& q) const;
  Curve operator()(const Curve& c) const;

 private:
  Mat3 m_;
  Mat3 inv_;
};

Rational det3(const Mat3& m);

}  // namespace lelong
