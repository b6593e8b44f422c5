#include "lelong/projgeom.hpp"

#include <algorithm>
#include <sstream>

#include "lelong/combinatorics.hpp"
#include "lelong/linalg.hpp"
#include "lelong/univariate.hpp"

namespace lelong {

namespace {

Triple mat_vec(const Mat3& m, const Triple& v) {
  Triple out;
  for (int i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

Mat3 transpose(const Mat3& m) {
  Mat3 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

int mat_rank(const Mat3& m) {
  Matrix mm(3);
  for (const auto& row : m) mm.push_row({row[0], row[1], row[2]});
  return static_cast<int>(rank(mm));
}

// Two points spanning the line.
std::pair<Triple, Triple> line_basis(const ProjLine& l) {
  Matrix m(3);
  m.push_row({l[0], l[1], l[2]});
  const auto ns = nullspace(m);
  return {Triple{ns[0][0], ns[0][1], ns[0][2]}, Triple{ns[1][0], ns[1][1], ns[1][2]}};
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (mpz_perfect_square_p(x.get_num_mpz_t()) == 0 || mpz_perfect_square_p(x.get_den_mpz_t()) == 0) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  return Rational(n, d);
}

Triple combine(const Rational& s, const Triple& u, const Rational& t, const Triple& v) {
  return {s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]};
}

// Polar form B(u, v) with Q(u) = B(u, u).
Rational polar(const Conic& q, const Triple& u, const Triple& v) {
  const auto m = q.matrix();
  return dot(u, mat_vec(m, v));
}

void push_unique(std::vector<ProjPoint>& pts, const ProjPoint& p) {
  if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
}

}  // namespace

Rational dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Mat3& m) { return dot(m[0], cross(m[1], m[2])); }

// ---- Conic ----

Conic Conic::line_pair(const ProjLine& l1, const ProjLine& l2) {
  const auto& a = l1.coords();
  const auto& b = l2.coords();
  return Conic(Coeffs{a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[2] * b[0], a[1] * b[1],
                      a[1] * b[2] + a[2] * b[1], a[2] * b[2]});
}

Conic Conic::from_matrix(const std::array<Triple, 3>& m) {
  return Conic(Coeffs{m[0][0], 2 * m[0][1], 2 * m[0][2], m[1][1], 2 * m[1][2], m[2][2]});
}

Rational Conic::eval(const Triple& p) const {
  const auto& [x, y, z] = p;
  return q_[0] * x * x + q_[1] * x * y + q_[2] * x * z + q_[3] * y * y + q_[4] * y * z + q_[5] * z * z;
}

Triple Conic::gradient(const Triple& p) const {
  const auto& [x, y, z] = p;
  return {2 * q_[0] * x + q_[1] * y + q_[2] * z, q_[1] * x + 2 * q_[3] * y + q_[4] * z,
          q_[2] * x + q_[4] * y + 2 * q_[5] * z};
}

std::array<Triple, 3> Conic::matrix() const {
  const Rational h01 = q_[1] / 2, h02 = q_[2] / 2, h12 = q_[4] / 2;
  return {Triple{q_[0], h01, h02}, Triple{h01, q_[3], h12}, Triple{h02, h12, q_[5]}};
}

int Conic::rank() const { return mat_rank(matrix()); }

// ---- Curve ----

Curve::Curve(const Conic& conic) : value_(conic) {
  if (conic.rank() != 3) {
    throw Error(ErrorCode::ReducibleConic, "conic components must be irreducible; enter line pairs as two lines");
  }
}

Rational Curve::eval(const ProjPoint& p) const {
  if (is_line()) return dot(line().coords(), p.coords());
  return conic().eval(p.coords());
}

std::strong_ordering operator<=>(const Curve& a, const Curve& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (a.is_line()) return a.line() <=> b.line();
  return a.conic() <=> b.conic();
}

std::string describe(const ProjPoint& p) {
  std::ostringstream os;
  os << '(' << to_string(p[0]) << ':' << to_string(p[1]) << ':' << to_string(p[2]) << ')';
  return os.str();
}

std::string describe(const Curve& c) {
  std::ostringstream os;
  if (c.is_line()) {
    const auto& l = c.line();
    os << "line[" << to_string(l[0]) << ',' << to_string(l[1]) << ',' << to_string(l[2]) << ']';
  } else {
    os << "conic[";
    const auto& q = c.conic().coeffs();
    for (std::size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << to_string(q[i]);
    os << ']';
  }
  return os.str();
}

// ---- incidence ----

bool incidence(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coords()) == 0; }
bool incidence(const ProjPoint& p, const Conic& q) { return q.eval(p.coords()) == 0; }
bool incidence(const ProjPoint& p, const Curve& c) { return c.eval(p) == 0; }

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorCode::EqualPoints, "no unique line through " + describe(p) + " twice");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint intersect_lines(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw Error(ErrorCode::EqualLines, "a line does not meet itself in a point");
  return ProjPoint(cross(l1.coords(), l2.coords()));
}

int multiplicity(const ProjPoint& p, const Conic& q) {
  if (!incidence(p, q)) return 0;
  const Triple g = q.gradient(p.coords());
  return (g[0] == 0 && g[1] == 0 && g[2] == 0) ? 2 : 1;
}

int multiplicity(const ProjPoint& p, const Curve& c) {
  if (c.is_line()) return incidence(p, c.line()) ? 1 : 0;
  return multiplicity(p, c.conic());
}

// ---- intersections ----

std::vector<ProjPoint> intersect(const ProjLine& l, const Conic& q) {
  const auto [u, v] = line_basis(l);
  // Q(s u + t v) = a s² + b s t + c t².
  const Rational a = q.eval(u);
  const Rational b = 2 * polar(q, u, v);
  const Rational c = q.eval(v);
  if (a == 0 && b == 0 && c == 0) throw Error(ErrorCode::EqualLines, "line is a component of the conic");
  std::vector<ProjPoint> pts;
  if (a == 0) {
    // s = 0 is not a root unless c = 0; t = 0 (the point u) always is.
    push_unique(pts, ProjPoint(u));
    if (b != 0 || c != 0) push_unique(pts, ProjPoint(combine(c, u, -b, v)));
    std::sort(pts.begin(), pts.end());
    return pts;
  }
  const auto root = exact_sqrt(b * b - 4 * a * c);
  if (!root) throw Error(ErrorCode::IrrationalIntersection, "line meets conic in non-rational points");
  push_unique(pts, ProjPoint(combine((-b + *root) / (2 * a), u, 1, v)));
  push_unique(pts, ProjPoint(combine((-b - *root) / (2 * a), u, 1, v)));
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<ProjPoint> intersect(const Conic& q1, const Conic& q2) {
  const auto a = q1.matrix();
  const auto b = q2.matrix();
  auto member = [&](const Rational& lambda) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = a[i][j] + lambda * b[i][j];
    return m;
  };
  // det(A + λB) is a cubic in λ; recover its coefficients from four samples.
  std::array<Rational, 4> xs{-1, 0, 1, 2};
  std::array<Rational, 4> ys;
  for (int i = 0; i < 4; ++i) ys[i] = det3(member(xs[i]));
  std::vector<Rational> coeffs(4);
  for (int i = 0; i < 4; ++i) {
    // Lagrange basis polynomial for node i, expanded.
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (int k = 0; k < 4; ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }

  for (const auto& lambda : rational_roots(Polynomial(coeffs))) {
    const Conic degenerate = Conic::from_matrix(member(lambda));
    const int r = degenerate.rank();
    std::vector<ProjLine> lines;
    if (r == 1) {
      const auto m = degenerate.matrix();
      const auto& row = (m[0] != Triple{0, 0, 0}) ? m[0] : (m[1] != Triple{0, 0, 0}) ? m[1] : m[2];
      lines.emplace_back(row);
    } else if (r == 2) {
      Matrix mm(3);
      for (const auto& row : degenerate.matrix()) mm.push_row({row[0], row[1], row[2]});
      const auto ns = nullspace(mm);
      const ProjPoint vertex(Triple{ns[0][0], ns[0][1], ns[0][2]});
      std::optional<ProjLine> transversal;
      for (const ProjLine& cand : {ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1)}) {
        if (!incidence(vertex, cand)) {
          transversal = cand;
          break;
        }
      }
      std::vector<ProjPoint> feet;
      try {
        feet = intersect(*transversal, degenerate);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IrrationalIntersection) throw;
        continue;  // conjugate line pair; try another member
      }
      for (const auto& f : feet) lines.push_back(line_through(vertex, f));
    } else {
      continue;
    }
    std::vector<ProjPoint> pts;
    for (const auto& l : lines)
      for (const auto& p : intersect(l, q1)) push_unique(pts, p);
    std::sort(pts.begin(), pts.end());
    return pts;
  }
  throw Error(ErrorCode::IrrationalIntersection, "conics meet in non-rational points");
}

std::vector<ProjPoint> intersect(const Curve& a, const Curve& b) {
  if (a == b) throw Error(ErrorCode::EqualLines, "a curve does not meet itself in finitely many points");
  std::vector<ProjPoint> pts;
  if (a.is_line() && b.is_line()) {
    pts.push_back(intersect_lines(a.line(), b.line()));
  } else if (a.is_line()) {
    pts = intersect(a.line(), b.conic());
  } else if (b.is_line()) {
    pts = intersect(b.line(), a.conic());
  } else {
    pts = intersect(a.conic(), b.conic());
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// ---- Veronese rank tests ----

std::vector<Rational> veronese_row(const ProjPoint& p, int degree) {
  const auto& [x, y, z] = p.coords();
  if (degree == 1) return {x, y, z};
  if (degree == 2) return {x * x, x * y, x * z, y * y, y * z, z * z};
  throw Error(ErrorCode::UnsupportedDegree, "only degrees 1 and 2 are supported, got " + std::to_string(degree));
}

std::vector<Conic::Coeffs> conic_space(std::span<const ProjPoint> points) {
  Matrix m(6);
  for (const auto& p : points) m.push_row(veronese_row(p, 2));
  std::vector<Conic::Coeffs> out;
  for (const auto& v : nullspace(m)) out.push_back(Conic::Coeffs{v[0], v[1], v[2], v[3], v[4], v[5]});
  return out;
}

bool subset_on_curve_of_degree(std::span<const ProjPoint> points, int degree) {
  if (degree != 1 && degree != 2) {
    throw Error(ErrorCode::UnsupportedDegree, "only degrees 1 and 2 are supported, got " + std::to_string(degree));
  }
  const std::size_t monomials = degree == 1 ? 3 : 6;
  if (points.size() < monomials) return true;
  Matrix m(monomials);
  for (const auto& p : points) m.push_row(veronese_row(p, degree));
  return rank(m) <= monomials - 1;
}

std::vector<ProjPoint> unique_points(std::span<const ProjPoint> points) {
  std::vector<ProjPoint> out(points.begin(), points.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int m_j(std::span<const ProjPoint> points, int degree) {
  if (degree != 1 && degree != 2) {
    throw Error(ErrorCode::UnsupportedDegree, "only degrees 1 and 2 are supported, got " + std::to_string(degree));
  }
  const auto pts = unique_points(points);
  const std::size_t n = pts.size();
  // Any monomials-1 points lie on some curve of the degree.
  const std::size_t floor = std::min<std::size_t>(n, degree == 1 ? 2 : 5);
  std::vector<ProjPoint> subset;
  for (std::size_t k = n; k > floor; --k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
      subset.clear();
      for (auto i : idx) subset.push_back(pts[i]);
      return subset_on_curve_of_degree(subset, degree);
    });
    if (found) return static_cast<int>(k);
  }
  return static_cast<int>(floor);
}

// ---- transforms ----

ProjTransform::ProjTransform(const Mat3& m) : m_(m) {
  const Rational d = det3(m);
  if (d == 0) throw Error(ErrorCode::SingularMatrix, "projective transformation must be invertible");
  // Rows of M^-1 are cross products of the columns of M, over det M.
  const Mat3 t = transpose(m);
  Mat3 inv{cross(t[1], t[2]), cross(t[2], t[0]), cross(t[0], t[1])};
  for (auto& row : inv)
    for (auto& x : row) x /= d;
  inv_ = inv;
}

ProjTransform ProjTransform::identity() { return ProjTransform(Mat3{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}}); }

ProjPoint ProjTransform::operator()(const ProjPoint& p) const { return ProjPoint(mat_vec(m_, p.coords())); }

ProjLine ProjTransform::operator()(const ProjLine& l) const {
  return ProjLine(mat_vec(transpose(inv_), l.coords()));
}

Conic ProjTransform::operator()(const Conic& q) const {
  return Conic::from_matrix(mat_mul(transpose(inv_), mat_mul(q.matrix(), inv_)));
}

Curve ProjTransform::operator()(const Curve& c) const {
  if (c.is_line()) return Curve((*this)(c.line()));
  return Curve((*this)(c.conic()));
}

}  // namespace lelong
