#include <doctest.h>

#include "lelong/error.hpp"
#include "lelong/linalg.hpp"
#include "lelong/rational.hpp"
#include "lelong/univariate.hpp"
#include "oracles.hpp"

using namespace lelong;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("84/180") == Rational(7, 15));
  CHECK(to_string(parse_rational("84/180")) == "7/15");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("12")) == "12");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK(parse_rational("+3/9") == Rational(1, 3));
  for (const char* bad : {"1/0", "", "1/", "/2", "1.5", " 1", "1 ", "a", "1/-2", "--1", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  try {
    parse_rational("1/0");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
}

TEST_CASE("ratio reduces") {
  const Rational r = ratio(46, 180);
  CHECK(r.get_num() == 23);
  CHECK(r.get_den() == 90);
  CHECK(ratio(3, -6) == Rational(-1, 2));
}

TEST_CASE("bit size") {
  CHECK(bit_size(Rational(0)) <= 1);
  CHECK(bit_size(Rational(255, 2)) == 8);
  CHECK(bit_size(Rational(1, 1024)) == 11);
}

TEST_CASE("rank and determinant against permutation expansion") {
  oracle::Random rnd(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rnd.between(1, 5));
    Matrix m(n, n);
    std::vector<std::vector<Rational>> raw(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) raw[i][j] = m(i, j) = rnd.rational(3, 4);
    // Make some matrices singular by copying a scaled row.
    if (n > 1 && trial % 3 == 0) {
      for (std::size_t j = 0; j < n; ++j) raw[n - 1][j] = m(n - 1, j) = 2 * m(0, j);
    }
    const Rational d = oracle::leibniz_det(raw);
    CHECK(determinant(m) == d);
    CHECK((rank(m) == n) == (d != 0));
  }
}

TEST_CASE("nullspace vectors are annihilated and have the right count") {
  oracle::Random rnd(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(rnd.between(0, 5));
    const std::size_t cols = 6;
    Matrix m(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      RowVector r(cols);
      for (auto& x : r) x = rnd.between(-2, 2);
      m.push_row(r);
    }
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == cols);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("rank of empty and zero matrices") {
  CHECK(rank(Matrix(3)) == 0);
  CHECK(rank(Matrix(2, 3)) == 0);
  CHECK(nullspace(Matrix(3)).size() == 3);
}

TEST_CASE("rational roots of products of linear factors") {
  oracle::Random rnd(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> roots;
    Polynomial p({Rational(1)});
    const int k = static_cast<int>(rnd.between(1, 3));
    for (int i = 0; i < k; ++i) {
      const Rational r = rnd.rational(9, 7);
      roots.push_back(r);
      // multiply by (x - r)
      std::vector<Rational> c(p.coeffs().size() + 1);
      for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        c[j + 1] += p.coeffs()[j];
        c[j] -= r * p.coeffs()[j];
      }
      p = Polynomial(c);
    }
    // An irreducible quadratic factor adds no rational roots.
    if (trial % 2) {
      std::vector<Rational> c(p.coeffs().size() + 2);
      for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        c[j] += 2 * p.coeffs()[j];
        c[j + 2] += p.coeffs()[j];
      }
      p = Polynomial(c);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CHECK(rational_roots(p) == roots);
  }
}

TEST_CASE("polynomial division and gcd") {
  const Polynomial a({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  const Polynomial b({Rational(1), Rational(1)});                // x + 1
  const auto [q, r] = divide(a, b);
  CHECK(q == Polynomial({Rational(-1), Rational(1)}));
  CHECK(r.is_zero());
  CHECK(gcd(a, Polynomial({Rational(-2), Rational(2)})) == Polynomial({Rational(-1), Rational(1)}));
  CHECK(rational_roots(Polynomial({Rational(-2), Rational(0), Rational(1)})).empty());
}

TEST_CASE("simplest fraction in an interval") {
  CHECK(simplest_between(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_between(Rational(3, 10), Rational(4, 10)) == Rational(1, 3));
  CHECK(simplest_between(Rational(-7, 4), Rational(-5, 4)) == Rational(-3, 2));
  CHECK(simplest_between(Rational(-5, 4), Rational(-3, 4)) == Rational(-1));
  CHECK(simplest_between(Rational(2), Rational(2)) == Rational(2));
}
