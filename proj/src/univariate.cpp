#include "lelong/univariate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace lelong {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divide(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

int sign_changes(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct roots in (lo, hi].
int roots_in(const std::vector<Polynomial>& seq, const Rational& lo, const Rational& hi) {
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  assert(!b.is_zero());
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<Rational> quot(a.degree() - db + 1);
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    const Rational f = rem[i] / b.leading();
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Rational simplest_between(Rational lo, Rational hi) {
  assert(lo <= hi);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return fl + 1;
  // lo and hi share the integer part; recurse on the reciprocal fractional parts.
  return fl + 1 / simplest_between(1 / (hi - fl), 1 / (lo - fl));
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  const Polynomial g = gcd(p, p.derivative());
  const Polynomial h = g.degree() > 0 ? divide(p, g).first : p;

  // Rational roots of h have denominators dividing the leading coefficient of
  // its primitive integer multiple.
  Integer den_lcm = 1;
  for (const auto& c : h.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& c : h.coeffs()) {
    const Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  const Rational lead_int = h.leading() * Rational(den_lcm) / Rational(content);
  const Rational max_den = abs(lead_int);
  const Rational width_goal = 1 / (max_den * max_den);

  Rational bound = 0;
  for (const auto& c : h.coeffs()) bound = std::max(bound, Rational(abs(c / h.leading())));
  bound += 1;

  const auto seq = sturm_sequence(h);
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int n = roots_in(seq, lo, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo < width_goal) {
      const Rational cand = simplest_between(lo, hi);
      if (cand > lo && h(cand) == 0) roots.push_back(cand);
      continue;
    }
    const Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace lelong
