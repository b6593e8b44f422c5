#include <doctest.h>

#include "lelong/named_examples.hpp"
#include "lelong/proofreplay.hpp"
#include "oracles.hpp"

using namespace lelong;

TEST_CASE("thresholds") {
  CHECK(threshold_a(Rational(1, 2)) == Rational(1, 3));
  CHECK_THROWS_AS(threshold_a(Rational(2, 5)), Error);
  Rational prev = threshold_a(Rational(41, 100));
  for (int k = 42; k < 100; ++k) {
    const Rational next = threshold_a(ratio(k, 100));
    CHECK(next > prev);
    prev = next;
  }
  for (int k = 41; k < 100; ++k) {
    const Rational a = ratio(k, 100);
    CHECK(4 * a + 6 * beta_prime(a) == 4);
  }
}

TEST_CASE("three-line auxiliary current") {
  const auto ex = build_example(ExampleId::FourLines);
  const std::vector<ProjPoint> probes{ex.point("x12"), ex.point("x34")};
  const auto r = aux_three_lines(ex.current, ProjPoint(1, 2, 3), ProjPoint(3, 1, 2), ProjPoint(2, 3, 1),
                                 Rational(9, 20), probes);
  CHECK(r.mass_check());
  CHECK(mass(r.constructed) == 1);
  CHECK(r.entries.size() == 2);
  // ν(T) = 1/2 ≥ α > α' gives ν(R) ≥ (2/(5α')) (1/2) > 2/5.
  CHECK(r.all_exceed());
  for (const auto& e : r.entries) CHECK(e.constructed >= 2 / (5 * Rational(9, 20)) * e.original);

  CHECK_THROWS_AS(aux_three_lines(ex.current, ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                  Rational(1, 2), probes),
                  Error);
  CHECK_THROWS_AS(aux_three_lines(ex.current, ProjPoint(1, 0, 0), ProjPoint(1, 0, 0), ProjPoint(1, 1, 0),
                                  Rational(1, 2), probes),
                  Error);
  CHECK_THROWS_AS(aux_three_lines(scale(ex.current, 2), ProjPoint(1, 2, 3), ProjPoint(3, 1, 2), ProjPoint(2, 3, 1),
                                  Rational(1, 2), probes),
                  Error);
  CHECK_THROWS_AS(aux_three_lines(ex.current, ProjPoint(1, 2, 3), ProjPoint(3, 1, 2), ProjPoint(2, 3, 1),
                                  Rational(2, 5), probes),
                  Error);
}

TEST_CASE("single-line auxiliary current") {
  const auto ex = build_example(ExampleId::Cevians);
  const Rational ap(9, 20);
  // A point on L with ν(T, p) above β' ends above 2/5.
  const ProjLine l = ex.line("L1");
  const std::vector<ProjPoint> probes{ex.point("q2"), ex.point("q3")};
  const auto r = aux_single_line(ex.current, l, ap, probes);
  CHECK(r.mass_check());
  CHECK((5 * ap - 2) / (5 * ap) + 2 / (5 * ap) == 1);
  for (const auto& e : r.entries) {
    CHECK(e.original > beta_prime(ap));
    CHECK(e.exceeds);
  }
  CHECK_THROWS_AS(aux_single_line(ex.current, l, Rational(2, 5), probes), Error);
}

TEST_CASE("residual rescale") {
  const auto ex = build_example(ExampleId::CollinearTriple);
  std::vector<ProjPoint> probes;
  for (const auto& p : ex.points) probes.push_back(p.point);
  const auto r = residual_rescale(ex.current, ex.line("L1"), probes);
  CHECK(r.a == ratio(46, 180));
  CHECK(r.mass_check());
  for (const auto& e : r.entries) CHECK(e.rescaled == e.closed_form);

  const auto zero = residual_rescale(ex.current, ProjLine(1, 2, 7), probes);
  CHECK(zero.a == 0);
  CHECK(zero.rescaled == ex.current);

  const DivisorCurrent full({{Rational(1), Curve(ProjLine(1, 0, 0))}});
  CHECK_THROWS_AS(residual_rescale(full, ProjLine(1, 0, 0), probes), Error);
}

TEST_CASE("rescaled points clear one half once a exceeds the threshold") {
  oracle::Random rnd(14);
  for (int i = 0; i < 50; ++i) {
    const Rational ap = Rational(2, 5) + ratio(rnd.between(1, 59), 100);
    const Rational bp = beta_prime(ap);
    // a strictly between threshold_a(ap) and 1 - bp.
    const Rational a = (threshold_a(ap) + (1 - bp)) / 2;
    const ProjLine l(0, 0, 1);
    const DivisorCurrent t({{a, Curve(l)},
                            {(1 - a) / 2, Curve(ProjLine(1, 0, 0))},
                            {(1 - a) / 2, Curve(ProjLine(0, 1, 0))}});
    REQUIRE(mass(t) == 1);
    const std::vector<ProjPoint> probes{ProjPoint(0, 0, 1)};
    const auto r = residual_rescale(t, l, probes, ap);
    CHECK(r.a_above_threshold);
    REQUIRE(r.entries.size() == 1);
    const auto& e = r.entries[0];
    CHECK(e.bound_applies);
    CHECK(e.exceeds_ratio_bound);
    CHECK(e.ratio_bound > Rational(1, 2));
    CHECK(e.exceeds_half);
    CHECK((2 - 2 * ap) / (4 - 4 * ap) == Rational(1, 2));
  }
}
