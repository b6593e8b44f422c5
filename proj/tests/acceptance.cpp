// One PASS/FAIL line per acceptance criterion, each with its time budget.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "lelong/covercheck.hpp"
#include "lelong/harness.hpp"
#include "lelong/named_examples.hpp"
#include "lelong/proofreplay.hpp"
#include "oracles.hpp"

using namespace lelong;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<ProjPoint> labeled(const NamedExample& ex) {
  std::vector<ProjPoint> pts;
  for (const auto& p : ex.points) pts.push_back(p.point);
  return pts;
}

// Independent witness check: the conic vanishes on every level-set curve
// (three points of a line, or equal forms) and misses at most one point.
bool witness_ok(const LevelSet& e, const CoverVerdict& v) {
  const auto* c = std::get_if<Covered>(&v);
  if (!c) return false;
  const auto* q = std::get_if<Conic>(&c->witness);
  if (!q) return false;
  for (const auto& curve : e.component_curves) {
    if (curve.is_conic()) {
      if (!(curve.conic() == *q)) return false;
      continue;
    }
    // Points of the line from cross products with the coordinate axes.
    const Triple& l = curve.line().coords();
    std::vector<Triple> on;
    for (int i = 0; i < 3; ++i) {
      Triple e{0, 0, 0};
      e[static_cast<std::size_t>(i)] = 1;
      const Triple x{l[1] * e[2] - l[2] * e[1], l[2] * e[0] - l[0] * e[2], l[0] * e[1] - l[1] * e[0]};
      if (x[0] != 0 || x[1] != 0 || x[2] != 0) on.push_back(x);
    }
    std::size_t j = 1;
    while (ProjPoint(on[j]) == ProjPoint(on[0])) ++j;
    const Triple sum{on[0][0] + on[j][0], on[0][1] + on[j][1], on[0][2] + on[j][2]};
    for (const Triple& x : {on[0], on[j], sum}) {
      if (!oracle::on_form(q->coeffs(), ProjPoint(x))) return false;
    }
  }
  std::size_t missed = 0;
  for (const auto& p : e.isolated_points) missed += oracle::on_form(q->coeffs(), p) ? 0 : 1;
  return missed == (c->omitted ? 1u : 0u) && missed <= 1;
}

Outcome criterion1() {
  Outcome o;
  const auto ex = build_example(ExampleId::CollinearTriple);
  const std::vector<std::pair<const char*, int>> table{{"q1", 83}, {"q2", 84}, {"q3", 83}, {"p1", 68}, {"p2", 67},
                                                       {"p3", 67}, {"p4", 67}, {"p5", 67}, {"p6", 74}};
  for (const auto& [label, n] : table) {
    const Rational nu = lelong_number(ex.current, ex.point(label));
    o.require(nu == ratio(n, 180), std::string("nu(") + label + ") = " + to_string(nu));
  }
  o.require(mass(ex.current) == 1, "mass " + to_string(mass(ex.current)));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto ex = build_example(ExampleId::Cevians);
  const Rational beta = beta_of(ex.alpha);
  o.require(beta == Rational(1, 3), "beta " + to_string(beta));
  const LevelSet strict = level_set(ex.current, beta, true);
  std::vector<ProjPoint> qs{ex.point("q1"), ex.point("q2"), ex.point("q3"), ex.point("q4")};
  o.require(strict.finite() && strict.isolated_points == oracle::dedupe(qs), "strict set is not {q1..q4}");
  const auto sv = conic_cover_check(strict);
  o.require(is_covered(sv) && !std::get<Covered>(sv).omitted, "strict set not covered without omission");
  o.require(witness_ok(strict, sv), "strict witness fails re-check");
  const LevelSet loose = level_set(ex.current, beta, false);
  o.require(loose.finite() && loose.isolated_points.size() == 7, "non-strict set is not 7 points");
  o.require(m_j(loose.isolated_points, 2) == 5, "non-strict m_2 != 5");
  o.require(oracle::m2(loose.isolated_points) == 5, "oracle m_2 != 5");
  o.require(!is_covered(conic_cover_check(loose)), "non-strict set covered");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto ex = build_example(ExampleId::FourLines);
  const auto report = four_point_conic_check(TheoremInstance::from_current(ex.current, ex.alpha));
  const auto* c = std::get_if<Covered>(&report.verdict);
  o.require(c != nullptr && c->omitted.has_value(), "not covered with exactly one omission");
  o.require(witness_ok(report.level, report.verdict), "witness fails re-check");
  const auto six = report.level.isolated_points;
  o.require(six.size() == 6, "level set is not six points");
  // Every conic through five of the six points misses the sixth.
  int subsets = 0;
  for (std::size_t skip = 0; skip < six.size(); ++skip) {
    std::array<ProjPoint, 5> five{six[0], six[0], six[0], six[0], six[0]};
    std::size_t k = 0;
    for (std::size_t i = 0; i < six.size(); ++i)
      if (i != skip) five[k++] = six[i];
    const auto q = oracle::conic_through_five(five);
    const bool unique = std::any_of(q.begin(), q.end(), [](const Rational& x) { return x != 0; });
    o.require(unique, "five points impose fewer than five conditions");
    if (unique) o.require(!oracle::on_form(q, six[skip]), "a conic holds all six points");
    ++subsets;
  }
  o.require(subsets == 6, "expected six 5-subsets");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto ex = build_example(ExampleId::Triangle);
  const auto heavy = heavy_points(ex.current, ex.alpha);
  o.require(heavy.size() == 3, "heavy points " + std::to_string(heavy.size()));
  bool rejected = false;
  try {
    TheoremInstance::from_current(ex.current, ex.alpha);
  } catch (const Error& e) {
    rejected = e.code() == ErrorCode::InvalidInstance;
  }
  o.require(rejected, "precondition failure not reported");
  const LevelSet e = level_set(ex.current, Rational(2, 9), true);
  const auto v = conic_cover_check(e);
  const auto* n = std::get_if<NotCoverable>(&v);
  o.require(n != nullptr && std::holds_alternative<Curve>(n->obstruction), "no curve obstruction");
  if (n) o.require(obstruction_holds(e, *n, 2), "obstruction fails re-check");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto ex = build_example(ExampleId::CollinearTriple);
  const auto pts = labeled(ex);
  o.require(pts.size() == 9, "expected nine points");
  o.require(m_j(pts, 2) == 7, "m_2 = " + std::to_string(m_j(pts, 2)));
  o.require(oracle::m2(pts) == 7, "oracle m_2 = " + std::to_string(oracle::m2(pts)));
  return o;
}

Outcome criterion6() {
  Outcome o;
  GenSpec spec;
  spec.min_lines = 4;
  spec.max_lines = 7;
  spec.coefficient_bound = 5;
  spec.alphas = {Rational(9, 20), Rational(1, 2), Rational(3, 5)};
  spec.seed = 20261019;
  std::size_t valid = 0, covered = 0, tried = 0;
  for (std::size_t i = 0; valid < 1000 && i < 200000; ++i) {
    ++tried;
    const auto g = generate_one(spec, i);
    if (g.tag != TrialTag::Valid) continue;
    ++valid;
    const auto report = four_point_conic_check(*g.instance);
    if (witness_ok(report.level, report.verdict)) {
      ++covered;
    } else {
      o.require(false, "instance " + std::to_string(i) + " not covered");
    }
  }
  o.require(valid == 1000, "only " + std::to_string(valid) + " valid instances");
  o.require(covered == valid, std::to_string(valid - covered) + " failures");
  const RunReport r = run_until_valid(spec, 1000, 200000, 1);
  o.require(r.valid == 1000 && r.covered == 1000 && r.counterexamples.empty(), "harness run disagrees");
  o.detail = o.pass ? std::to_string(valid) + " valid of " + std::to_string(tried) + " tried" : o.detail;
  return o;
}

Outcome criterion7() {
  Outcome o;
  oracle::Random rnd(7007);
  for (int i = 0; i < 200; ++i) {
    const auto pts = rnd.structured_points(8);
    const int got = m_j(pts, 2), want = oracle::m2(pts);
    o.require(got == want, "m_2 mismatch on set " + std::to_string(i));
  }
  int covered = 0;
  for (int i = 0; i < 100; ++i) {
    LevelSet e;
    e.threshold = Rational(1, 3);
    e.strict = true;
    e.isolated_points = oracle::dedupe(rnd.structured_points(9));
    const auto v = conic_cover_check(e);
    o.require(is_covered(v) == oracle::coverable(e.isolated_points), "cover mismatch on set " + std::to_string(i));
    if (is_covered(v)) {
      ++covered;
      o.require(witness_ok(e, v), "witness fails re-check");
    }
  }
  o.require(covered > 0 && covered < 100, "level sets lack variety");
  return o;
}

DivisorCurrent random_current(oracle::Random& rnd, bool with_conic) {
  std::vector<Component> comps;
  std::vector<long> k;
  std::vector<Curve> curves;
  // Conics come as the image of xz - y^2 under an integer matrix; lines
  // through two of its rational points keep every intersection rational.
  if (with_conic) {
    const auto m = rnd.invertible(2);
    const Conic q = ProjTransform(m)(Conic(Conic::Coeffs{0, 0, 1, -1, 0, 0}));
    curves.emplace_back(q);
    const long n = rnd.between(2, 4);
    std::vector<ProjPoint> on;
    while (static_cast<long>(on.size()) < n + 1) on = oracle::dedupe([&] { auto v = on; v.push_back(rnd.on_conic(m, 3)); return v; }());
    for (long i = 0; i < n; ++i) {
      const Curve l(line_through(on[static_cast<std::size_t>(i)], on[static_cast<std::size_t>(i) + 1]));
      if (std::find(curves.begin(), curves.end(), l) == curves.end()) curves.push_back(l);
    }
  } else {
    const long n = rnd.between(3, 6);
    while (static_cast<long>(curves.size()) < n) {
      const Curve l(rnd.line(3));
      if (std::find(curves.begin(), curves.end(), l) == curves.end()) curves.push_back(l);
    }
  }
  long total = 0;
  for (const auto& c : curves) {
    k.push_back(rnd.between(1, 9));
    total += k.back() * c.degree();
  }
  for (std::size_t i = 0; i < curves.size(); ++i) comps.push_back({ratio(k[i], total), curves[i]});
  return DivisorCurrent(std::move(comps));
}

Outcome criterion8() {
  Outcome o;
  oracle::Random rnd(8008);
  for (int i = 0; i < 100; ++i) {
    const ProjTransform m(rnd.invertible(3));
    const DivisorCurrent t = random_current(rnd, i % 4 == 0);
    const DivisorCurrent mt = transform(m, t);
    const auto cands = candidate_points(t);
    for (const auto& p : cands) o.require(lelong_number(mt, m(p)) == lelong_number(t, p), "nu not invariant");
    const ProjPoint off = rnd.point(9);
    o.require(lelong_number(mt, m(off)) == lelong_number(t, off), "nu not invariant off the candidates");
    std::vector<ProjPoint> img;
    for (const auto& p : cands) img.push_back(m(p));
    o.require(m_j(img, 1) == m_j(cands, 1) && m_j(img, 2) == m_j(cands, 2), "m_j not invariant");
    const Rational th = Rational(1, 4);
    const LevelSet e = level_set(t, th, true), me = level_set(mt, th, true);
    o.require(is_covered(conic_cover_check(e)) == is_covered(conic_cover_check(me)), "verdict kind not invariant");
    o.require(e.isolated_points.size() == me.isolated_points.size() &&
                  e.component_curves.size() == me.component_curves.size(),
              "level set shape not invariant");
  }
  for (int i = 0; i < 200; ++i) {
    const DivisorCurrent t1 = random_current(rnd, i % 5 == 0), t2 = random_current(rnd, false);
    const Rational a = ratio(rnd.between(0, 7), rnd.between(1, 5));
    const DivisorCurrent sum = add(scale(t1, a), t2);
    std::vector<ProjPoint> probes = candidate_points(t1);
    for (const auto& p : candidate_points(t2)) probes.push_back(p);
    probes.push_back(rnd.point(6));
    for (const auto& p : probes) {
      o.require(lelong_number(sum, p) == a * lelong_number(t1, p) + lelong_number(t2, p), "linearity fails");
    }
    // Bezout bound along a line that is not a component.
    ProjLine l = rnd.line(3);
    bool is_component = false;
    for (const auto& c : t1.components()) is_component = is_component || (c.curve.is_line() && c.curve.line() == l);
    if (is_component) continue;
    std::vector<ProjPoint> on_l;
    bool rational = true;
    for (const auto& c : t1.components()) {
      try {
        for (const auto& p : intersect(Curve(l), c.curve)) on_l.push_back(p);
      } catch (const Error&) {
        rational = false;  // irrational meeting points carry no rational data to sum
      }
    }
    if (!rational) continue;
    Rational total = 0;
    for (const auto& p : oracle::dedupe(on_l)) total += lelong_number(t1, p);
    o.require(total <= mass(t1), "Bezout bound fails");
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  oracle::Random rnd(9009);
  int count = 0;
  while (count < 100) {
    const long den = rnd.between(3, 200);
    const Rational ap = ratio(rnd.between(1, den - 1), den);
    if (ap <= Rational(2, 5) || ap >= 1) continue;
    ++count;
    const Rational bp = beta_prime(ap);
    o.require(4 * ap + 6 * bp == 4, "4a' + 6b' != 4 at " + to_string(ap));
    const DivisorCurrent t = random_current(rnd, count % 3 == 0);
    const auto cands = candidate_points(t);
    // Three non-collinear points for the auxiliary lines.
    std::array<ProjPoint, 3> tri{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1)};
    const auto r3 = aux_three_lines(t, tri[0], tri[1], tri[2], ap, cands);
    o.require(r3.mass_check() && mass(r3.constructed) == 1, "three-line mass != 1");
    o.require(3 * (5 * ap - 2) / (15 * ap) + 2 / (5 * ap) == 1, "three-line weights do not sum to 1");
    const auto r1 = aux_single_line(t, t.components().back().curve.is_line() ? t.components().back().curve.line()
                                                                               : ProjLine(1, 1, 1),
                                    ap, cands);
    o.require(r1.mass_check() && mass(r1.constructed) == 1, "single-line mass != 1");
    // Heavy points stay above 2/5 when alpha > alpha'.
    for (const auto& e : r3.entries)
      if (e.original > ap) o.require(e.exceeds, "R drops a heavy point below 2/5");

    // Residual rescale chain with a just above the threshold.
    const Rational a = (threshold_a(ap) + (1 - bp)) / 2;
    const ProjLine l(0, 0, 1);
    const DivisorCurrent s({{a, Curve(l)}, {(1 - a) / 2, Curve(ProjLine(1, 0, 0))}, {(1 - a) / 2, Curve(ProjLine(0, 1, 0))}});
    const std::vector<ProjPoint> probes{ProjPoint(0, 0, 1), ProjPoint(1, 0, 0), ProjPoint(1, 1, 0)};
    const auto rr = residual_rescale(s, l, probes, ap);
    o.require(rr.mass_check() && mass(rr.rescaled) == 1, "rescaled mass != 1");
    o.require(rr.a_above_threshold, "a not above threshold");
    o.require((2 - 2 * ap) / (4 - 4 * ap) == Rational(1, 2), "(2-2a')/(4-4a') != 1/2");
    for (const auto& e : rr.entries) {
      o.require(e.rescaled == e.closed_form, "rescaled nu differs from closed form");
      if (e.bound_applies) {
        o.require(e.ratio_bound > Rational(1, 2) && e.exceeds_ratio_bound && e.exceeds_half, "1/2 chain fails");
      }
    }
    o.require(rr.entries[0].bound_applies, "probe off the line did not engage the bound");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "seven-line Lelong table and unit mass", 1, criterion1},
      {2, "cevian configuration: strict set covered, non-strict set not", 1, criterion2},
      {3, "four lines: one omission needed, no conic through all six", 1, criterion3},
      {4, "triangle: precondition failure and curve obstruction", 1, criterion4},
      {5, "nine labeled points have m_2 = 7", 5, criterion5},
      {6, "1000 random valid instances all covered", 60, criterion6},
      {7, "m_2 and cover verdicts match brute-force oracles", 30, criterion7},
      {8, "projective invariance, linearity and Bezout bound", 30, criterion8},
      {9, "proof-replay identities over 100 alpha'", 5, criterion9},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.detail = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s";
      o.pass = false;
    }
    all = all && o.pass;
    std::ostringstream line;
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << std::fixed << secs
         << " s)";
    if (!o.detail.empty()) line << " - " << o.detail;
    std::cout << line.str() << "\n";
  }
  return all ? 0 : 1;
}
