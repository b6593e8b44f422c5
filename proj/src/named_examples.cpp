#include "lelong/named_examples.hpp"

#include <algorithm>
#include <sstream>

#include "lelong/covercheck.hpp"

namespace lelong {

namespace {

using Seed = std::array<ProjPoint, 4>;

const std::vector<Seed>& seeds() {
  static const std::vector<Seed> list{
      Seed{ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)},
      Seed{ProjPoint(1, 2, 3), ProjPoint(-1, 1, 2), ProjPoint(2, -1, 1), ProjPoint(3, 1, -2)},
      Seed{ProjPoint(2, 3, 5), ProjPoint(-3, 1, 4), ProjPoint(1, -4, 2), ProjPoint(5, 2, -1)},
  };
  return list;
}

Curve as_curve(const ProjLine& l) { return Curve(l); }

NamedExample four_lines() {
  NamedExample ex{ExampleId::FourLines, {}, Rational(1, 2), {}, {}};
  const std::array<ProjLine, 4> lines{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), ProjLine(1, 1, 1)};
  std::vector<Component> comps;
  for (std::size_t i = 0; i < 4; ++i) {
    comps.push_back({Rational(1, 4), as_curve(lines[i])});
    ex.lines.push_back({"L" + std::to_string(i + 1), lines[i], {}});
  }
  ex.current = DivisorCurrent(std::move(comps));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const std::string label = "x" + std::to_string(i + 1) + std::to_string(j + 1);
      ex.points.push_back({label, intersect_lines(lines[i], lines[j]), Rational(1, 2)});
      ex.lines[i].expected_points.push_back(label);
      ex.lines[j].expected_points.push_back(label);
    }
  }
  return ex;
}

NamedExample triangle() {
  NamedExample ex{ExampleId::Triangle, {}, Rational(2, 3), {}, {}};
  const ProjLine l1(1, 0, 0), l2(0, 1, 0), l3(0, 0, 1);
  ex.current = DivisorCurrent({{Rational(1, 3), as_curve(l1)}, {Rational(1, 3), as_curve(l2)},
                               {Rational(1, 3), as_curve(l3)}});
  ex.points = {{"q1", intersect_lines(l3, l2), Rational(2, 3)},
               {"q2", intersect_lines(l1, l3), Rational(2, 3)},
               {"q3", intersect_lines(l1, l2), Rational(2, 3)}};
  ex.lines = {{"L1", l1, {"q2", "q3"}}, {"L2", l2, {"q1", "q3"}}, {"L3", l3, {"q1", "q2"}}};
  return ex;
}

NamedExample cevians(const Seed& s) {
  NamedExample ex{ExampleId::Cevians, {}, Rational(1, 2), {}, {}};
  const auto& [q1, q2, q3, q4] = s;
  const ProjLine l1 = line_through(q2, q3), l2 = line_through(q1, q3), l3 = line_through(q1, q2);
  const ProjLine l4 = line_through(q4, q1), l5 = line_through(q4, q2), l6 = line_through(q4, q3);
  const ProjPoint p1 = intersect_lines(l4, l1), p2 = intersect_lines(l5, l2), p3 = intersect_lines(l6, l3);
  std::vector<Component> comps;
  for (const auto& l : {l1, l2, l3, l4, l5, l6}) comps.push_back({Rational(1, 6), as_curve(l)});
  ex.current = DivisorCurrent(std::move(comps));
  const Rational half(1, 2), third(1, 3);
  ex.points = {{"q1", q1, half}, {"q2", q2, half}, {"q3", q3, half},  {"q4", q4, half},
               {"p1", p1, third}, {"p2", p2, third}, {"p3", p3, third}};
  ex.lines = {{"L1", l1, {"q2", "q3", "p1"}}, {"L2", l2, {"q1", "q3", "p2"}}, {"L3", l3, {"q1", "q2", "p3"}},
              {"L4", l4, {"q1", "q4", "p1"}}, {"L5", l5, {"q2", "q4", "p2"}}, {"L6", l6, {"q3", "q4", "p3"}}};
  return ex;
}

NamedExample collinear_triple(const Seed& s) {
  NamedExample ex{ExampleId::CollinearTriple, {}, ratio(81, 180), {}, {}};
  const auto& [p2, p3, p4, p5] = s;
  // Complete quadrangle on p2..p5; its diagonal points are q2, p1, p6.
  const ProjLine l1 = line_through(p2, p4), l2 = line_through(p3, p5);
  const ProjLine l3 = line_through(p2, p5), l4 = line_through(p3, p4);
  const ProjLine big2 = line_through(p2, p3), big3 = line_through(p4, p5);
  const ProjPoint q2 = intersect_lines(l1, l2);
  const ProjPoint p1 = intersect_lines(l3, l4);
  const ProjPoint p6 = intersect_lines(big2, big3);
  const ProjLine big1 = line_through(q2, p1);
  const ProjPoint q1 = intersect_lines(big1, big2);
  const ProjPoint q3 = intersect_lines(big1, big3);
  const auto w = [](int n) { return ratio(n, 180); };
  ex.current = DivisorCurrent({{w(46), as_curve(big1)},
                               {w(37), as_curve(big2)},
                               {w(37), as_curve(big3)},
                               {w(19), as_curve(l1)},
                               {w(19), as_curve(l2)},
                               {w(11), as_curve(l3)},
                               {w(11), as_curve(l4)}});
  ex.points = {{"q1", q1, w(83)}, {"q2", q2, w(84)}, {"q3", q3, w(83)}, {"p1", p1, w(68)}, {"p2", p2, w(67)},
               {"p3", p3, w(67)}, {"p4", p4, w(67)}, {"p5", p5, w(67)}, {"p6", p6, w(74)}};
  ex.lines = {{"L1", big1, {"q1", "q2", "q3", "p1"}}, {"L2", big2, {"q1", "p2", "p3", "p6"}},
              {"L3", big3, {"q3", "p4", "p5", "p6"}}, {"l1", l1, {"q2", "p2", "p4"}},
              {"l2", l2, {"q2", "p3", "p5"}},         {"l3", l3, {"p1", "p2", "p5"}},
              {"l4", l4, {"p1", "p3", "p4"}}};
  return ex;
}

bool seeded(ExampleId id) { return id == ExampleId::Cevians || id == ExampleId::CollinearTriple; }

NamedExample build_raw(ExampleId id, const Seed& s) {
  switch (id) {
    case ExampleId::FourLines: return four_lines();
    case ExampleId::Triangle: return triangle();
    case ExampleId::Cevians: return cevians(s);
    case ExampleId::CollinearTriple: return collinear_triple(s);
  }
  throw Error(ErrorCode::UnknownExample, "unknown example id");
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string point_list(const std::vector<ProjPoint>& pts) {
  std::vector<std::string> s;
  for (const auto& p : pts) s.push_back(describe(p));
  return join(s);
}

std::vector<ProjPoint> points_of(const NamedExample& ex, std::initializer_list<const char*> labels) {
  std::vector<ProjPoint> pts;
  for (const char* l : labels) pts.push_back(ex.point(l));
  return pts;
}

std::vector<ProjPoint> all_points(const NamedExample& ex) {
  std::vector<ProjPoint> pts;
  for (const auto& lp : ex.points) pts.push_back(lp.point);
  return pts;
}

struct FactList {
  std::vector<FactResult> facts;
  void add(std::string name, bool pass, std::string detail = {}) {
    facts.push_back({std::move(name), pass, std::move(detail)});
  }
};

// Runs fn and records a failed fact instead of propagating library errors,
// so a tampered instance yields a report rather than an exception.
template <class Fn>
void guarded(FactList& out, const std::string& name, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    out.add(name, false, e.what());
  }
}

std::string verdict_text(const CoverVerdict& v) {
  if (const auto* c = std::get_if<Covered>(&v)) {
    return c->omitted ? "Covered, omits " + describe(*c->omitted) : std::string("Covered, omits nothing");
  }
  const auto& n = std::get<NotCoverable>(v);
  if (const auto* curve = std::get_if<Curve>(&n.obstruction)) return "NotCoverable, curve " + describe(*curve);
  return "NotCoverable, points " + point_list(std::get<std::vector<ProjPoint>>(n.obstruction));
}

void common_facts(const NamedExample& ex, FactList& out) {
  out.add("incidence structure", incidence_audit(ex));
  const Rational m = mass(ex.current);
  out.add("mass = 1", m == 1, "mass " + to_string(m));
  bool table_ok = true;
  std::vector<std::string> cells;
  for (const auto& lp : ex.points) {
    const Rational nu = lelong_number(ex.current, lp.point);
    table_ok = table_ok && nu == lp.expected_lelong;
    cells.push_back(lp.label + "=" + to_string(nu));
  }
  out.add("Lelong table", table_ok, join(cells, " "));
}

void four_lines_facts(const NamedExample& ex, FactList& out) {
  guarded(out, "beta = 1/3", [&] { out.add("beta = 1/3", beta_of(ex.alpha) == Rational(1, 3)); });
  guarded(out, "strict level set", [&] {
    const LevelSet e = level_set(ex.current, beta_of(ex.alpha), true);
    out.add("strict level set is the six points", e.finite() && e.isolated_points == unique_points(all_points(ex)),
            point_list(e.isolated_points));
    bool three_each = true;
    for (const auto& ll : ex.lines) {
      const auto n = std::count_if(e.isolated_points.begin(), e.isolated_points.end(),
                                   [&](const ProjPoint& p) { return incidence(p, ll.line); });
      three_each = three_each && n == 3;
    }
    out.add("each line holds three level-set points", three_each);
    const int m2 = m_j(e.isolated_points, 2);
    out.add("m_2 = 5", m2 == 5, "m_2 " + std::to_string(m2));
  });
  guarded(out, "cover omits exactly one point", [&] {
    const auto report = four_point_conic_check(TheoremInstance::from_current(ex.current, ex.alpha));
    const auto* c = std::get_if<Covered>(&report.verdict);
    out.add("cover omits exactly one point", c != nullptr && c->omitted.has_value(), verdict_text(report.verdict));
  });
}

void cevian_facts(const NamedExample& ex, FactList& out) {
  guarded(out, "m_1(p1,p2,p3,q4) = 2", [&] {
    const int m1 = m_j(points_of(ex, {"p1", "p2", "p3", "q4"}), 1);
    out.add("m_1(p1,p2,p3,q4) = 2", m1 == 2, "m_1 " + std::to_string(m1));
  });
  guarded(out, "strict level set", [&] {
    const Rational beta = beta_of(ex.alpha);
    out.add("beta = 1/3", beta == Rational(1, 3));
    const LevelSet strict = level_set(ex.current, beta, true);
    out.add("strict level set = {q1..q4}",
            strict.finite() && strict.isolated_points == unique_points(points_of(ex, {"q1", "q2", "q3", "q4"})),
            point_list(strict.isolated_points));
    const auto report = four_point_conic_check(TheoremInstance::from_current(ex.current, ex.alpha));
    const auto* c = std::get_if<Covered>(&report.verdict);
    out.add("strict level set covered with no omission", c != nullptr && !c->omitted,
            verdict_text(report.verdict));
    const LevelSet loose = level_set(ex.current, beta, false);
    out.add("non-strict level set is all seven points",
            loose.finite() && loose.isolated_points == unique_points(all_points(ex)),
            point_list(loose.isolated_points));
    const int m2 = m_j(loose.isolated_points, 2);
    out.add("non-strict m_2 = 5", m2 == 5, "m_2 " + std::to_string(m2));
    const auto v = conic_cover_check(loose);
    out.add("non-strict level set not coverable", !is_covered(v), verdict_text(v));
    out.add("beta is sharp", beta_sharpness_check(ex.current, ex.alpha).sharp);
  });
}

void triangle_facts(const NamedExample& ex, FactList& out) {
  guarded(out, "beta = 2/9", [&] { out.add("beta = 2/9", beta_of(ex.alpha) == Rational(2, 9)); });
  guarded(out, "only three heavy points", [&] {
    const auto heavy = heavy_points(ex.current, ex.alpha);
    out.add("exactly three heavy points", heavy == unique_points(all_points(ex)), point_list(heavy));
    bool rejected = false;
    std::string detail;
    try {
      TheoremInstance::from_current(ex.current, ex.alpha);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::InvalidInstance;
      detail = e.what();
    }
    out.add("hypotheses rejected", rejected, detail);
  });
  guarded(out, "level set contains the lines", [&] {
    const LevelSet e = level_set(ex.current, beta_of(ex.alpha), true);
    out.add("strict level set is the three lines", e.component_curves.size() == 3 && e.isolated_points.empty());
    const auto v = conic_cover_check(e);
    const auto* n = std::get_if<NotCoverable>(&v);
    out.add("not coverable, curve obstruction", n != nullptr && std::holds_alternative<Curve>(n->obstruction),
            verdict_text(v));
  });
}

void collinear_triple_facts(const NamedExample& ex, FactList& out) {
  guarded(out, "alpha/beta", [&] {
    const Rational beta = beta_of(ex.alpha);
    out.add("alpha = 81/180, beta = 66/180", ex.alpha == ratio(81, 180) && beta == ratio(66, 180),
            "beta " + to_string(beta));
    bool between = true;
    for (const auto& lp : ex.points) {
      if (lp.label[0] != 'p') continue;
      const Rational nu = lelong_number(ex.current, lp.point);
      between = between && nu < ex.alpha && nu > beta;
    }
    out.add("alpha > nu(p_i) > beta", between);
  });
  guarded(out, "heavy points", [&] {
    const auto heavy = heavy_points(ex.current, ex.alpha);
    const auto qs = unique_points(points_of(ex, {"q1", "q2", "q3"}));
    out.add("heavy points are q1, q2, q3", heavy == qs, point_list(heavy));
    out.add("heavy points collinear", m_j(heavy, 1) == 3);
    bool rejected = false;
    std::string detail;
    try {
      TheoremInstance::from_current(ex.current, ex.alpha);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::InvalidInstance;
      detail = e.what();
    }
    out.add("hypotheses rejected", rejected, detail);
  });
  guarded(out, "level set", [&] {
    const LevelSet e = level_set(ex.current, beta_of(ex.alpha), true);
    out.add("strict level set is the nine points", e.finite() && e.isolated_points == unique_points(all_points(ex)),
            point_list(e.isolated_points));
    const int m2 = m_j(e.isolated_points, 2);
    out.add("m_2 of the nine points = 7", m2 == 7, "m_2 " + std::to_string(m2));
    const auto v = conic_cover_check(e);
    out.add("not coverable", !is_covered(v), verdict_text(v));
  });
}

}  // namespace

std::string_view example_name(ExampleId id) {
  switch (id) {
    case ExampleId::FourLines: return "four-lines";
    case ExampleId::Cevians: return "cevians";
    case ExampleId::Triangle: return "triangle";
    case ExampleId::CollinearTriple: return "collinear-triple";
  }
  return "unknown";
}

std::optional<ExampleId> parse_example_id(std::string_view name) {
  for (const auto id : kAllExamples) {
    if (example_name(id) == name) return id;
  }
  return std::nullopt;
}

const ProjPoint& NamedExample::point(std::string_view label) const {
  for (const auto& lp : points) {
    if (lp.label == label) return lp.point;
  }
  throw Error(ErrorCode::UnknownExample, "no point labeled " + std::string(label));
}

const ProjLine& NamedExample::line(std::string_view label) const {
  for (const auto& ll : lines) {
    if (ll.label == label) return ll.line;
  }
  throw Error(ErrorCode::UnknownExample, "no line labeled " + std::string(label));
}

bool incidence_audit(const NamedExample& ex) {
  const auto pts = all_points(ex);
  if (unique_points(pts).size() != pts.size()) return false;
  for (std::size_t i = 0; i < ex.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < ex.lines.size(); ++j) {
      if (ex.lines[i].line == ex.lines[j].line) return false;
    }
  }
  for (const auto& ll : ex.lines) {
    for (const auto& lp : ex.points) {
      const bool expected =
          std::find(ll.expected_points.begin(), ll.expected_points.end(), lp.label) != ll.expected_points.end();
      if (incidence(lp.point, ll.line) != expected) return false;
    }
  }
  return true;
}

NamedExample build_example_with_seed(ExampleId id, std::size_t seed) {
  if (seed >= seeds().size()) throw Error(ErrorCode::DegenerateSeed, "seed index out of range");
  NamedExample ex;
  try {
    ex = build_raw(id, seeds()[seed]);
  } catch (const Error& e) {
    // Joins or meets of coincident objects mean the seed is not generic.
    if (e.code() == ErrorCode::EqualPoints || e.code() == ErrorCode::EqualLines) {
      throw Error(ErrorCode::DegenerateSeed, e.what());
    }
    throw;
  }
  if (!incidence_audit(ex)) throw Error(ErrorCode::DegenerateSeed, "seed creates unintended incidences");
  return ex;
}

NamedExample build_example(ExampleId id) {
  if (!seeded(id)) return build_example_with_seed(id, 0);
  for (std::size_t s = 0; s < seeds().size(); ++s) {
    try {
      return build_example_with_seed(id, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateSeed) throw;
    }
  }
  throw Error(ErrorCode::DegenerateSeed, "no generic seed for " + std::string(example_name(id)));
}

std::vector<FactResult> verify_example(const NamedExample& ex) {
  FactList out;
  common_facts(ex, out);
  switch (ex.id) {
    case ExampleId::FourLines: four_lines_facts(ex, out); break;
    case ExampleId::Cevians: cevian_facts(ex, out); break;
    case ExampleId::Triangle: triangle_facts(ex, out); break;
    case ExampleId::CollinearTriple: collinear_triple_facts(ex, out); break;
  }
  return out.facts;
}

}  // namespace lelong
