#include "lelong/io.hpp"

#include <fstream>
#include <sstream>

namespace lelong {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::Parse, where + ": " + why);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }
std::string field(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

const Json& require_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

const Json& require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  return j;
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  require_object(j, where);
  auto it = j.find(key);
  if (it == j.end()) fail(field(where, key), "missing");
  return *it;
}

template <std::size_t N>
std::array<Rational, N> coords_from_json(const Json& j, const std::string& where) {
  require_array(j, where);
  if (j.size() != N) fail(where, "expected " + std::to_string(N) + " entries, got " + std::to_string(j.size()));
  std::array<Rational, N> out;
  bool nonzero = false;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = rational_from_json(j[i], at(where, i));
    nonzero = nonzero || out[i] != 0;
  }
  if (!nonzero) fail(where, "all coordinates are zero");
  return out;
}

template <std::size_t N>
Json coords_to_json(const std::array<Rational, N>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) fail(where, "expected a rational string or integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const ProjPoint& p) { return coords_to_json(p.coords()); }

Json to_json(const Curve& c) {
  Json j = Json::object();
  if (c.is_line()) {
    j["line"] = coords_to_json(c.line().coords());
  } else {
    j["conic"] = coords_to_json(c.conic().coeffs());
  }
  return j;
}

Json to_json(const Witness& w) {
  Json j = Json::object();
  if (const auto* l = std::get_if<ProjLine>(&w)) {
    j["line"] = coords_to_json(l->coords());
  } else {
    j["conic"] = coords_to_json(std::get<Conic>(w).coeffs());
  }
  return j;
}

Json to_json(const LevelSet& e) {
  Json j = Json::object();
  j["threshold"] = to_json(e.threshold);
  j["strict"] = e.strict;
  j["curves"] = Json::array();
  for (const auto& c : e.component_curves) j["curves"].push_back(to_json(c));
  j["points"] = Json::array();
  for (const auto& p : e.isolated_points) j["points"].push_back(to_json(p));
  return j;
}

Json to_json(const CoverVerdict& v) {
  Json j = Json::object();
  if (const auto* c = std::get_if<Covered>(&v)) {
    j["kind"] = "covered";
    j["witness"] = to_json(c->witness);
    j["omitted"] = c->omitted ? to_json(*c->omitted) : Json(nullptr);
  } else {
    const auto& n = std::get<NotCoverable>(v);
    j["kind"] = "not-coverable";
    Json o = Json::object();
    if (const auto* curve = std::get_if<Curve>(&n.obstruction)) {
      o["curve"] = to_json(*curve);
    } else {
      o["points"] = Json::array();
      for (const auto& p : std::get<std::vector<ProjPoint>>(n.obstruction)) o["points"].push_back(to_json(p));
    }
    j["obstruction"] = o;
  }
  return j;
}

ProjPoint point_from_json(const Json& j, const std::string& where) { return ProjPoint(coords_from_json<3>(j, where)); }

Curve curve_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  if (j.contains("line")) return Curve(ProjLine(coords_from_json<3>(j["line"], field(where, "line"))));
  if (j.contains("conic")) {
    try {
      return Curve(Conic(coords_from_json<6>(j["conic"], field(where, "conic"))));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      fail(field(where, "conic"), e.what());
    }
  }
  fail(where, "expected a \"line\" or \"conic\" entry");
}

Witness witness_from_json(const Json& j, const std::string& where) {
  require_object(j, where);
  if (j.contains("line")) return ProjLine(coords_from_json<3>(j["line"], field(where, "line")));
  if (j.contains("conic")) return Conic(coords_from_json<6>(j["conic"], field(where, "conic")));
  fail(where, "expected a \"line\" or \"conic\" entry");
}

LevelSet level_set_from_json(const Json& j, const std::string& where) {
  LevelSet e;
  e.threshold = rational_from_json(member(j, "threshold", where), field(where, "threshold"));
  e.strict = bool_from_json(member(j, "strict", where), field(where, "strict"));
  const std::string cw = field(where, "curves"), pw = field(where, "points");
  const Json& curves = require_array(member(j, "curves", where), cw);
  for (std::size_t i = 0; i < curves.size(); ++i) e.component_curves.push_back(curve_from_json(curves[i], at(cw, i)));
  const Json& points = require_array(member(j, "points", where), pw);
  for (std::size_t i = 0; i < points.size(); ++i) e.isolated_points.push_back(point_from_json(points[i], at(pw, i)));
  return e;
}

CoverVerdict verdict_from_json(const Json& j, const std::string& where) {
  const Json& kind = member(j, "kind", where);
  if (kind == "covered") {
    Covered c{witness_from_json(member(j, "witness", where), field(where, "witness")), std::nullopt};
    const Json& om = member(j, "omitted", where);
    if (!om.is_null()) c.omitted = point_from_json(om, field(where, "omitted"));
    return c;
  }
  if (kind == "not-coverable") {
    const std::string ow = field(where, "obstruction");
    const Json& o = require_object(member(j, "obstruction", where), ow);
    if (o.contains("curve")) return NotCoverable{curve_from_json(o["curve"], field(ow, "curve"))};
    const std::string pw = field(ow, "points");
    const Json& pts = require_array(member(o, "points", ow), pw);
    std::vector<ProjPoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(point_from_json(pts[i], at(pw, i)));
    return NotCoverable{std::move(out)};
  }
  fail(field(where, "kind"), "expected \"covered\" or \"not-coverable\"");
}

InstanceFile parse_instance(const Json& doc, bool require_unit_mass) {
  require_object(doc, "instance");
  std::vector<Curve> curves;
  const Json& lines = require_array(member(doc, "lines", ""), "lines");
  for (std::size_t i = 0; i < lines.size(); ++i) curves.emplace_back(ProjLine(coords_from_json<3>(lines[i], at("lines", i))));
  if (doc.contains("conics")) {
    const Json& conics = require_array(doc["conics"], "conics");
    for (std::size_t i = 0; i < conics.size(); ++i) {
      const Conic q(coords_from_json<6>(conics[i], at("conics", i)));
      if (q.rank() != 3) fail(at("conics", i), "reducible conic; enter its lines instead");
      curves.emplace_back(q);
    }
  }
  const Json& weights = require_array(member(doc, "weights", ""), "weights");
  if (weights.size() != curves.size()) {
    fail("weights", "expected " + std::to_string(curves.size()) + " entries (lines then conics), got " +
                        std::to_string(weights.size()));
  }
  std::vector<Component> comps;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Rational w = rational_from_json(weights[i], at("weights", i));
    if (w < 0) fail(at("weights", i), "negative weight " + to_string(w));
    for (std::size_t k = 0; k < i; ++k) {
      if (curves[k] == curves[i]) fail(i < lines.size() ? at("lines", i) : at("conics", i - lines.size()), "duplicate curve");
    }
    comps.push_back({w, curves[i]});
  }
  InstanceFile out{DivisorCurrent(std::move(comps)), std::nullopt};
  if (doc.contains("alpha") && !doc["alpha"].is_null()) {
    out.alpha = rational_from_json(doc["alpha"], "alpha");
    if (require_unit_mass) {
      if (const Rational m = mass(out.current); m != 1) fail("weights", "mass is " + to_string(m) + ", expected 1");
    }
  }
  return out;
}

Json instance_to_json(const DivisorCurrent& t, const std::optional<Rational>& alpha) {
  Json lines = Json::array(), conics = Json::array(), weights = Json::array();
  for (const auto& c : t.components())
    if (c.curve.is_line()) {
      lines.push_back(coords_to_json(c.curve.line().coords()));
      weights.push_back(to_json(c.weight));
    }
  for (const auto& c : t.components())
    if (c.curve.is_conic()) {
      conics.push_back(coords_to_json(c.curve.conic().coeffs()));
      weights.push_back(to_json(c.weight));
    }
  Json j = Json::object();
  j["lines"] = lines;
  if (!conics.empty()) j["conics"] = conics;
  j["weights"] = weights;
  if (alpha) j["alpha"] = to_json(*alpha);
  return j;
}

std::vector<ProjPoint> parse_points(const Json& doc) {
  const Json& pts = require_array(member(doc, "points", ""), "points");
  std::vector<ProjPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) out.push_back(point_from_json(pts[i], at("points", i)));
  return out;
}

Json points_to_json(std::span<const ProjPoint> points) {
  Json j = Json::object();
  j["points"] = Json::array();
  for (const auto& p : points) j["points"].push_back(to_json(p));
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                                      ": invalid JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Parse, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::Parse, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

Json level_set_report(const DivisorCurrent& t, const LevelSet& e) {
  Json j = to_json(e);
  Json nu = Json::array();
  for (const auto& p : e.isolated_points) nu.push_back(to_json(lelong_number(t, p)));
  j["lelong"] = nu;
  return j;
}

Json check_report(const TheoremInstance& inst, const TheoremReport& report) {
  Json j = Json::object();
  j["alpha"] = to_json(inst.alpha());
  j["beta"] = to_json(inst.beta());
  Json heavy = Json::array();
  for (const auto& p : inst.heavy_points()) {
    Json h = Json::object();
    h["point"] = to_json(p);
    h["lelong"] = to_json(lelong_number(inst.current(), p));
    heavy.push_back(h);
  }
  j["heavy_points"] = heavy;
  j["level_set"] = level_set_report(inst.current(), report.level);
  j["verdict"] = to_json(report.verdict);
  if (const auto* c = std::get_if<Covered>(&report.verdict)) {
    j["omitted_count"] = c->omitted ? 1 : 0;
    j["witness_through_heavy"] = report.witness_through_heavy;
  }
  return j;
}

Json run_report_to_json(const RunReport& r) {
  Json j = Json::object();
  j["tried"] = r.tried;
  j["valid"] = r.valid;
  j["skipped"] = Json::object();
  for (const auto& [k, v] : r.skipped) j["skipped"][k] = v;
  j["covered"] = r.covered;
  j["not_coverable"] = r.not_coverable;
  j["omissions"] = Json::object();
  for (const auto& [k, v] : r.omissions) j["omissions"][std::to_string(k)] = v;
  j["max_bits"] = r.max_bits;
  j["profile_hits"] = r.profile_hits;
  j["max_m2_deficit"] = r.max_m2_deficit;
  if (r.first_profile) {
    Json p = Json::object();
    p["instance"] = instance_to_json(r.first_profile->current, r.first_profile->alpha);
    p["level_points"] = r.first_profile->level_points;
    p["m2"] = r.first_profile->m2;
    j["first_profile"] = p;
  } else {
    j["first_profile"] = nullptr;
  }
  j["counterexamples"] = Json::array();
  for (const auto& c : r.counterexamples) {
    Json x = Json::object();
    x["index"] = c.index;
    x["instance"] = instance_to_json(c.current, c.alpha);
    x["level_set"] = to_json(c.level);
    x["verdict"] = to_json(CoverVerdict(c.verdict));
    j["counterexamples"].push_back(x);
  }
  return j;
}

RunReport run_report_from_json(const Json& j) {
  RunReport r;
  r.tried = count_from_json(member(j, "tried", ""), "tried");
  r.valid = count_from_json(member(j, "valid", ""), "valid");
  for (const auto& [k, v] : require_object(member(j, "skipped", ""), "skipped").items()) {
    r.skipped[k] = count_from_json(v, field("skipped", k));
  }
  r.covered = count_from_json(member(j, "covered", ""), "covered");
  r.not_coverable = count_from_json(member(j, "not_coverable", ""), "not_coverable");
  for (const auto& [k, v] : require_object(member(j, "omissions", ""), "omissions").items()) {
    int key = 0;
    try {
      key = std::stoi(k);
    } catch (const std::exception&) {
      fail(field("omissions", k), "key is not an integer");
    }
    r.omissions[key] = count_from_json(v, field("omissions", k));
  }
  r.max_bits = count_from_json(member(j, "max_bits", ""), "max_bits");
  r.profile_hits = count_from_json(member(j, "profile_hits", ""), "profile_hits");
  r.max_m2_deficit = static_cast<int>(count_from_json(member(j, "max_m2_deficit", ""), "max_m2_deficit"));
  const Json& fp = member(j, "first_profile", "");
  if (!fp.is_null()) {
    const InstanceFile inst = parse_instance(member(fp, "instance", "first_profile"), false);
    r.first_profile = SharpnessProfile{inst.current, inst.alpha.value_or(Rational(0)),
                                       count_from_json(member(fp, "level_points", "first_profile"), "first_profile.level_points"),
                                       static_cast<int>(count_from_json(member(fp, "m2", "first_profile"), "first_profile.m2"))};
  }
  const Json& cxs = require_array(member(j, "counterexamples", ""), "counterexamples");
  for (std::size_t i = 0; i < cxs.size(); ++i) {
    const std::string w = at("counterexamples", i);
    const InstanceFile inst = parse_instance(member(cxs[i], "instance", w), false);
    if (!inst.alpha) fail(field(w, "instance.alpha"), "missing");
    const CoverVerdict v = verdict_from_json(member(cxs[i], "verdict", w), field(w, "verdict"));
    if (is_covered(v)) fail(field(w, "verdict"), "counterexample must be not-coverable");
    r.counterexamples.push_back(Counterexample{count_from_json(member(cxs[i], "index", w), field(w, "index")),
                                               inst.current, *inst.alpha,
                                               level_set_from_json(member(cxs[i], "level_set", w), field(w, "level_set")),
                                               std::get<NotCoverable>(v)});
  }
  return r;
}

}  // namespace lelong
