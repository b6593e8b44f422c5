// Command-line front end. Exit codes: 0 success, 1 parse/usage/internal
// error or failed fact, 2 precondition unmet, 3 counterexample found.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "lelong/covercheck.hpp"
#include "lelong/harness.hpp"
#include "lelong/io.hpp"
#include "lelong/named_examples.hpp"

using namespace lelong;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kPrecondition = 2;
constexpr int kCounterexample = 3;

void emit(const Json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

ProjPoint parse_point_arg(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw Error(ErrorCode::Parse, "--point: expected x,y,z");
  Triple t;
  for (std::size_t i = 0; i < 3; ++i) t[i] = parse_rational(parts[i]);
  if (t[0] == 0 && t[1] == 0 && t[2] == 0) throw Error(ErrorCode::Parse, "--point: all coordinates are zero");
  return ProjPoint(t);
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, flag + ": " + e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::Parse, flag + ": empty list");
  return out;
}

std::string over_180(const Rational& r) {
  const Rational scaled = r * 180;
  if (scaled.get_den() != 1) return "";
  return scaled.get_num().get_str() + "/180";
}

int cmd_verify_examples(const std::vector<std::string>& overrides) {
  std::map<ExampleId, InstanceFile> replaced;
  for (const auto& spec : overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::Parse, "--from expects name=path, got " + spec);
    const auto id = parse_example_id(spec.substr(0, eq));
    if (!id) throw Error(ErrorCode::UnknownExample, spec.substr(0, eq));
    replaced[*id] = parse_instance(read_json_file(spec.substr(eq + 1)), false);
  }
  bool all = true;
  for (const auto id : kAllExamples) {
    NamedExample ex = build_example(id);
    if (auto it = replaced.find(id); it != replaced.end()) {
      ex.current = it->second.current;
      if (it->second.alpha) ex.alpha = *it->second.alpha;
    }
    std::cout << "== " << example_name(id) << " (alpha " << to_string(ex.alpha) << ")\n";
    const bool show_180 = id == ExampleId::CollinearTriple;
    for (const auto& p : ex.points) {
      const Rational nu = lelong_number(ex.current, p.point);
      std::cout << "  nu(" << p.label << ") = " << to_string(nu);
      if (show_180) std::cout << "  [" << over_180(nu) << "]";
      std::cout << "\n";
    }
    for (const auto& f : verify_example(ex)) {
      all = all && f.pass;
      std::cout << "  [" << (f.pass ? "PASS" : "FAIL") << "] " << f.name;
      if (!f.detail.empty()) std::cout << ": " << f.detail;
      std::cout << "\n";
    }
  }
  std::cout << (all ? "all facts hold\n" : "some facts failed\n");
  return all ? kOk : kError;
}

int cmd_check(const std::string& path, const std::string& alpha_flag, const std::string& out) {
  const InstanceFile file = parse_instance(read_json_file(path), false);
  std::optional<Rational> alpha = file.alpha;
  if (!alpha_flag.empty()) alpha = parse_rational(alpha_flag);
  if (!alpha) throw Error(ErrorCode::Parse, "no alpha in the file and no --alpha given");
  std::optional<TheoremInstance> inst;
  try {
    inst = TheoremInstance::from_current(file.current, *alpha);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidInstance && e.code() != ErrorCode::AlphaOutOfRange) throw;
    Json doc = Json::object();
    doc["alpha"] = to_string(*alpha);
    doc["status"] = "precondition-unmet";
    doc["reason"] = e.what();
    Json heavy = Json::array();
    if (e.code() == ErrorCode::InvalidInstance) {
      for (const auto& p : heavy_points(file.current, *alpha)) heavy.push_back(to_json(p));
    }
    doc["heavy_points"] = heavy;
    emit(doc, out);
    std::cerr << e.what() << "\n";
    return kPrecondition;
  }
  const TheoremReport report = four_point_conic_check(*inst);
  Json doc = check_report(*inst, report);
  doc["status"] = is_covered(report.verdict) ? "covered" : "counterexample";
  emit(doc, out);
  return is_covered(report.verdict) ? kOk : kCounterexample;
}

int cmd_lelong(const std::string& path, const std::string& point, const std::string& out) {
  const InstanceFile file = parse_instance(read_json_file(path), false);
  const ProjPoint p = parse_point_arg(point);
  Json doc = Json::object();
  doc["point"] = to_json(p);
  const Rational nu = lelong_number(file.current, p);
  doc["lelong"] = to_string(nu);
  if (const std::string s = over_180(nu); !s.empty()) doc["over_180"] = s;
  emit(doc, out);
  return kOk;
}

int cmd_levelset(const std::string& path, const std::string& threshold, bool strict, const std::string& out) {
  const InstanceFile file = parse_instance(read_json_file(path), false);
  const LevelSet e = level_set(file.current, parse_rational(threshold), strict);
  emit(level_set_report(file.current, e), out);
  return kOk;
}

int cmd_mj(const std::string& path, int degree, const std::string& out) {
  const auto pts = unique_points(parse_points(read_json_file(path)));
  Json doc = Json::object();
  doc["degree"] = degree;
  doc["points"] = pts.size();
  doc["m"] = m_j(pts, degree);
  emit(doc, out);
  return kOk;
}

struct SearchArgs {
  std::string lines = "4";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string alphas = "1/2";
  int coeff_bound = 5;
  int conics = 0;
  int denominator_bound = 12;
  bool uniform = false;
  unsigned threads = 0;
  std::string out;
};

int cmd_search(const SearchArgs& a) {
  if (a.trials == 0) throw Error(ErrorCode::InvalidSpec, "--trials must be at least 1");
  GenSpec spec;
  if (const auto dash = a.lines.find('-'); dash != std::string::npos) {
    spec.min_lines = std::stoi(a.lines.substr(0, dash));
    spec.max_lines = std::stoi(a.lines.substr(dash + 1));
  } else {
    spec.min_lines = spec.max_lines = std::stoi(a.lines);
  }
  spec.n_conics = a.conics;
  spec.coefficient_bound = a.coeff_bound;
  spec.denominator_bound = a.denominator_bound;
  spec.weights = a.uniform ? WeightScheme::Uniform : WeightScheme::RandomRational;
  spec.alphas = parse_rational_list(a.alphas, "--alpha");
  spec.seed = a.seed;
  const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  const RunReport r = run_suite(spec, a.trials, threads);
  emit(run_report_to_json(r), a.out);
  std::cerr << "tried " << r.tried << ", valid " << r.valid << ", covered " << r.covered << ", not coverable "
            << r.not_coverable << " in " << r.wall_seconds << " s\n";
  return r.counterexamples.empty() ? kOk : kCounterexample;
}

int cmd_sweep(SweepGrid grid, const std::string& alphas, const std::string& out) {
  grid.alphas = parse_rational_list(alphas, "--alpha");
  if (grid.threads == 0) grid.threads = std::max(1u, std::thread::hardware_concurrency());
  const RunReport r = exhaustive_sweep(grid);
  emit(run_report_to_json(r), out);
  std::cerr << "configurations " << r.tried << ", valid " << r.valid << ", profile hits " << r.profile_hits
            << " in " << r.wall_seconds << " s\n";
  return r.counterexamples.empty() ? kOk : kCounterexample;
}

int cmd_export(const std::string& name, const std::string& out) {
  const auto id = parse_example_id(name);
  if (!id) throw Error(ErrorCode::UnknownExample, name);
  const NamedExample ex = build_example(*id);
  emit(instance_to_json(ex.current, ex.alpha), out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for conic covers of Lelong level sets of divisor currents"};
  app.require_subcommand(1);

  std::vector<std::string> overrides;
  auto* verify = app.add_subcommand("verify-examples", "Rebuild the four named examples and check every fact");
  verify->add_option("--from", overrides, "Replace an example's current: name=instance.json");

  std::string path, alpha, out, point, threshold;
  bool strict = false;
  int degree = 2;

  auto* check = app.add_subcommand("check", "Decide the conic cover of the strict level set at beta");
  check->add_option("instance", path, "Instance JSON")->required();
  check->add_option("--alpha", alpha, "Override alpha, p/q");
  check->add_option("--out", out, "Report path (default stdout)");

  auto* lelong = app.add_subcommand("lelong", "Lelong number at a point");
  lelong->add_option("instance", path)->required();
  lelong->add_option("--point", point, "x,y,z")->required();
  lelong->add_option("--out", out);

  auto* levelset = app.add_subcommand("levelset", "Upper level set of the current");
  levelset->add_option("instance", path)->required();
  levelset->add_option("--threshold", threshold, "p/q")->required();
  levelset->add_flag("--strict", strict, "Use > instead of >=");
  levelset->add_option("--out", out);

  auto* mj = app.add_subcommand("mj", "Most points on one curve of the given degree");
  mj->add_option("points", path, "Points JSON")->required();
  mj->add_option("--degree", degree)->check(CLI::Range(1, 2));
  mj->add_option("--out", out);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Randomized search for counterexamples");
  search->add_option("--lines", sa.lines, "Line count N or range N-M");
  search->add_option("--trials", sa.trials);
  search->add_option("--seed", sa.seed);
  search->add_option("--alpha", sa.alphas, "Comma-separated list of alphas");
  search->add_option("--coeff-bound", sa.coeff_bound);
  search->add_option("--conics", sa.conics);
  search->add_option("--denominator-bound", sa.denominator_bound);
  search->add_flag("--uniform", sa.uniform, "Equal weights");
  search->add_option("--threads", sa.threads, "0 = all cores");
  search->add_option("--out", sa.out);

  SweepGrid grid;
  std::string sweep_alphas = "1/2";
  auto* sweep = app.add_subcommand("sweep", "Exhaustive sweep over a frame plus extra lines");
  sweep->add_option("--extra-lines", grid.extra_lines);
  sweep->add_option("--coeff-range", grid.coefficient_range);
  sweep->add_option("--max-weight", grid.max_weight);
  sweep->add_option("--alpha", sweep_alphas, "Comma-separated list of alphas");
  sweep->add_option("--cap", grid.instance_cap);
  sweep->add_option("--threads", grid.threads, "0 = all cores");
  sweep->add_option("--out", out);

  std::string name;
  auto* exp = app.add_subcommand("export-example", "Write a named example as an instance file");
  exp->add_option("name", name, "four-lines, cevians, triangle or collinear-triple")->required();
  exp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*verify) return cmd_verify_examples(overrides);
    if (*check) return cmd_check(path, alpha, out);
    if (*lelong) return cmd_lelong(path, point, out);
    if (*levelset) return cmd_levelset(path, threshold, strict, out);
    if (*mj) return cmd_mj(path, degree, out);
    if (*search) return cmd_search(sa);
    if (*sweep) return cmd_sweep(grid, sweep_alphas, out);
    if (*exp) return cmd_export(name, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
