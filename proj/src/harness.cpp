#include "lelong/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "lelong/combinatorics.hpp"

namespace lelong {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  // Uniform enough for instance generation; mt19937_64 output is fixed by
  // the standard, so streams are reproducible across platforms.
  long between(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::size_t distinct_lines_available(int bound) {
  const std::size_t side = 2 * static_cast<std::size_t>(bound) + 1;
  return (side * side * side - 1) / 2;
}

ProjPoint random_point(Draw& d, int bound) {
  while (true) {
    const long x = d.between(-bound, bound), y = d.between(-bound, bound), z = d.between(-bound, bound);
    if (x != 0 || y != 0 || z != 0) return ProjPoint(x, y, z);
  }
}

ProjLine random_line(Draw& d, int bound) {
  const ProjPoint p = random_point(d, bound);
  return ProjLine(p.coords());
}

void add_line(std::vector<ProjLine>& lines, std::vector<ProjPoint>& meets, const ProjLine& l) {
  for (const auto& other : lines) {
    const ProjPoint p = intersect_lines(other, l);
    if (std::find(meets.begin(), meets.end(), p) == meets.end()) meets.push_back(p);
  }
  lines.push_back(l);
}

std::vector<Component> generate_components(const GenSpec& spec, Draw& d) {
  const int n_lines = static_cast<int>(d.between(spec.min_lines, spec.max_lines));
  const int bound = spec.coefficient_bound;
  std::vector<Curve> curves;

  if (spec.n_conics == 0) {
    std::vector<ProjLine> lines;
    std::vector<ProjPoint> meets;
    for (int attempt = 0; static_cast<int>(lines.size()) < n_lines && attempt < 10'000; ++attempt) {
      ProjLine cand = random_line(d, bound);
      if (lines.size() >= 2 && !meets.empty() && d.between(1, 100) <= spec.concurrency_percent) {
        const ProjPoint through = meets[d.index(meets.size())];
        const ProjPoint other = random_point(d, bound);
        if (other == through) continue;
        cand = line_through(through, other);
      }
      if (std::find(lines.begin(), lines.end(), cand) != lines.end()) continue;
      add_line(lines, meets, cand);
    }
    for (const auto& l : lines) curves.emplace_back(l);
  } else {
    // All conics come from one pencil through four rational base points and
    // every line passes through a base point, so every pairwise
    // intersection is rational.
    std::array<ProjPoint, 4> base{random_point(d, bound), random_point(d, bound), random_point(d, bound),
                                  random_point(d, bound)};
    for (int attempt = 0; attempt < 10'000 && (unique_points(base).size() < 4 || m_j(base, 1) > 2); ++attempt) {
      for (auto& b : base) b = random_point(d, bound);
    }
    if (unique_points(base).size() < 4 || m_j(base, 1) > 2) {
      throw Error(ErrorCode::InvalidSpec, "could not place four base points in general position");
    }
    const Conic g1 = Conic::line_pair(line_through(base[0], base[1]), line_through(base[2], base[3]));
    const Conic g2 = Conic::line_pair(line_through(base[0], base[2]), line_through(base[1], base[3]));
    std::vector<Conic> conics;
    for (int attempt = 0; static_cast<int>(conics.size()) < spec.n_conics && attempt < 10'000; ++attempt) {
      const long s = d.between(-bound, bound), t = d.between(-bound, bound);
      if (s == 0 || t == 0) continue;
      Conic::Coeffs q;
      for (std::size_t i = 0; i < 6; ++i) q[i] = s * g1.coeffs()[i] + t * g2.coeffs()[i];
      const Conic c(q);
      if (c.rank() != 3 || std::find(conics.begin(), conics.end(), c) != conics.end()) continue;
      conics.push_back(c);
    }
    std::vector<ProjLine> lines;
    for (int attempt = 0; static_cast<int>(lines.size()) < n_lines && attempt < 10'000; ++attempt) {
      const ProjPoint& b = base[d.index(4)];
      const ProjPoint other = random_point(d, bound);
      if (other == b) continue;
      const ProjLine l = line_through(b, other);
      if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);
    }
    for (const auto& l : lines) curves.emplace_back(l);
    for (const auto& c : conics) curves.emplace_back(c);
  }

  std::vector<long> numerators;
  long total = 0;
  for (const auto& c : curves) {
    const long k = spec.weights == WeightScheme::Uniform ? 1 : d.between(1, spec.denominator_bound);
    numerators.push_back(k);
    total += k * c.degree();
  }
  std::vector<Component> comps;
  for (std::size_t i = 0; i < curves.size(); ++i) comps.push_back({ratio(numerators[i], total), curves[i]});
  return comps;
}

std::size_t instance_bits(const TheoremInstance& inst, const TheoremReport& report) {
  std::size_t bits = 0;
  auto see = [&](const Rational& r) { bits = std::max(bits, bit_size(r)); };
  for (const auto& c : inst.current().components()) see(c.weight);
  for (const auto& p : report.level.isolated_points)
    for (const auto& x : p.coords()) see(x);
  if (const auto* c = std::get_if<Covered>(&report.verdict)) {
    for (const auto& x : std::get<Conic>(c->witness).coeffs()) see(x);
  }
  return bits;
}

struct TrialOutcome {
  TrialTag tag = TrialTag::Valid;
  std::optional<CoverVerdict> verdict;
  std::size_t bits = 0;
  std::optional<Counterexample> counterexample;
};

TrialOutcome run_trial(const GenSpec& spec, std::size_t index) {
  GeneratedInstance g = generate_one(spec, index);
  TrialOutcome out;
  out.tag = g.tag;
  if (g.tag != TrialTag::Valid) return out;
  TheoremReport report = four_point_conic_check(*g.instance);
  out.bits = instance_bits(*g.instance, report);
  if (out.bits > spec.bit_cap) {
    out.tag = TrialTag::SkippedOverflow;
    return out;
  }
  if (!is_covered(report.verdict)) {
    out.counterexample = Counterexample{index, g.current, g.alpha, report.level, std::get<NotCoverable>(report.verdict)};
  }
  out.verdict = std::move(report.verdict);
  return out;
}

void absorb(RunReport& r, TrialOutcome&& o) {
  ++r.tried;
  r.max_bits = std::max(r.max_bits, o.bits);
  if (o.tag != TrialTag::Valid) {
    ++r.skipped[std::string(to_string(o.tag))];
    return;
  }
  ++r.valid;
  if (const auto* c = std::get_if<Covered>(&*o.verdict)) {
    ++r.covered;
    ++r.omissions[c->omitted ? 1 : 0];
  } else {
    ++r.not_coverable;
  }
  if (o.counterexample) r.counterexamples.push_back(std::move(*o.counterexample));
}

void merge(RunReport& into, RunReport&& part) {
  into.tried += part.tried;
  into.valid += part.valid;
  for (const auto& [k, v] : part.skipped) into.skipped[k] += v;
  into.covered += part.covered;
  into.not_coverable += part.not_coverable;
  for (const auto& [k, v] : part.omissions) into.omissions[k] += v;
  for (auto& c : part.counterexamples) into.counterexamples.push_back(std::move(c));
  into.max_bits = std::max(into.max_bits, part.max_bits);
  into.profile_hits += part.profile_hits;
  if (!into.first_profile && part.first_profile) into.first_profile = std::move(part.first_profile);
  into.max_m2_deficit = std::max(into.max_m2_deficit, part.max_m2_deficit);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view to_string(TrialTag tag) {
  switch (tag) {
    case TrialTag::Valid: return "valid";
    case TrialTag::SkippedPrecondition: return "skipped-precondition";
    case TrialTag::SkippedIrrational: return "skipped-irrational";
    case TrialTag::SkippedOverflow: return "skipped-overflow";
  }
  return "unknown";
}

bool operator==(const RunReport& a, const RunReport& b) {
  auto same_cx = [](const Counterexample& x, const Counterexample& y) {
    return x.index == y.index && x.current == y.current && x.alpha == y.alpha && x.level == y.level;
  };
  auto same_profile = [](const std::optional<SharpnessProfile>& x, const std::optional<SharpnessProfile>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->current == y->current && x->alpha == y->alpha && x->level_points == y->level_points &&
                  x->m2 == y->m2);
  };
  return a.tried == b.tried && a.valid == b.valid && a.skipped == b.skipped && a.covered == b.covered &&
         a.not_coverable == b.not_coverable && a.omissions == b.omissions && a.max_bits == b.max_bits &&
         std::equal(a.counterexamples.begin(), a.counterexamples.end(), b.counterexamples.begin(),
                    b.counterexamples.end(), same_cx) &&
         a.profile_hits == b.profile_hits && same_profile(a.first_profile, b.first_profile) &&
         a.max_m2_deficit == b.max_m2_deficit;
}

void validate(const GenSpec& spec) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidSpec, why); };
  if (spec.min_lines < 3) fail("need at least 3 lines");
  if (spec.max_lines < spec.min_lines) fail("max_lines below min_lines");
  if (spec.n_conics < 0) fail("negative conic count");
  if (spec.coefficient_bound < 1) fail("coefficient bound must be at least 1");
  if (distinct_lines_available(spec.coefficient_bound) < static_cast<std::size_t>(spec.max_lines)) {
    fail("coefficient bound too small for the requested number of lines");
  }
  if (spec.denominator_bound < 1) fail("denominator bound must be at least 1");
  if (spec.concurrency_percent < 0 || spec.concurrency_percent > 100) fail("concurrency percent outside [0, 100]");
  if (spec.alphas.empty()) fail("no alpha given");
  for (const auto& a : spec.alphas) {
    if (a <= Rational(2, 5) || a > 1) fail("alpha " + to_string(a) + " outside (2/5, 1]");
  }
}

GeneratedInstance generate_one(const GenSpec& spec, std::size_t index) {
  validate(spec);
  Draw d(splitmix64(spec.seed ^ splitmix64(index)));
  GeneratedInstance g;
  g.index = index;
  g.alpha = spec.alphas[d.index(spec.alphas.size())];
  g.current = DivisorCurrent(generate_components(spec, d));
  try {
    g.instance = TheoremInstance::from_current(g.current, g.alpha);
    g.tag = TrialTag::Valid;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInstance) {
      g.tag = TrialTag::SkippedPrecondition;
    } else if (e.code() == ErrorCode::IrrationalIntersection) {
      g.tag = TrialTag::SkippedIrrational;
    } else {
      throw;
    }
    g.skip_reason = e.what();
  }
  return g;
}

std::vector<GeneratedInstance> generate(const GenSpec& spec, std::size_t count) {
  std::vector<GeneratedInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(generate_one(spec, i));
  return out;
}

RunReport run_suite(const GenSpec& spec, std::size_t trials, unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::InvalidSpec, "trials must be at least 1");
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  std::vector<TrialOutcome> outcomes(trials);
  parallel_for(trials, threads, [&](std::size_t i) { outcomes[i] = run_trial(spec, i); });
  RunReport report;
  for (auto& o : outcomes) absorb(report, std::move(o));
  report.wall_seconds = seconds_since(start);
  return report;
}

RunReport run_until_valid(const GenSpec& spec, std::size_t valid_target, std::size_t max_trials, unsigned threads) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  const std::size_t batch = std::max<std::size_t>(64, 16 * std::max(1u, threads));
  std::size_t next = 0;
  while (report.valid < valid_target && next < max_trials) {
    const std::size_t n = std::min(batch, max_trials - next);
    std::vector<TrialOutcome> outcomes(n);
    parallel_for(n, threads, [&](std::size_t i) { outcomes[i] = run_trial(spec, next + i); });
    for (auto& o : outcomes) {
      if (report.valid == valid_target) break;
      absorb(report, std::move(o));
    }
    next += n;
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

bool reverify_counterexample(const Counterexample& c) {
  try {
    const auto inst = TheoremInstance::from_current(c.current, c.alpha);
    const auto report = four_point_conic_check(inst);
    return report.level == c.level && !is_covered(report.verdict) && obstruction_holds(c.level, c.verdict, 2);
  } catch (const Error&) {
    return false;
  }
}

// ---- exhaustive sweep ----

namespace {

const std::array<ProjLine, 4>& frame() {
  static const std::array<ProjLine, 4> f{ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(0, 0, 1), ProjLine(1, 1, 1)};
  return f;
}

std::vector<ProjLine> extra_line_pool(int range) {
  std::vector<ProjLine> pool;
  for (int a = -range; a <= range; ++a)
    for (int b = -range; b <= range; ++b)
      for (int c = -range; c <= range; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const ProjLine l(a, b, c);
        if (std::find(frame().begin(), frame().end(), l) != frame().end()) continue;
        pool.push_back(l);
      }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

using Wide = unsigned __int128;

Wide saturating_mul(Wide a, Wide b) {
  const Wide cap = static_cast<Wide>(1) << 100;
  if (a != 0 && b > cap / a) return cap;
  return a * b;
}

Wide choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Wide r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct CachedVerdict {
  bool covered = false;
  bool omitted = false;
  NotCoverable obstruction{std::vector<ProjPoint>{}};
};

// Everything the weight loop needs for one line arrangement.
class Arrangement {
 public:
  explicit Arrangement(std::vector<ProjLine> lines) : lines_(std::move(lines)) {
    std::vector<ProjPoint> pts;
    for (std::size_t i = 0; i < lines_.size(); ++i)
      for (std::size_t j = i + 1; j < lines_.size(); ++j) pts.push_back(intersect_lines(lines_[i], lines_[j]));
    points_ = unique_points(pts);
    for (const auto& p : points_) {
      std::uint32_t mask = 0;
      for (std::size_t i = 0; i < lines_.size(); ++i)
        if (incidence(p, lines_[i])) mask |= 1u << i;
      through_.push_back(mask);
    }
  }

  std::size_t n_lines() const { return lines_.size(); }
  std::size_t n_points() const { return points_.size(); }
  std::uint32_t through(std::size_t p) const { return through_[p]; }

  DivisorCurrent current(const std::vector<long>& w) const {
    long total = 0;
    for (long x : w) total += x;
    std::vector<Component> comps;
    for (std::size_t i = 0; i < lines_.size(); ++i) comps.push_back({ratio(w[i], total), Curve(lines_[i])});
    return DivisorCurrent(std::move(comps));
  }

  LevelSet level(std::uint32_t curve_mask, std::uint64_t point_mask, const Rational& threshold) const {
    LevelSet e;
    e.threshold = threshold;
    e.strict = true;
    for (std::size_t i = 0; i < lines_.size(); ++i)
      if (curve_mask & (1u << i)) e.component_curves.emplace_back(lines_[i]);
    std::sort(e.component_curves.begin(), e.component_curves.end());
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (point_mask & (std::uint64_t{1} << p)) e.isolated_points.push_back(points_[p]);
    return e;
  }

  const CachedVerdict& verdict(std::uint32_t curve_mask, std::uint64_t point_mask, const Rational& threshold) {
    const auto key = std::make_pair(curve_mask, point_mask);
    auto it = verdicts_.find(key);
    if (it != verdicts_.end()) return it->second;
    const auto v = conic_cover_check(level(curve_mask, point_mask, threshold));
    CachedVerdict cv;
    if (const auto* c = std::get_if<Covered>(&v)) {
      cv.covered = true;
      cv.omitted = c->omitted.has_value();
    } else {
      cv.obstruction = std::get<NotCoverable>(v);
    }
    return verdicts_.emplace(key, std::move(cv)).first->second;
  }

  bool collinear(std::uint64_t point_mask) {
    auto it = collinear_.find(point_mask);
    if (it != collinear_.end()) return it->second;
    std::vector<ProjPoint> pts;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (point_mask & (std::uint64_t{1} << p)) pts.push_back(points_[p]);
    return collinear_[point_mask] = subset_on_curve_of_degree(pts, 1);
  }

  int m2(std::uint64_t point_mask) {
    auto it = m2_.find(point_mask);
    if (it != m2_.end()) return it->second;
    std::vector<ProjPoint> pts;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (point_mask & (std::uint64_t{1} << p)) pts.push_back(points_[p]);
    return m2_[point_mask] = m_j(pts, 2);
  }

 private:
  std::vector<ProjLine> lines_;
  std::vector<ProjPoint> points_;
  std::vector<std::uint32_t> through_;
  std::map<std::pair<std::uint32_t, std::uint64_t>, CachedVerdict> verdicts_;
  std::map<std::uint64_t, bool> collinear_;
  std::map<std::uint64_t, int> m2_;
};

RunReport sweep_arrangement(Arrangement& arr, const SweepGrid& grid) {
  RunReport r;
  const std::size_t n = arr.n_lines();
  const std::size_t np = arr.n_points();
  std::vector<long> w(n, 1);
  std::vector<long> nu(np);
  while (true) {
    long total = 0;
    for (long x : w) total += x;
    for (std::size_t p = 0; p < np; ++p) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (arr.through(p) & (1u << i)) s += w[i];
      nu[p] = s;
    }
    for (const auto& alpha : grid.alphas) {
      ++r.tried;
      // alpha = an/ad, beta = 2(ad - an)/(3 ad); compare with integer weights over `total`.
      const long an = alpha.get_num().get_si(), ad = alpha.get_den().get_si();
      const long bn = 2 * (ad - an), bd = 3 * ad;
      bool heavy_line = false;
      std::uint32_t curve_mask = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] * ad >= an * total) heavy_line = true;
        if (w[i] * bd > bn * total) curve_mask |= 1u << i;
      }
      std::uint64_t heavy_mask = 0, point_mask = 0;
      int heavy_count = 0;
      for (std::size_t p = 0; p < np; ++p) {
        if (nu[p] * ad >= an * total) {
          heavy_mask |= std::uint64_t{1} << p;
          ++heavy_count;
        }
        if (nu[p] * bd > bn * total && (arr.through(p) & curve_mask) == 0) point_mask |= std::uint64_t{1} << p;
      }
      const Rational beta(bn, bd);
      if (heavy_line || heavy_count >= 4) {
        ++r.valid;
        const auto& v = arr.verdict(curve_mask, point_mask, beta);
        if (v.covered) {
          ++r.covered;
          ++r.omissions[v.omitted ? 1 : 0];
        } else {
          ++r.not_coverable;
          r.counterexamples.push_back(
              Counterexample{r.tried - 1, arr.current(w), alpha, arr.level(curve_mask, point_mask, beta), v.obstruction});
        }
        continue;
      }
      ++r.skipped[std::string(to_string(TrialTag::SkippedPrecondition))];
      if (heavy_count != 3 || curve_mask != 0 || !arr.collinear(heavy_mask)) continue;
      if (arr.verdict(curve_mask, point_mask, beta).covered) continue;
      ++r.profile_hits;
      const int m2 = arr.m2(point_mask);
      const int size = std::popcount(point_mask);
      r.max_m2_deficit = std::max(r.max_m2_deficit, size - m2);
      if (!r.first_profile) {
        r.first_profile = SharpnessProfile{arr.current(w), alpha, static_cast<std::size_t>(size), m2};
      }
    }
    std::size_t i = 0;
    while (i < n && w[i] == grid.max_weight) w[i++] = 1;
    if (i == n) break;
    ++w[i];
  }
  return r;
}

}  // namespace

std::size_t sweep_size(const SweepGrid& grid) {
  if (grid.extra_lines < 0 || grid.max_weight < 1 || grid.coefficient_range < 1) return 0;
  const std::size_t pool = extra_line_pool(grid.coefficient_range).size();
  Wide total = choose(pool, static_cast<std::size_t>(grid.extra_lines));
  for (int i = 0; i < 4 + grid.extra_lines; ++i) total = saturating_mul(total, static_cast<Wide>(grid.max_weight));
  total = saturating_mul(total, grid.alphas.size());
  const Wide limit = static_cast<Wide>(std::numeric_limits<std::size_t>::max());
  return total > limit ? std::numeric_limits<std::size_t>::max() : static_cast<std::size_t>(total);
}

RunReport exhaustive_sweep(const SweepGrid& grid) {
  if (grid.extra_lines < 0 || grid.max_weight < 1 || grid.coefficient_range < 1) {
    throw Error(ErrorCode::InvalidSpec, "sweep grid parameters out of range");
  }
  for (const auto& a : grid.alphas) {
    if (a <= Rational(2, 5) || a > 1) throw Error(ErrorCode::InvalidSpec, "alpha " + to_string(a) + " outside (2/5, 1]");
  }
  if (4 + grid.extra_lines > 32 || grid.max_weight > 1000) {
    throw Error(ErrorCode::GridTooLarge, "too many lines or weights for the sweep encoding");
  }
  const std::size_t size = sweep_size(grid);
  if (size > grid.instance_cap) {
    throw Error(ErrorCode::GridTooLarge,
                std::to_string(size) + " configurations exceed the cap of " + std::to_string(grid.instance_cap));
  }
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  if (size == 0) return report;

  const auto pool = extra_line_pool(grid.coefficient_range);
  std::vector<std::vector<std::size_t>> choices;
  for_each_combination(pool.size(), static_cast<std::size_t>(grid.extra_lines), [&](const std::vector<std::size_t>& idx) {
    choices.push_back(idx);
    return false;
  });
  std::vector<RunReport> parts(choices.size());
  parallel_for(choices.size(), grid.threads, [&](std::size_t c) {
    std::vector<ProjLine> lines(frame().begin(), frame().end());
    for (auto i : choices[c]) lines.push_back(pool[i]);
    Arrangement arr(std::move(lines));
    parts[c] = sweep_arrangement(arr, grid);
  });
  for (auto& p : parts) {
    const std::size_t offset = report.tried;
    for (auto& cx : p.counterexamples) cx.index += offset;
    merge(report, std::move(p));
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace lelong
