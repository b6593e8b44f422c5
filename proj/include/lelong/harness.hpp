#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lelong/covercheck.hpp"

namespace lelong {

enum class WeightScheme { Uniform, RandomRational };

/// Parameters of the seeded instance generator. Trial i of a run draws
/// from its own stream derived from (seed, i), so results do not depend on
/// scheduling.
struct GenSpec {
  int min_lines = 4;
  int max_lines = 4;
  int n_conics = 0;
  int coefficient_bound = 5;  // line coefficients / point coordinates in [-B, B]
  WeightScheme weights = WeightScheme::RandomRational;
  int denominator_bound = 12;  // integer weight numerators in [1, D] before normalization
  /// Percent chance that a new line is drawn through an existing
  /// intersection point, which produces concurrent triples.
  int concurrency_percent = 50;
  std::vector<Rational> alphas{Rational(1, 2)};
  std::uint64_t seed = 0;
  std::size_t bit_cap = 4096;
};

/// Throws InvalidSpec when the spec cannot produce instances.
void validate(const GenSpec& spec);

enum class TrialTag { Valid, SkippedPrecondition, SkippedIrrational, SkippedOverflow };

std::string_view to_string(TrialTag tag);

struct GeneratedInstance {
  std::size_t index = 0;
  DivisorCurrent current;
  Rational alpha;
  TrialTag tag = TrialTag::Valid;
  std::string skip_reason;
  std::optional<TheoremInstance> instance;  // set when tag == Valid
};

/// Instance number `index` of the deterministic stream for spec.
GeneratedInstance generate_one(const GenSpec& spec, std::size_t index);
/// The first `count` instances of the stream.
std::vector<GeneratedInstance> generate(const GenSpec& spec, std::size_t count);

/// A valid instance whose strict level set no conic covers.
struct Counterexample {
  std::size_t index = 0;
  DivisorCurrent current;
  Rational alpha;
  LevelSet level;
  NotCoverable verdict;
};

/// Instance whose hypotheses fail with exactly three heavy points, all
/// collinear, while its strict level set at beta is finite and uncoverable.
struct SharpnessProfile {
  DivisorCurrent current;
  Rational alpha;
  std::size_t level_points = 0;
  int m2 = 0;
};

struct RunReport {
  std::size_t tried = 0;
  std::size_t valid = 0;
  std::map<std::string, std::size_t> skipped;  // by TrialTag name
  std::size_t covered = 0;
  std::size_t not_coverable = 0;
  std::map<int, std::size_t> omissions;  // omitted-point count -> instances
  std::vector<Counterexample> counterexamples;
  std::size_t max_bits = 0;
  // Sweep only.
  std::size_t profile_hits = 0;
  std::optional<SharpnessProfile> first_profile;
  int max_m2_deficit = 0;  // max |E| - m_2(E) over profile hits
  double wall_seconds = 0;  // excluded from serialization

  friend bool operator==(const RunReport& a, const RunReport& b);
};

/// Runs the conic cover check on each of the first `trials` instances.
/// Throws InvalidSpec on trials == 0.
RunReport run_suite(const GenSpec& spec, std::size_t trials, unsigned threads = 1);

/// Keeps drawing instances until `valid_target` valid ones have been
/// checked or `max_trials` were tried.
RunReport run_until_valid(const GenSpec& spec, std::size_t valid_target, std::size_t max_trials,
                          unsigned threads = 1);

/// Re-derives a counterexample from its current and alpha alone: the
/// instance is valid, its strict level set matches the stored one and the
/// stored obstruction holds against every conic.
bool reverify_counterexample(const Counterexample& c);

/// Exhaustive enumeration with the first four lines fixed to the frame
/// x = 0, y = 0, z = 0, x + y + z = 0 (any four lines in general position
/// are projectively equivalent to it).
struct SweepGrid {
  int extra_lines = 0;        // lines added to the frame
  int coefficient_range = 2;  // extra line coefficients in [-c, c]
  int max_weight = 1;         // integer weights in [1, W], normalized to mass 1
  std::vector<Rational> alphas{Rational(1, 2)};
  std::size_t instance_cap = 20'000'000;
  unsigned threads = 1;
};

/// Number of configurations the grid enumerates.
std::size_t sweep_size(const SweepGrid& grid);

/// Throws GridTooLarge when sweep_size exceeds the cap.
RunReport exhaustive_sweep(const SweepGrid& grid);

}  // namespace lelong
