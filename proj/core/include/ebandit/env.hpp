#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "ebandit/classifier.hpp"
#include "ebandit/rng.hpp"
#include "ebandit/types.hpp"

namespace ebandit {

// One stationary stretch: click probabilities in force from start_round
// (1-based, inclusive) until the next segment begins.
struct Segment {
  long start_round = 1;
  std::vector<double> click_probs;
};

// Context schedule computed on demand: uniform draws inside [0, box_hi[k]]
// per coordinate on ordinary rounds, uniform in [event_lo, event_hi] per
// coordinate on event rounds. Draws are keyed by (round, coordinate).
struct GeneratedContexts {
  int dim = 1;
  std::vector<double> box_hi;
  double event_lo = 0.0;
  double event_hi = 0.0;
  std::vector<long> event_rounds;  // sorted
  Rng stream;
};

using ContextSchedule = std::variant<std::vector<Context>, GeneratedContexts>;

// Piecewise-stationary Bernoulli click environment plus its context stream
// and the ground-truth event oracle. Immutable after construction; safe to
// share across concurrent runs.
struct EnvironmentSpec {
  int n_arms = 0;
  long horizon = 0;
  std::vector<Segment> segments;  // start rounds strictly increasing, first == 1
  ContextSchedule contexts;
  Concept oracle_concept;
  double eps_shift = 0.0;   // guaranteed drop of a previously optimal arm at events
  double min_subopt = 0.0;  // within-segment gap between best and any other arm
  int num_events = 0;       // k = segments - 1

  std::vector<long> event_rounds() const;  // starts of segments 2..
};

// Index of the segment in force at round t.
std::size_t segment_index_at(const EnvironmentSpec& spec, long t);
const std::vector<double>& probs_at(const EnvironmentSpec& spec, long t);
double max_prob_at(const EnvironmentSpec& spec, long t);
Context context_at(const EnvironmentSpec& spec, long t);

// Bernoulli click draw, keyed by (round, arm) on the given stream so two
// policies pulling the same arm at the same round observe the same click.
int env_click(const EnvironmentSpec& spec, long t, ArmId arm, const Rng& click_stream);

// Per-round pseudo-regret increment: max_i p_t(i) - p_t(chosen).
double regret_step(const EnvironmentSpec& spec, long t, ArmId chosen);

struct Violation {
  std::string what;
  long round = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks every EnvironmentSpec invariant. When min_event_spacing > 0 the
// consecutive-event spacing required for meta-algorithm runs is checked too.
// Never throws; all findings are reported.
ValidationReport validate_spec(const EnvironmentSpec& spec, long min_event_spacing = 0);

// Full per-round trajectory of one run.
struct RunRecord {
  std::vector<ArmId> chosen;
  std::vector<double> regret_increment;
  std::vector<double> cumulative_regret;
  std::uint64_t seed = 0;

  double final_regret() const { return cumulative_regret.empty() ? 0.0 : cumulative_regret.back(); }
};

}  // namespace ebandit
