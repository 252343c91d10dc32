#pragma once

#include <cstdint>
#include <vector>

#include "ebandit/env.hpp"

namespace ebandit {

// Synthetic multi-query workload: a fraction of queries is intent-shifting
// with a bounded number of events; the shared event oracle is an axis-parallel
// box anchored at the origin, with contexts drawn inside the box on ordinary
// rounds and outside it (beyond the margin) on event rounds.
struct WorkloadSpec {
  int num_queries = 20;
  long total_impressions = 300000;
  int arms_per_query = 5;
  double shifting_fraction = 0.1;
  int max_events_per_query = 10;
  int feature_dim = 10;
  double box_hi = 0.35;        // oracle rect is [0, box_hi]^d
  double margin_delta = 0.315; // oracle margin
  double eps_shift = 0.3;
  double min_subopt = 0.3;
  long min_event_spacing = 0;  // 0: derive 2L from the default phase length
  std::uint64_t seed = 1;
};

// Scale applied to (n/eps^2) ln T when deriving the default phase length for
// experiment runs; exposed as the l_scale config key.
inline constexpr double kDefaultPhaseScale = 0.25;

long workload_query_horizon(const WorkloadSpec& w, int query);
long workload_event_spacing(const WorkloadSpec& w, long query_horizon);

// Deterministic in (spec, seed); every returned spec passes validate_spec
// with the workload's event spacing. Throws GenerationError when the event
// schedule cannot fit a query's horizon.
std::vector<EnvironmentSpec> gen_workload(const WorkloadSpec& w);

// Adversarial instance families. Instances share arms {y=0, z=1}; arm y pays
// 1/2 on every round, arm z starts low and, in instance I_i (i >= 1), rises
// from phase i onward. Context schedules mark the flip rounds so
// context-aware algorithms can be run on the same instances.
struct LowerBoundFamily {
  enum class Kind { Thm4, Thm5ii };
  Kind kind = Kind::Thm4;
  std::vector<EnvironmentSpec> instances;  // I_0 .. I_N
  long phase_length = 0;
  int num_phases = 0;
};

// sqrt(T) phases of length sqrt(T); z at 1/2 - eps before the flip and
// 1/2 + eps from it. The oracle is a 1-d box concept.
LowerBoundFamily gen_thm4(long T, double eps);

// min(d_cap, T^(1/3)) phases of length >= T^(2/3); z levels 1/(1+e^(1/3)) and
// e^(1/3)/(1+e^(1/3)). The context schedule of I_i plants the greedy positive
// sequence y_1..y_i at phase starts (false positives for the paired oracle)
// and an always-negative context elsewhere. Throws GenerationError when the
// class admits no such construction on the probe grid.
LowerBoundFamily gen_thm5ii(long T, int d_cap, ClassParams params);

// Packing of stationary instances: `phases` stretches of length T/phases,
// each with a fresh best arm (consecutive bests differ) at 1/2 + eps over
// 1/2 - eps.
EnvironmentSpec gen_thm5i(long T, int phases, int n_arms, double eps, std::uint64_t seed);

}  // namespace ebandit
