#pragma once

#include <memory>
#include <optional>

#include "ebandit/bandit.hpp"
#include "ebandit/classifier.hpp"
#include "ebandit/env.hpp"

namespace ebandit {

enum class PhaseKind { Testing, Adapting };

struct Phase {
  int ordinal = 1;  // 1-based; odd phases are testing, even phases adapting
  PhaseKind kind = PhaseKind::Testing;
  long start_round = 1;
  long length = 0;                  // rounds completed so far
  std::optional<Guess> guess_at_l;  // present iff the phase reached L rounds

  bool full(long L) const { return length >= L; }
};

struct BwcParams {
  long L = 1;
  double eps = 0.1;  // guess thresholds; matched to the environment's shift
  ClassParams classifier;
  double bandit_alpha = 6.0;
  long bandit_t0 = -1;  // -1: horizon
};

// The meta-algorithm: alternates fixed-length testing phases with open-ended
// adapting phases, runs a fresh testable bandit per phase, restarts on
// positive classifier predictions, and feeds the classifier a false-labeled
// sample whenever consecutive full-phase guesses show no optimal arm went
// bad (G+_i intersect G-_j empty).
class Bwc {
 public:
  Bwc(int n_arms, long horizon, BwcParams params);

  // Rounds must arrive in order, each as select(t, x) then update(t, arm, r).
  ArmId select(long t, const Context& x);
  void update(long t, ArmId arm, int reward);

  // select + click feedback + update in one call; returns the arm played.
  template <typename ClickFn>
  ArmId step(long t, const Context& x, ClickFn&& click) {
    ArmId arm = select(t, x);
    update(t, arm, click(arm));
    return arm;
  }

  const std::vector<Phase>& phases() const { return phases_; }
  const SafeCl& classifier() const { return classifier_; }
  const TestableUcb& bandit() const { return *bandit_; }

  struct FedSample {
    long round = 0;  // round whose context was labeled (the trigger round)
    Context context;
  };
  const std::vector<FedSample>& fed_samples() const { return fed_samples_; }

 private:
  void start_phase(PhaseKind kind, long t);
  void finish_testing_phase(Phase& phase);

  int n_arms_;
  long horizon_;
  BwcParams params_;
  SafeCl classifier_;
  std::unique_ptr<TestableUcb> bandit_;
  std::vector<Phase> phases_;

  std::optional<Guess> last_full_guess_;     // most recent full phase's guess
  std::optional<FedSample> pending_trigger_; // context the classifier fired on
  Context round_context_;
  std::vector<FedSample> fed_samples_;
};

struct BwcRunStats {
  long testing_phases = 0;
  long adapting_phases = 0;
  long fed_samples = 0;
};

// Validates the spec (including 2L event spacing), then runs Bwc to the
// horizon with clicks keyed off `seed`. Deterministic given (spec, params,
// seed).
RunRecord bwc_run(const EnvironmentSpec& spec, const BwcParams& params, std::uint64_t seed,
                  BwcRunStats* stats = nullptr);

// Default phase length: ceil(scale * (n / eps^2) * ln(horizon)).
long bwc_default_phase_length(int n_arms, double eps, long horizon, double scale = 1.0);

}  // namespace ebandit
