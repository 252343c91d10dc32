#include "ebandit/bwc.hpp"

#include <cmath>
#include <stdexcept>

namespace ebandit {

Bwc::Bwc(int n_arms, long horizon, BwcParams params)
    : n_arms_(n_arms), horizon_(horizon), params_(params), classifier_(params.classifier) {
  if (params_.L < n_arms) {
    throw std::invalid_argument("Bwc: L must be at least the number of arms");
  }
  if (params_.bandit_t0 < 0) params_.bandit_t0 = horizon;
}

void Bwc::start_phase(PhaseKind kind, long t) {
  Phase ph;
  ph.ordinal = static_cast<int>(phases_.size()) + 1;
  ph.kind = kind;
  ph.start_round = t;
  phases_.push_back(ph);
  bandit_ = std::make_unique<TestableUcb>(
      n_arms_, horizon_,
      TestableUcb::Params{params_.eps, params_.bandit_alpha, params_.bandit_t0});
}

ArmId Bwc::select(long t, const Context& x) {
  if (phases_.empty()) start_phase(PhaseKind::Testing, t);
  round_context_ = x;
  return bandit_->select();
}

void Bwc::update(long t, ArmId arm, int reward) {
  bandit_->update(arm, reward);
  Phase& phase = phases_.back();
  phase.length += 1;

  if (phase.length == params_.L) {
    phase.guess_at_l = bandit_->guess(params_.eps);
    if (phase.kind == PhaseKind::Testing) {
      finish_testing_phase(phase);
      last_full_guess_ = phase.guess_at_l;
      start_phase(PhaseKind::Adapting, t + 1);
      return;
    }
    last_full_guess_ = phase.guess_at_l;
  }

  if (phase.kind == PhaseKind::Adapting && classifier_.predict_positive(round_context_)) {
    pending_trigger_ = FedSample{t, round_context_};
    start_phase(PhaseKind::Testing, t + 1);
  }
}

void Bwc::finish_testing_phase(Phase& phase) {
  // i = most recent full phase before this one; the very first testing phase
  // has none and emits nothing.
  if (!last_full_guess_ || !pending_trigger_) {
    pending_trigger_.reset();
    return;
  }
  const Guess& g_i = *last_full_guess_;
  const Guess& g_j = *phase.guess_at_l;
  if (!guess_sets_intersect(g_i, g_j)) {
    classifier_.feed_negative(pending_trigger_->context);
    fed_samples_.push_back(*pending_trigger_);
  }
  pending_trigger_.reset();
}

long bwc_default_phase_length(int n_arms, double eps, long horizon, double scale) {
  double l = scale * (static_cast<double>(n_arms) / (eps * eps)) *
             std::log(static_cast<double>(horizon));
  return static_cast<long>(std::ceil(l));
}

RunRecord bwc_run(const EnvironmentSpec& spec, const BwcParams& params, std::uint64_t seed,
                  BwcRunStats* stats) {
  ValidationReport report = validate_spec(spec, 2 * params.L);
  if (!report.ok()) {
    throw std::invalid_argument("bwc_run: invalid spec: " + report.summary());
  }

  Bwc algo(spec.n_arms, spec.horizon, params);
  Rng clicks = Rng(seed).derive(0x11c5);

  RunRecord rec;
  rec.seed = seed;
  rec.chosen.reserve(static_cast<std::size_t>(spec.horizon));
  rec.regret_increment.reserve(static_cast<std::size_t>(spec.horizon));
  rec.cumulative_regret.reserve(static_cast<std::size_t>(spec.horizon));
  double cumulative = 0.0;
  for (long t = 1; t <= spec.horizon; ++t) {
    Context x = context_at(spec, t);
    ArmId arm = algo.select(t, x);
    algo.update(t, arm, env_click(spec, t, arm, clicks));
    rec.chosen.push_back(arm);
    double inc = regret_step(spec, t, arm);
    cumulative += inc;
    rec.regret_increment.push_back(inc);
    rec.cumulative_regret.push_back(cumulative);
  }
  if (stats) {
    *stats = BwcRunStats{};
    for (const Phase& ph : algo.phases()) {
      if (ph.kind == PhaseKind::Testing)
        stats->testing_phases += 1;
      else
        stats->adapting_phases += 1;
    }
    stats->fed_samples = static_cast<long>(algo.fed_samples().size());
  }
  return rec;
}

}  // namespace ebandit
