#include "ebandit/env.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ebandit {

std::vector<long> EnvironmentSpec::event_rounds() const {
  std::vector<long> out;
  for (std::size_t i = 1; i < segments.size(); ++i) out.push_back(segments[i].start_round);
  return out;
}

std::size_t segment_index_at(const EnvironmentSpec& spec, long t) {
  if (t < 1 || t > spec.horizon) throw std::out_of_range("round out of range");
  std::size_t lo = 0, hi = spec.segments.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (spec.segments[mid].start_round <= t)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

const std::vector<double>& probs_at(const EnvironmentSpec& spec, long t) {
  return spec.segments[segment_index_at(spec, t)].click_probs;
}

double max_prob_at(const EnvironmentSpec& spec, long t) {
  const auto& p = probs_at(spec, t);
  return *std::max_element(p.begin(), p.end());
}

Context context_at(const EnvironmentSpec& spec, long t) {
  if (t < 1 || t > spec.horizon) throw std::out_of_range("round out of range");
  if (const auto* list = std::get_if<std::vector<Context>>(&spec.contexts)) {
    return (*list)[static_cast<std::size_t>(t - 1)];
  }
  const auto& gen = std::get<GeneratedContexts>(spec.contexts);
  Context x(gen.dim);
  bool is_event = std::binary_search(gen.event_rounds.begin(), gen.event_rounds.end(), t);
  for (int k = 0; k < gen.dim; ++k) {
    double u = gen.stream.keyed_u01(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(k));
    x[k] = is_event ? gen.event_lo + (gen.event_hi - gen.event_lo) * u : gen.box_hi[k] * u;
  }
  return x;
}

int env_click(const EnvironmentSpec& spec, long t, ArmId arm, const Rng& click_stream) {
  if (arm < 0 || arm >= spec.n_arms) throw std::out_of_range("arm out of range");
  double p = probs_at(spec, t)[static_cast<std::size_t>(arm)];
  return click_stream.keyed_u01(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(arm)) < p
             ? 1
             : 0;
}

double regret_step(const EnvironmentSpec& spec, long t, ArmId chosen) {
  if (chosen < 0 || chosen >= spec.n_arms) throw std::out_of_range("arm out of range");
  const auto& p = probs_at(spec, t);
  double best = *std::max_element(p.begin(), p.end());
  return best - p[static_cast<std::size_t>(chosen)];
}

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].what << " (round " << violations[i].round << ")";
  }
  return os.str();
}

namespace {
constexpr double kTol = 1e-12;
}

ValidationReport validate_spec(const EnvironmentSpec& spec, long min_event_spacing) {
  ValidationReport report;
  auto add = [&](const std::string& what, long round) {
    report.violations.push_back({what, round});
  };

  if (spec.n_arms < 1) add("arm count: n_arms must be >= 1", 0);
  if (spec.horizon < 1) add("horizon: must be >= 1", 0);
  if (spec.segments.empty()) {
    add("segments: none defined", 0);
    return report;
  }
  if (spec.segments.front().start_round != 1) {
    add("segment order: first segment must start at round 1", spec.segments.front().start_round);
  }
  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const Segment& s = spec.segments[i];
    if (i > 0 && s.start_round <= spec.segments[i - 1].start_round) {
      add("segment order: start rounds must be strictly increasing", s.start_round);
    }
    if (s.start_round < 1 || s.start_round > spec.horizon) {
      add("segment order: start round outside horizon", s.start_round);
    }
    if (static_cast<int>(s.click_probs.size()) != spec.n_arms) {
      add("probability range: wrong arity", s.start_round);
      continue;
    }
    for (double p : s.click_probs) {
      if (!(p >= 0.0 && p <= 1.0) || !std::isfinite(p)) {
        add("probability range: click probability outside [0,1]", s.start_round);
        break;
      }
    }
  }
  if (spec.num_events != static_cast<int>(spec.segments.size()) - 1) {
    add("event count: k must equal segments - 1", 0);
  }

  // Minimum suboptimality within each segment.
  for (const Segment& s : spec.segments) {
    if (static_cast<int>(s.click_probs.size()) != spec.n_arms) continue;
    double best = *std::max_element(s.click_probs.begin(), s.click_probs.end());
    for (double p : s.click_probs) {
      if (p < best && best - p < spec.min_subopt - kTol) {
        add("minimum suboptimality: gap below min_subopt", s.start_round);
        break;
      }
    }
  }

  // Minimum shift at each event: some previously optimal arm must fall
  // eps_shift below the new optimum.
  for (std::size_t i = 1; i < spec.segments.size(); ++i) {
    const auto& prev = spec.segments[i - 1].click_probs;
    const auto& cur = spec.segments[i].click_probs;
    if (static_cast<int>(prev.size()) != spec.n_arms ||
        static_cast<int>(cur.size()) != spec.n_arms)
      continue;
    double prev_best = *std::max_element(prev.begin(), prev.end());
    double cur_best = *std::max_element(cur.begin(), cur.end());
    bool shifted = false;
    for (int a = 0; a < spec.n_arms; ++a) {
      if (prev[a] == prev_best && cur[a] < cur_best - spec.eps_shift + kTol) {
        shifted = true;
        break;
      }
    }
    if (!shifted) add("minimum shift: no previously optimal arm dropped", spec.segments[i].start_round);
  }

  if (min_event_spacing > 0) {
    for (std::size_t i = 2; i < spec.segments.size(); ++i) {
      long gap = spec.segments[i].start_round - spec.segments[i - 1].start_round;
      if (gap < min_event_spacing) {
        add("event spacing: events closer than required", spec.segments[i].start_round);
      }
    }
  }

  // Context schedule arity and universe membership.
  if (const auto* list = std::get_if<std::vector<Context>>(&spec.contexts)) {
    if (static_cast<long>(list->size()) != spec.horizon) {
      add("context schedule: length must equal horizon", 0);
      return report;
    }
  }
  ConceptKind kind = concept_kind(spec.oracle_concept);
  int dim = concept_dim(spec.oracle_concept);
  std::vector<long> events = spec.event_rounds();
  for (long t = 1; t <= spec.horizon; ++t) {
    Context x = context_at(spec, t);
    if (static_cast<int>(x.size()) != dim) {
      add("context universe: dimension mismatch", t);
      break;
    }
    double norm = kind == ConceptKind::Apr ? linf_norm(x) : l2_norm(x);
    if (norm > 1.0 + 1e-9) {
      add("context universe: outside the concept universe", t);
      break;
    }
    bool is_event = std::binary_search(events.begin(), events.end(), t);
    Label want = is_event ? Label::Positive : Label::Negative;
    if (concept_eval(spec.oracle_concept, x) != want) {
      add("oracle consistency: concept disagrees with event schedule", t);
      break;
    }
  }
  return report;
}

}  // namespace ebandit
