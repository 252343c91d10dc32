#include "ebandit/envgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ebandit/bwc.hpp"

namespace ebandit {

namespace {

constexpr std::uint64_t kEventsWord = 0xe1;
constexpr std::uint64_t kLadderWord = 0x1ad;
constexpr std::uint64_t kContextWord = 0xc0;
constexpr std::uint64_t kShuffleWord = 0x5f;

std::vector<int> seeded_permutation(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i + 1)));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

// Event rounds uniform over the feasible set {rounds in [spacing+1, horizon],
// consecutive gaps >= spacing}: draw sorted offsets, then re-add the spacing.
std::vector<long> draw_event_rounds(int k, long horizon, long spacing, Rng& rng,
                                    const std::string& where) {
  long range = horizon - static_cast<long>(k) * spacing;
  if (range < 1) {
    throw GenerationError(where + ": cannot fit " + std::to_string(k) +
                          " events with spacing " + std::to_string(spacing) + " into horizon " +
                          std::to_string(horizon));
  }
  std::vector<long> offsets(static_cast<std::size_t>(k));
  for (auto& o : offsets) o = static_cast<long>(rng.next_below(static_cast<std::uint64_t>(range)));
  std::sort(offsets.begin(), offsets.end());
  std::vector<long> rounds(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    rounds[static_cast<std::size_t>(i)] = spacing + 1 + offsets[static_cast<std::size_t>(i)] +
                                          static_cast<long>(i) * spacing;
  }
  return rounds;
}

// Per-segment probability ladder. Eras open with a dominant arm well above a
// runner-up; a "down" event sinks the current optimum (the runner-up takes
// over), and the following event opens a fresh era so repeated shifts stay
// representable with few arms.
struct Ladder {
  std::vector<double> probs;

  static Ladder fresh_era(int n, Rng& rng, int avoid_top) {
    Ladder l;
    l.probs.assign(static_cast<std::size_t>(n), 0.0);
    std::vector<int> perm = seeded_permutation(n, rng);
    if (n > 1 && perm[0] == avoid_top) std::swap(perm[0], perm[1]);
    l.probs[static_cast<std::size_t>(perm[0])] = rng.next_uniform(0.88, 0.95);
    double gap = rng.next_uniform(0.32, 0.38);
    if (n > 1) {
      l.probs[static_cast<std::size_t>(perm[1])] =
          l.probs[static_cast<std::size_t>(perm[0])] - gap;
    }
    for (int i = 2; i < n; ++i) {
      l.probs[static_cast<std::size_t>(perm[i])] = rng.next_uniform(0.05, 0.18);
    }
    return l;
  }

  int best() const {
    return static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
  }

  void sink_top(Rng& rng) {
    probs[static_cast<std::size_t>(best())] = rng.next_uniform(0.05, 0.12);
  }
};

}  // namespace

long workload_query_horizon(const WorkloadSpec& w, int query) {
  long base = w.total_impressions / w.num_queries;
  long extra = query < static_cast<int>(w.total_impressions % w.num_queries) ? 1 : 0;
  return base + extra;
}

long workload_event_spacing(const WorkloadSpec& w, long query_horizon) {
  if (w.min_event_spacing > 0) return w.min_event_spacing;
  return 2 * bwc_default_phase_length(w.arms_per_query, w.eps_shift, query_horizon,
                                      kDefaultPhaseScale);
}

std::vector<EnvironmentSpec> gen_workload(const WorkloadSpec& w) {
  if (w.num_queries < 1 || w.total_impressions < w.num_queries || w.arms_per_query < 2) {
    throw GenerationError("workload: degenerate sizes");
  }
  if (!(w.shifting_fraction >= 0.0 && w.shifting_fraction <= 1.0)) {
    throw GenerationError("workload: shifting_fraction outside [0,1]");
  }
  if (w.box_hi + w.margin_delta + 0.02 > 1.0) {
    throw GenerationError("workload: oracle box plus margin leaves no room for event contexts");
  }

  Rng root(w.seed);
  int n_shifting = static_cast<int>(
      std::ceil(w.shifting_fraction * static_cast<double>(w.num_queries) - 1e-9));
  Rng shuffle_rng = root.derive(kShuffleWord);
  std::vector<int> order = seeded_permutation(w.num_queries, shuffle_rng);
  std::vector<bool> shifting(static_cast<std::size_t>(w.num_queries), false);
  for (int i = 0; i < n_shifting; ++i) shifting[static_cast<std::size_t>(order[i])] = true;

  std::vector<EnvironmentSpec> specs;
  specs.reserve(static_cast<std::size_t>(w.num_queries));
  for (int q = 0; q < w.num_queries; ++q) {
    long horizon = workload_query_horizon(w, q);
    long spacing = workload_event_spacing(w, horizon);
    Rng qrng = root.derive(static_cast<std::uint64_t>(q));

    std::vector<long> events;
    if (shifting[static_cast<std::size_t>(q)]) {
      Rng ev = qrng.derive(kEventsWord);
      int k = 1 + static_cast<int>(ev.next_below(static_cast<std::uint64_t>(w.max_events_per_query)));
      events = draw_event_rounds(k, horizon, spacing, ev, "query " + std::to_string(q));
    }

    Rng ladder_rng = qrng.derive(kLadderWord);
    Ladder ladder = Ladder::fresh_era(w.arms_per_query, ladder_rng, -1);
    EnvironmentSpec spec;
    spec.n_arms = w.arms_per_query;
    spec.horizon = horizon;
    spec.segments.push_back(Segment{1, ladder.probs});
    bool down_next = true;
    for (long round : events) {
      if (down_next) {
        ladder.sink_top(ladder_rng);
      } else {
        ladder = Ladder::fresh_era(w.arms_per_query, ladder_rng, ladder.best());
      }
      down_next = !down_next;
      spec.segments.push_back(Segment{round, ladder.probs});
    }
    spec.num_events = static_cast<int>(events.size());
    spec.eps_shift = w.eps_shift;
    spec.min_subopt = w.min_subopt;

    GeneratedContexts ctx;
    ctx.dim = w.feature_dim;
    ctx.box_hi.assign(static_cast<std::size_t>(w.feature_dim), w.box_hi);
    ctx.event_lo = w.box_hi + w.margin_delta + 0.02;
    ctx.event_hi = 1.0;
    ctx.event_rounds = events;
    ctx.stream = qrng.derive(kContextWord);
    spec.contexts = std::move(ctx);

    Rect oracle_rect{Context(static_cast<std::size_t>(w.feature_dim), 0.0),
                     Context(static_cast<std::size_t>(w.feature_dim), w.box_hi)};
    spec.oracle_concept = AprConcept{oracle_rect, w.margin_delta};
    specs.push_back(std::move(spec));
  }
  return specs;
}

namespace {

// 1-d probe concept used by the lower-bound context schedules.
constexpr double kProbeBoxHi = 0.3;
constexpr double kProbeDelta = 0.25;
constexpr double kProbeNegative = 0.15;
constexpr double kProbePositive = 0.9;

EnvironmentSpec probe_instance(long horizon, const std::vector<Segment>& segments,
                               const std::vector<long>& event_rounds, double eps_shift,
                               double min_subopt) {
  EnvironmentSpec spec;
  spec.n_arms = static_cast<int>(segments.front().click_probs.size());
  spec.horizon = horizon;
  spec.segments = segments;
  spec.num_events = static_cast<int>(segments.size()) - 1;
  spec.eps_shift = eps_shift;
  spec.min_subopt = min_subopt;

  std::vector<Context> contexts(static_cast<std::size_t>(horizon), Context{kProbeNegative});
  for (long t : event_rounds) contexts[static_cast<std::size_t>(t - 1)] = Context{kProbePositive};
  spec.contexts = std::move(contexts);
  spec.oracle_concept =
      AprConcept{Rect{Context{0.0}, Context{kProbeBoxHi}}, kProbeDelta};
  return spec;
}

}  // namespace

LowerBoundFamily gen_thm4(long T, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw GenerationError("thm4: eps outside (0, 1/2)");
  long N = static_cast<long>(std::floor(std::sqrt(static_cast<double>(T))));
  if (N < 2) throw GenerationError("thm4: horizon too small");

  LowerBoundFamily fam;
  fam.kind = LowerBoundFamily::Kind::Thm4;
  fam.phase_length = N;
  fam.num_phases = static_cast<int>(N);

  const std::vector<double> low{0.5, 0.5 - eps};
  const std::vector<double> high{0.5, 0.5 + eps};

  // I_0: z low throughout.
  fam.instances.push_back(probe_instance(T, {Segment{1, low}}, {}, eps, eps));
  for (long i = 1; i <= N; ++i) {
    long flip = (i - 1) * N + 1;
    if (flip <= 1) {
      // I_1: z is high from the first round; there is no preceding round, so
      // the instance is stationary.
      fam.instances.push_back(probe_instance(T, {Segment{1, high}}, {}, eps, eps));
    } else {
      fam.instances.push_back(
          probe_instance(T, {Segment{1, low}, Segment{flip, high}}, {flip}, eps, eps));
    }
  }
  return fam;
}

EnvironmentSpec gen_thm5i(long T, int phases, int n_arms, double eps, std::uint64_t seed) {
  if (phases < 1 || n_arms < 2) throw GenerationError("thm5i: need >= 1 phase and >= 2 arms");
  if (!(eps > 0.0 && eps < 0.25)) throw GenerationError("thm5i: eps outside (0, 1/4)");
  long phase_len = T / phases;
  if (phase_len < 1) throw GenerationError("thm5i: horizon too small for phase count");

  Rng rng(seed);
  std::vector<Segment> segments;
  std::vector<long> events;
  int best = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_arms)));
  for (int i = 0; i < phases; ++i) {
    if (i > 0) {
      int next = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_arms - 1)));
      if (next >= best) ++next;
      best = next;
    }
    std::vector<double> probs(static_cast<std::size_t>(n_arms), 0.5 - eps);
    probs[static_cast<std::size_t>(best)] = 0.5 + eps;
    long start = static_cast<long>(i) * phase_len + 1;
    segments.push_back(Segment{start, std::move(probs)});
    if (i > 0) events.push_back(start);
  }
  return probe_instance(T, segments, events, 2.0 * eps, 2.0 * eps);
}

LowerBoundFamily gen_thm5ii(long T, int d_cap, ClassParams params) {
  long by_horizon = static_cast<long>(std::floor(std::cbrt(static_cast<double>(T))));
  long want = std::min<long>(d_cap, by_horizon);
  if (want < 1) throw GenerationError("thm5ii: horizon too small");

  // Always-negative context for the schedule tails; seeding the greedy scan
  // with it forces every witness to label it negative.
  Context x_neg(static_cast<std::size_t>(params.dim), 0.0);
  double step = params.dim <= 1 ? 0.02 : (params.dim == 2 ? 0.05 : 0.1);
  std::vector<Context> grid =
      params.kind == ConceptKind::Apr ? linf_grid(params.dim, step) : l2_ball_grid(params.dim, step);
  DiameterCertificate cert = diameter_bruteforce(params, grid, {x_neg});
  if (cert.length() < static_cast<int>(want)) {
    throw GenerationError("thm5ii: probe grid admits only " + std::to_string(cert.length()) +
                          " positive-sequence elements; need " + std::to_string(want));
  }
  long N = want;
  long phase_len = T / N;

  const double e3 = std::exp(1.0 / 3.0);
  const double z_low = 1.0 / (1.0 + e3);
  const double z_high = e3 / (1.0 + e3);
  const double gap = 0.5 - z_low;  // also z_high - 0.5
  const std::vector<double> low{0.5, z_low};
  const std::vector<double> high{0.5, z_high};

  auto schedule = [&](long upto) {
    std::vector<Context> contexts(static_cast<std::size_t>(T), x_neg);
    for (long j = 1; j <= upto; ++j) {
      long start = (j - 1) * phase_len + 1;
      contexts[static_cast<std::size_t>(start - 1)] = cert.sequence[static_cast<std::size_t>(j - 1)];
    }
    return contexts;
  };
  auto negative_box_oracle = [&](long upto) -> Concept {
    // Labels x_neg and y_1..y_upto negative; used when the instance has no
    // event on a planted round.
    if (params.kind == ConceptKind::Apr) {
      Rect r = Rect::around(x_neg);
      for (long j = 1; j <= upto; ++j) r.include(cert.sequence[static_cast<std::size_t>(j - 1)]);
      return AprConcept{r, params.delta};
    }
    throw GenerationError("thm5ii: no always-negative-consistent concept for this class");
  };

  LowerBoundFamily fam;
  fam.kind = LowerBoundFamily::Kind::Thm5ii;
  fam.phase_length = phase_len;
  fam.num_phases = static_cast<int>(N);

  for (long i = 0; i <= N; ++i) {
    EnvironmentSpec spec;
    spec.n_arms = 2;
    spec.horizon = T;
    spec.eps_shift = gap;
    spec.min_subopt = gap;
    long flip = (i - 1) * phase_len + 1;
    if (i == 0) {
      spec.segments = {Segment{1, low}};
      spec.contexts = schedule(N);
      spec.oracle_concept = negative_box_oracle(N);
    } else if (flip <= 1) {
      spec.segments = {Segment{1, high}};
      spec.contexts = schedule(i);
      spec.oracle_concept = negative_box_oracle(i);
    } else {
      spec.segments = {Segment{1, low}, Segment{flip, high}};
      spec.contexts = schedule(i);
      spec.oracle_concept = cert.witnesses[static_cast<std::size_t>(i - 1)];
    }
    spec.num_events = static_cast<int>(spec.segments.size()) - 1;
    fam.instances.push_back(std::move(spec));
  }
  return fam;
}

}  // namespace ebandit
