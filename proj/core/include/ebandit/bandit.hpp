#pragma once

#include <vector>

#include "ebandit/rng.hpp"
#include "ebandit/types.hpp"

namespace ebandit {

struct ArmStats {
  long n = 0;      // pull count
  double x = 0.0;  // cumulative reward
  double mu = 0.0; // sample mean; 0 until the first pull
};

// Index of the testable bandit at round t with horizon T:
//   mu + 12 * sqrt(2 * ln(t + T) / (1 + n)).
double ucb_index(const ArmStats& stats, long t, long horizon);

// Baseline index bonus: mu + sqrt(8 * ln(t) / n). Forced initialization plays
// every arm once before this is consulted.
double ucb1_index(const ArmStats& stats, double t);

// Round guess: estimated optimal set and estimated eps-suboptimal set.
// Thresholds eps/4 < eps/2 keep the two sides disjoint.
struct Guess {
  std::vector<ArmId> g_plus;
  std::vector<ArmId> g_minus;
  bool plus_contains(ArmId a) const;
  bool minus_contains(ArmId a) const;
};

bool guess_sets_intersect(const Guess& first, const Guess& second);

struct GapEstimate {
  std::vector<double> delta_hat;
  ArmId anchor = 0;  // v*, the most-played arm of the recent window
};

// UCB with confidence radius alpha * sqrt(8 * ln(t0 + t) / (1 + n)) and the
// windowed gap estimator that makes it testable: after each round it can emit
// a guess (G+, G-) separating optimal from eps-suboptimal arms. Defaults
// alpha = 6, t0 = horizon reproduce ucb_index exactly.
class TestableUcb {
 public:
  struct Params {
    double eps = 0.1;
    double alpha = 6.0;
    long t0 = -1;  // -1: use the horizon
  };

  TestableUcb(int n_arms, long horizon, Params params);

  // Argmax of the index for the upcoming round; ties to the lowest arm id.
  ArmId select() const;
  void update(ArmId arm, int reward);

  // Arm played most often within the last ceil(t/2) rounds; ties to the
  // lowest arm id.
  ArmId most_played_recent() const;

  // delta_hat(v) = mu(v*) - mu(v). Throws ImmatureStateError until every arm
  // has been pulled at least once.
  GapEstimate gap_estimates() const;
  Guess guess() const { return guess(params_.eps); }
  Guess guess(double eps) const;

  long rounds_played() const { return t_; }
  int n_arms() const { return static_cast<int>(arms_.size()); }
  const ArmStats& stats(ArmId a) const { return arms_[static_cast<std::size_t>(a)]; }
  double index_of(ArmId a) const;

 private:
  std::vector<ArmStats> arms_;
  long horizon_;
  Params params_;
  long t_ = 0;

  std::vector<ArmId> play_log_;
  std::size_t log_offset_ = 0;   // play_log_[0] is round log_offset_ + 1
  std::size_t window_begin_ = 0; // index into the logical round sequence
  std::vector<long> window_count_;
};

// Baseline UCB with forced initialization; reset() reinitializes all arm
// statistics (the oracle-reset variant calls it at true event rounds).
class Ucb1 {
 public:
  explicit Ucb1(int n_arms);
  ArmId select() const;
  void update(ArmId arm, int reward);
  void reset();
  long rounds_played() const { return t_; }
  const ArmStats& stats(ArmId a) const { return arms_[static_cast<std::size_t>(a)]; }

 private:
  std::vector<ArmStats> arms_;
  long t_ = 0;
};

// Exponential-weights baseline with mixing parameter gamma and
// importance-weighted reward estimates.
class Exp3 {
 public:
  // Standard horizon-tuned mixing rate: min(1, sqrt(n ln n / ((e-1) T))).
  static double default_gamma(int n_arms, long horizon);

  Exp3(int n_arms, double gamma, Rng stream);
  Exp3(std::vector<double> weights, double gamma, Rng stream);

  std::vector<double> distribution() const;
  ArmId select();  // samples from the current distribution
  void update(ArmId arm, int reward);

 private:
  std::vector<double> weights_;
  double gamma_;
  Rng stream_;
};

}  // namespace ebandit
