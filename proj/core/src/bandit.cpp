#include "ebandit/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ebandit {

double ucb_index(const ArmStats& stats, long t, long horizon) {
  return stats.mu + 12.0 * std::sqrt(2.0 * std::log(static_cast<double>(t + horizon)) /
                                     (1.0 + static_cast<double>(stats.n)));
}

double ucb1_index(const ArmStats& stats, double t) {
  return stats.mu + std::sqrt(8.0 * std::log(t) / static_cast<double>(stats.n));
}

bool Guess::plus_contains(ArmId a) const {
  return std::find(g_plus.begin(), g_plus.end(), a) != g_plus.end();
}

bool Guess::minus_contains(ArmId a) const {
  return std::find(g_minus.begin(), g_minus.end(), a) != g_minus.end();
}

bool guess_sets_intersect(const Guess& first, const Guess& second) {
  for (ArmId a : first.g_plus) {
    if (second.minus_contains(a)) return true;
  }
  return false;
}

TestableUcb::TestableUcb(int n_arms, long horizon, Params params)
    : arms_(static_cast<std::size_t>(n_arms)),
      horizon_(horizon),
      params_(params),
      window_count_(static_cast<std::size_t>(n_arms), 0) {
  if (n_arms < 1) throw std::invalid_argument("TestableUcb: need at least one arm");
  if (horizon < 1) throw std::invalid_argument("TestableUcb: horizon must be >= 1");
  if (params_.t0 < 0) params_.t0 = horizon;
}

double TestableUcb::index_of(ArmId a) const {
  const ArmStats& s = arms_[static_cast<std::size_t>(a)];
  double t = static_cast<double>(params_.t0 + t_ + 1);
  return s.mu +
         params_.alpha * std::sqrt(8.0 * std::log(t) / (1.0 + static_cast<double>(s.n)));
}

ArmId TestableUcb::select() const {
  ArmId best = 0;
  double best_index = index_of(0);
  for (ArmId a = 1; a < n_arms(); ++a) {
    double idx = index_of(a);
    if (idx > best_index) {
      best_index = idx;
      best = a;
    }
  }
  return best;
}

void TestableUcb::update(ArmId arm, int reward) {
  ArmStats& s = arms_[static_cast<std::size_t>(arm)];
  s.n += 1;
  s.x += reward;
  s.mu = s.x / static_cast<double>(s.n);
  t_ += 1;

  play_log_.push_back(arm);
  window_count_[static_cast<std::size_t>(arm)] += 1;
  std::size_t target = static_cast<std::size_t>((t_ + 1) / 2);  // ceil(t/2)
  std::size_t rounds_logged = log_offset_ + play_log_.size();
  while (rounds_logged - window_begin_ > target) {
    window_count_[static_cast<std::size_t>(play_log_[window_begin_ - log_offset_])] -= 1;
    ++window_begin_;
  }
  // Entries left of the window never re-enter it; drop them periodically.
  if (window_begin_ - log_offset_ > play_log_.size() / 2 && play_log_.size() > 4096) {
    std::size_t drop = window_begin_ - log_offset_;
    play_log_.erase(play_log_.begin(), play_log_.begin() + static_cast<long>(drop));
    log_offset_ += drop;
  }
}

ArmId TestableUcb::most_played_recent() const {
  if (t_ < 1) throw std::logic_error("most_played_recent: no rounds played");
  ArmId best = 0;
  long best_count = window_count_[0];
  for (ArmId a = 1; a < n_arms(); ++a) {
    if (window_count_[static_cast<std::size_t>(a)] > best_count) {
      best_count = window_count_[static_cast<std::size_t>(a)];
      best = a;
    }
  }
  return best;
}

GapEstimate TestableUcb::gap_estimates() const {
  for (const ArmStats& s : arms_) {
    if (s.n == 0) throw ImmatureStateError("gap_estimates: some arm has never been pulled");
  }
  GapEstimate out;
  out.anchor = most_played_recent();
  double mu_star = arms_[static_cast<std::size_t>(out.anchor)].mu;
  out.delta_hat.resize(arms_.size());
  for (std::size_t a = 0; a < arms_.size(); ++a) out.delta_hat[a] = mu_star - arms_[a].mu;
  out.delta_hat[static_cast<std::size_t>(out.anchor)] = 0.0;
  return out;
}

Guess TestableUcb::guess(double eps) const {
  GapEstimate gaps = gap_estimates();
  Guess g;
  for (ArmId a = 0; a < n_arms(); ++a) {
    double dh = gaps.delta_hat[static_cast<std::size_t>(a)];
    if (dh <= eps / 4.0) g.g_plus.push_back(a);
    if (dh > eps / 2.0) g.g_minus.push_back(a);
  }
  return g;
}

Ucb1::Ucb1(int n_arms) : arms_(static_cast<std::size_t>(n_arms)) {
  if (n_arms < 1) throw std::invalid_argument("Ucb1: need at least one arm");
}

ArmId Ucb1::select() const {
  for (ArmId a = 0; a < static_cast<ArmId>(arms_.size()); ++a) {
    if (arms_[static_cast<std::size_t>(a)].n == 0) return a;
  }
  double t = static_cast<double>(t_ + 1);
  ArmId best = 0;
  double best_index = ucb1_index(arms_[0], t);
  for (ArmId a = 1; a < static_cast<ArmId>(arms_.size()); ++a) {
    double idx = ucb1_index(arms_[static_cast<std::size_t>(a)], t);
    if (idx > best_index) {
      best_index = idx;
      best = a;
    }
  }
  return best;
}

void Ucb1::update(ArmId arm, int reward) {
  ArmStats& s = arms_[static_cast<std::size_t>(arm)];
  s.n += 1;
  s.x += reward;
  s.mu = s.x / static_cast<double>(s.n);
  t_ += 1;
}

void Ucb1::reset() {
  std::fill(arms_.begin(), arms_.end(), ArmStats{});
  t_ = 0;
}

double Exp3::default_gamma(int n_arms, long horizon) {
  double n = static_cast<double>(n_arms);
  double g = std::sqrt(n * std::log(n) / ((std::exp(1.0) - 1.0) * static_cast<double>(horizon)));
  return std::min(1.0, g);
}

Exp3::Exp3(int n_arms, double gamma, Rng stream)
    : Exp3(std::vector<double>(static_cast<std::size_t>(std::max(n_arms, 0)), 1.0), gamma,
           stream) {}

Exp3::Exp3(std::vector<double> weights, double gamma, Rng stream)
    : weights_(std::move(weights)), gamma_(gamma), stream_(stream) {
  if (weights_.empty()) throw std::invalid_argument("Exp3: need at least one arm");
  if (!(gamma_ >= 0.0 && gamma_ <= 1.0)) throw std::invalid_argument("Exp3: gamma outside [0,1]");
}

std::vector<double> Exp3::distribution() const {
  double total = 0.0;
  for (double w : weights_) total += w;
  std::vector<double> p(weights_.size());
  double n = static_cast<double>(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    p[i] = (1.0 - gamma_) * (weights_[i] / total) + gamma_ / n;
  }
  return p;
}

ArmId Exp3::select() {
  std::vector<double> p = distribution();
  double u = stream_.next_u01();
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += p[i];
    if (u < acc) return static_cast<ArmId>(i);
  }
  return static_cast<ArmId>(p.size() - 1);
}

void Exp3::update(ArmId arm, int reward) {
  std::vector<double> p = distribution();
  double n = static_cast<double>(weights_.size());
  double estimate = static_cast<double>(reward) / p[static_cast<std::size_t>(arm)];
  weights_[static_cast<std::size_t>(arm)] *= std::exp(gamma_ * estimate / n);

  // Keep weights representable; scaling every weight leaves the distribution
  // unchanged.
  double wmax = *std::max_element(weights_.begin(), weights_.end());
  if (wmax > 1e150) {
    for (double& w : weights_) w /= wmax;
  }
}

}  // namespace ebandit
