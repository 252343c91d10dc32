#include "ebandit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ebandit {

bool Rect::contains(const Context& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  }
  return true;
}

Rect Rect::around(const Context& x) { return Rect{x, x}; }

void Rect::include(const Context& x) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::min(lo[i], x[i]);
    hi[i] = std::max(hi[i], x[i]);
  }
}

double linf_distance_to_rect(const Context& x, const Rect& r) {
  if (r.lo.empty() || r.lo.size() != x.size()) {
    throw std::invalid_argument("linf_distance_to_rect: dimension mismatch or empty rect");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    d = std::max(d, std::max(r.lo[i] - x[i], x[i] - r.hi[i]));
  }
  return std::max(d, 0.0);
}

double linf_norm(const Context& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double l2_norm(const Context& x) { return std::sqrt(dot(x, x)); }

double dot(const Context& a, const Context& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Minimum-norm point of conv{points[i] - x}. Maintains convex weights and the
// running combination q; pairwise steps move mass from the worst active atom
// to the best one, which converges linearly on polytopes.
//
// If `margin` >= 0, stops as soon as the distance bounds resolve the query
// "distance <= margin" and reports through *within. Otherwise runs to `tol`.
HullProjection min_norm_point(const Context& x, const std::vector<Context>& points,
                              double tol, int max_iter, double margin, bool* within) {
  const std::size_t m = points.size();
  if (m == 0) throw std::invalid_argument("hull distance: empty point set");
  const std::size_t d = x.size();

  std::vector<Context> v(m, Context(d));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < d; ++k) v[i][k] = points[i][k] - x[k];
  }

  // Start from the nearest vertex.
  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i) {
    double n2 = dot(v[i], v[i]);
    if (n2 < best) {
      best = n2;
      start = i;
    }
  }
  std::vector<double> lambda(m, 0.0);
  lambda[start] = 1.0;
  Context q = v[start];

  auto finish = [&](double dist) {
    HullProjection out;
    out.distance = dist;
    out.point.resize(d);
    for (std::size_t k = 0; k < d; ++k) out.point[k] = x[k] + q[k];
    return out;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    double qq = dot(q, q);
    double upper = std::sqrt(qq);
    if (upper <= tol) {
      if (within) *within = true;
      return finish(0.0);
    }

    // Frank-Wolfe atom (most aligned against q) and away atom among the
    // active set.
    std::size_t fw = 0, away = 0;
    double fw_val = std::numeric_limits<double>::infinity();
    double away_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      double s = dot(v[i], q);
      if (s < fw_val) {
        fw_val = s;
        fw = i;
      }
      if (lambda[i] > 0.0 && s > away_val) {
        away_val = s;
        away = i;
      }
    }

    double lower = std::max(fw_val / upper, 0.0);
    if (within && margin >= 0.0) {
      if (upper <= margin) {
        *within = true;
        return finish(upper);
      }
      if (lower > margin) {
        *within = false;
        return finish(upper);
      }
    }
    if (upper - lower <= tol) {
      if (within) *within = (upper <= margin);
      return finish(upper);
    }

    // Pairwise step: shift weight from `away` to `fw`.
    Context dir(d);
    for (std::size_t k = 0; k < d; ++k) dir[k] = v[fw][k] - v[away][k];
    double dd = dot(dir, dir);
    if (dd <= 0.0) {
      if (within) *within = (upper <= margin);
      return finish(upper);
    }
    double gamma = -dot(q, dir) / dd;
    gamma = std::clamp(gamma, 0.0, lambda[away]);
    if (gamma == 0.0) {
      // No progress possible along the pairwise direction; bounds are final
      // up to numerical precision.
      if (within) *within = (upper <= margin);
      return finish(upper);
    }
    lambda[fw] += gamma;
    lambda[away] -= gamma;
    for (std::size_t k = 0; k < d; ++k) q[k] += gamma * dir[k];

    // Periodically rebuild q from the weights to cancel drift.
    if ((iter & 63) == 63) {
      std::fill(q.begin(), q.end(), 0.0);
      double wsum = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (lambda[i] <= 0.0) continue;
        wsum += lambda[i];
        for (std::size_t k = 0; k < d; ++k) q[k] += lambda[i] * v[i][k];
      }
      if (wsum > 0.0) {
        for (std::size_t k = 0; k < d; ++k) q[k] /= wsum;
        for (std::size_t i = 0; i < m; ++i) lambda[i] /= wsum;
      }
    }
  }
  throw NumericalError("hull distance: no convergence within iteration cap");
}

}  // namespace

HullProjection l2_project_to_hull(const Context& x, const std::vector<Context>& points,
                                  double tol, int max_iter) {
  return min_norm_point(x, points, tol, max_iter, -1.0, nullptr);
}

double l2_distance_to_hull(const Context& x, const std::vector<Context>& points, double tol,
                           int max_iter) {
  return min_norm_point(x, points, tol, max_iter, -1.0, nullptr).distance;
}

bool hull_within(const Context& x, const std::vector<Context>& points, double margin, double tol,
                 int max_iter) {
  bool within = false;
  min_norm_point(x, points, tol, max_iter, margin, &within);
  return within;
}

}  // namespace ebandit
