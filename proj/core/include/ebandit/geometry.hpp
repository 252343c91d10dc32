#pragma once

#include <vector>

#include "ebandit/types.hpp"

namespace ebandit {

// Cross-product of nonempty closed intervals [lo[i], hi[i]].
struct Rect {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Context& x) const;

  // Smallest rect containing a point set; the usual incremental form.
  static Rect around(const Context& x);
  void include(const Context& x);
};

// L-inf distance from x to a rect: max over coordinates of the interval
// distance. Zero iff x lies inside.
double linf_distance_to_rect(const Context& x, const Rect& r);

double linf_norm(const Context& x);
double l2_norm(const Context& x);
double dot(const Context& a, const Context& b);

struct HullProjection {
  double distance = 0.0;
  Context point;  // closest point of the hull
};

// Euclidean distance from x to conv(points), to absolute tolerance `tol`.
// Iterative minimum-norm refinement with pairwise Frank-Wolfe steps; throws
// NumericalError if the gap has not closed after `max_iter` iterations.
HullProjection l2_project_to_hull(const Context& x, const std::vector<Context>& points,
                                  double tol = 1e-9, int max_iter = 10000);

double l2_distance_to_hull(const Context& x, const std::vector<Context>& points,
                           double tol = 1e-9, int max_iter = 10000);

// Threshold query: is L2(x, conv(points)) <= margin? Resolves early once the
// running upper/lower distance bounds separate from the margin.
bool hull_within(const Context& x, const std::vector<Context>& points, double margin,
                 double tol = 1e-9, int max_iter = 10000);

}  // namespace ebandit
