#include "ebandit/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ebandit {

namespace {

constexpr double kUniverseTol = 1e-9;
// Widening applied to the negative-side margin so floating-point rounding
// cannot flip a sample that is mathematically inside the safe region.
constexpr double kRoundingSlack = 1e-12;

void check_universe(ConceptKind kind, int dim, const Context& x) {
  if (static_cast<int>(x.size()) != dim) {
    throw std::invalid_argument("context dimension mismatch");
  }
  if (kind == ConceptKind::Apr) {
    if (linf_norm(x) > 1.0 + kUniverseTol) {
      throw std::invalid_argument("context outside the L-inf unit ball");
    }
  } else {
    if (l2_norm(x) > 1.0 + kUniverseTol) {
      throw std::invalid_argument("context outside the L2 unit ball");
    }
  }
}

}  // namespace

ConceptKind concept_kind(const Concept& c) {
  return std::holds_alternative<AprConcept>(c) ? ConceptKind::Apr : ConceptKind::Hyp;
}

int concept_dim(const Concept& c) {
  if (const auto* a = std::get_if<AprConcept>(&c)) return a->rect.dim();
  return static_cast<int>(std::get<HypConcept>(c).w.size());
}

ClassParams params_of(const Concept& c) {
  if (const auto* a = std::get_if<AprConcept>(&c)) {
    return ClassParams{ConceptKind::Apr, a->rect.dim(), a->delta};
  }
  const auto& h = std::get<HypConcept>(c);
  return ClassParams{ConceptKind::Hyp, static_cast<int>(h.w.size()), h.delta};
}

Label concept_eval(const Concept& c, const Context& x) {
  if (const auto* a = std::get_if<AprConcept>(&c)) {
    check_universe(ConceptKind::Apr, a->rect.dim(), x);
    double d = linf_distance_to_rect(x, a->rect);
    if (d >= a->delta) return Label::Positive;
    if (d == 0.0) return Label::Negative;
    return Label::Null;
  }
  const auto& h = std::get<HypConcept>(c);
  check_universe(ConceptKind::Hyp, static_cast<int>(h.w.size()), x);
  double s = dot(h.w, x) + dot(h.w, h.u);
  if (s >= h.delta) return Label::Positive;
  if (s < -h.delta) return Label::Negative;
  return Label::Null;
}

SafeCl::SafeCl(ClassParams params) : params_(params) {
  if (params_.dim < 1) throw std::invalid_argument("SafeCl: dim must be >= 1");
  if (!(params_.delta > 0.0)) throw std::invalid_argument("SafeCl: delta must be > 0");
}

bool SafeCl::predict_positive(const Context& x) const {
  check_universe(params_.kind, params_.dim, x);
  if (negatives_.empty()) return true;
  if (params_.kind == ConceptKind::Apr) {
    return linf_distance_to_rect(x, bbox_) > params_.delta + kRoundingSlack;
  }
  return !hull_within(x, negatives_, 2.0 * params_.delta + kRoundingSlack);
}

void SafeCl::feed_negative(const Context& x) {
  check_universe(params_.kind, params_.dim, x);
  if (negatives_.empty()) {
    bbox_ = Rect::around(x);
  } else {
    bbox_.include(x);
  }
  negatives_.push_back(x);
}

bool check_certificate(const DiameterCertificate& cert) {
  if (cert.sequence.size() != cert.witnesses.size()) return false;
  for (std::size_t t = 0; t < cert.sequence.size(); ++t) {
    if (concept_eval(cert.witnesses[t], cert.sequence[t]) != Label::Positive) return false;
    for (std::size_t s = 0; s < t; ++s) {
      if (concept_eval(cert.witnesses[t], cert.sequence[s]) != Label::Negative) return false;
    }
  }
  return true;
}

namespace {

Concept apr_witness(const ClassParams& params, const std::vector<Context>& negatives,
                    const Context& x) {
  if (!negatives.empty()) {
    Rect r = Rect::around(negatives.front());
    for (const auto& p : negatives) r.include(p);
    return AprConcept{r, params.delta};
  }
  // No prior negatives: any point-rect at L-inf distance >= delta from x.
  Context corner(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) corner[k] = x[k];
  corner[0] = x[0] - (x[0] >= 0.0 ? 1.0 : -1.0) * std::max(params.delta * 1.5, 0.25);
  return AprConcept{Rect{corner, corner}, params.delta};
}

Concept hyp_witness(const ClassParams& params, const Context& x, const HullProjection* proj) {
  const std::size_t d = x.size();
  std::vector<double> w(d, 0.0), u(d, 0.0);
  if (proj == nullptr) {
    double nx = l2_norm(x);
    if (nx > 0.0) {
      for (std::size_t k = 0; k < d; ++k) w[k] = x[k] / nx;
    } else {
      w[0] = 1.0;
    }
    // w.(x+u) = delta with |u| = |delta - w.x| <= 1.
    double shift = params.delta - dot(w, x);
    for (std::size_t k = 0; k < d; ++k) u[k] = shift * w[k];
    return HypConcept{w, u, params.delta};
  }
  for (std::size_t k = 0; k < d; ++k) w[k] = (x[k] - proj->point[k]) / proj->distance;
  double mid = dot(w, proj->point) + proj->distance / 2.0;
  for (std::size_t k = 0; k < d; ++k) u[k] = -mid * w[k];
  return HypConcept{w, u, params.delta};
}

}  // namespace

DiameterCertificate diameter_bruteforce(ClassParams params, const std::vector<Context>& grid,
                                        const std::vector<Context>& seed_negatives) {
  constexpr std::size_t kGridCap = 2'000'000;
  if (grid.size() > kGridCap) {
    throw ResourceError("diameter_bruteforce: grid too large");
  }
  SafeCl cl(params);
  for (const auto& s : seed_negatives) cl.feed_negative(s);

  DiameterCertificate cert;
  bool found = true;
  while (found) {
    found = false;
    for (const auto& x : grid) {
      if (!cl.predict_positive(x)) continue;
      Concept witness;
      if (params.kind == ConceptKind::Apr) {
        witness = apr_witness(params, cl.negatives(), x);
      } else if (cl.negatives().empty()) {
        witness = hyp_witness(params, x, nullptr);
      } else {
        // Require comfortable separation so the witness hyperplane is valid
        // beyond the distance solver's tolerance.
        HullProjection proj = l2_project_to_hull(x, cl.negatives());
        if (proj.distance <= 2.0 * params.delta + 1e-6) continue;
        witness = hyp_witness(params, x, &proj);
      }
      cert.sequence.push_back(x);
      cert.witnesses.push_back(std::move(witness));
      cl.feed_negative(x);
      found = true;
      break;
    }
  }
  return cert;
}

std::vector<Context> linf_grid(int dim, double step) {
  std::vector<Context> grid;
  std::vector<int> steps;
  int per_dim = static_cast<int>(std::floor(2.0 / step)) + 1;
  double total = std::pow(static_cast<double>(per_dim), dim);
  if (total > 2'000'000.0) throw ResourceError("linf_grid: grid too large");
  Context x(dim, -1.0);
  std::vector<int> idx(dim, 0);
  while (true) {
    grid.push_back(x);
    int k = 0;
    while (k < dim) {
      if (++idx[k] < per_dim) {
        x[k] = -1.0 + idx[k] * step;
        break;
      }
      idx[k] = 0;
      x[k] = -1.0;
      ++k;
    }
    if (k == dim) break;
  }
  return grid;
}

std::vector<Context> l2_ball_grid(int dim, double step) {
  std::vector<Context> grid = linf_grid(dim, step);
  std::erase_if(grid, [](const Context& x) { return l2_norm(x) > 1.0; });
  return grid;
}

}  // namespace ebandit
