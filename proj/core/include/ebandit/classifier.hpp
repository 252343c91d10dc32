#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ebandit/geometry.hpp"
#include "ebandit/types.hpp"

namespace ebandit {

// Three-valued concept output; Null marks contexts infeasible under the
// concept (the oracle never emits them).
enum class Label { Positive, Negative, Null };

// Axis-parallel rectangle with outside margin delta over the L-inf unit ball:
// +1 when L_inf(x, rect) >= delta, -1 when x is in rect, Null in between.
struct AprConcept {
  Rect rect;
  double delta = 0.0;
};

// Hyperplane with margin delta over the L2 unit ball: +1 when
// w . (x + u) >= delta, -1 when w . (x + u) < -delta, Null in between.
// w is the unit normal, u the shift vector with |u|_2 <= 1.
struct HypConcept {
  std::vector<double> w;
  std::vector<double> u;
  double delta = 0.0;
};

using Concept = std::variant<AprConcept, HypConcept>;

enum class ConceptKind { Apr, Hyp };

struct ClassParams {
  ConceptKind kind = ConceptKind::Apr;
  int dim = 1;
  double delta = 0.1;
};

ConceptKind concept_kind(const Concept& c);
int concept_dim(const Concept& c);
ClassParams params_of(const Concept& c);

// Exact three-valued evaluation. Throws std::invalid_argument when x violates
// the concept's universe (norm ball) or dimension.
Label concept_eval(const Concept& c, const Context& x);

// Online classifier that predicts negative on x iff no concept of the class
// is positive on x while labeling every stored false-labeled sample negative.
// For rectangles that is the delta-ball around the bounding box of the
// negatives; for hyperplanes the 2*delta-ball around their convex hull. With
// no negatives stored it always predicts positive.
class SafeCl {
 public:
  explicit SafeCl(ClassParams params);

  bool predict_positive(const Context& x) const;
  void feed_negative(const Context& x);

  const std::vector<Context>& negatives() const { return negatives_; }
  const ClassParams& params() const { return params_; }
  // Bounding-box cache; only meaningful for the Apr class with >= 1 negative.
  const Rect& bounding_box() const { return bbox_; }

 private:
  ClassParams params_;
  std::vector<Context> negatives_;
  Rect bbox_;
};

// Witnessed positive-sequence certificate: witnesses[t] labels sequence[t]
// positive and every earlier element negative.
struct DiameterCertificate {
  std::vector<Context> sequence;
  std::vector<Concept> witnesses;
  int length() const { return static_cast<int>(sequence.size()); }
};

bool check_certificate(const DiameterCertificate& cert);

// Greedy maximal positive sequence over a finite grid: repeatedly takes the
// first grid point SafeCl still classifies positive, feeds it, and records a
// witness concept. The result length lower-bounds the class diameter
// restricted to the grid. `seed_negatives` are fed before the scan; every
// witness also labels them negative.
DiameterCertificate diameter_bruteforce(ClassParams params, const std::vector<Context>& grid,
                                        const std::vector<Context>& seed_negatives = {});

// Regular grids over the class universe, for diameter searches and tests.
std::vector<Context> linf_grid(int dim, double step);
std::vector<Context> l2_ball_grid(int dim, double step);

}  // namespace ebandit
