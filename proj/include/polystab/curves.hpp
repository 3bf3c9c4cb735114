#pragma once

// Plane-curve specialization of the resultant/hyperdiscriminant test: the
// Chow form on pairs of lines, the dual-curve discriminant by exact
// elimination, degree normalization, and the polytope criterion for
// lower-boundedness of the energy on algebraic degenerations.

#include <optional>
#include <vector>

#include "polystab/pair.hpp"

namespace polystab {

bool is_smooth_plane_curve(const SparseForm& f);

struct PlaneCurve {
  SparseForm form;  // covariant, 3 variables, homogeneous of degree >= 2
  int degree = 0;
  bool smooth = false;

  static PlaneCurve of(SparseForm f);
};

struct CurveStabilityData {
  int d = 0;
  int deg_resultant = 0;        // 2d
  int deg_hyperdiscriminant = 0;  // d(d-1)
  int mu = 0;                     // 3-d
  long long normalized_degree = 0;  // common degree of the normalized powers
};

CurveStabilityData degrees_and_mu(int d);

// R_X(U,V) = F(U x V) on two contravariant line blocks; bidegree (d, d).
SparseForm x_resultant(const PlaneCurve& c);

// Defining form of the dual curve, canonically normalized; degree d(d-1).
// Throws for singular curves or if elimination leaves extraneous content.
SparseForm hyperdiscriminant(const PlaneCurve& c);

// Elimination core, exposed for duals of contravariant forms (biduality).
SparseForm dual_curve(const SparseForm& f);

struct CurveFrameReport {
  TorusFrame frame;
  bool contained = false;
  std::optional<Destabilizer> certificate;
};

struct CurveCheckReport {
  CurveStabilityData data;
  std::vector<CurveFrameReport> frames;
  PairVerdict verdict;
};

// N(R) = deg_Delta * N(R_X) against N(Delta) = deg_R * N(Delta_X), the
// normalized powers never being expanded.
CurveCheckReport mabuchi_bound_report(const PlaneCurve& c, const std::vector<TorusFrame>& frames);
PairVerdict mabuchi_bound_check(const PlaneCurve& c, const std::vector<TorusFrame>& frames);

struct EquivarianceReport {
  bool resultant_equal = false;
  bool hyperdiscriminant_proportional = false;
  GQ hyperdiscriminant_scalar;  // D(sigma.X) == scalar * sigma.D(X)
};

EquivarianceReport equivariance_check(const PlaneCurve& c, const GMat& sigma);

}  // namespace polystab
