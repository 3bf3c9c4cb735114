#pragma once

// The pair energy log||sigma.w||^2 - log||sigma.v||^2, its Fubini-Study
// distance identity, asymptotics along one-parameter subgroups, and a
// seeded Cartan-style scan. Norms squared stay exact rationals; logarithms
// only appear in reports.

#include <cstdint>
#include <vector>

#include "polystab/forms.hpp"

namespace polystab {

// Diagonal Hermitian norm on each module: ||f||^2 = sum_m weight(m)*|f_m|^2
// over the monomial basis. Missing entries default to weight 1.
struct HermitianFrame {
  std::map<Exps, Rat> weights;

  Rat weight(const Exps& e) const;
};

Rat norm_sq(const SparseForm& f, const HermitianFrame& frame);
// Hermitian pairing <a, b> = sum_m weight(m) * a_m * conj(b_m); shapes must match.
GQ hermitian_inner(const SparseForm& a, const SparseForm& b, const HermitianFrame& frame);

// An element of the direct sum V ⊕ W; either part may be zero.
struct DirectSumVector {
  SparseForm first, second;
};

struct EnergySample {
  GMat sigma;
  Rat norm_v_sq, norm_w_sq;
  double p = 0.0;  // log(norm_w_sq) - log(norm_v_sq), reporting only
};

EnergySample energy(const SparseForm& v, const SparseForm& w, const GMat& sigma,
                    const HermitianFrame& frame);

// Fubini-Study distance arccos(|<x,y>| / (||x||*||y||)) in [0, pi/2].
double fs_distance(const DirectSumVector& x, const DirectSumVector& y, const HermitianFrame& frame);

// |p_{v,w}(sigma) - log tan^2 d(sigma.(v,w), sigma.(v,0))|
double distance_identity_residual(const SparseForm& v, const SparseForm& w, const GMat& sigma,
                                  const HermitianFrame& frame);

struct SlopeRow {
  Rat alpha;
  Rat norm_v_sq, norm_w_sq;
  double p = 0.0;
};

struct SlopeReport {
  std::vector<SlopeRow> rows;
  double slope_lsq = 0.0;     // least squares of p against log(alpha^2)
  double slope_finest = 0.0;  // finite difference at the two smallest alphas
  long long slope_rounded = 0;
  double drift_bound = 0.0;  // max |p - slope_rounded*log(alpha^2) - c0| over the grid
};

SlopeReport energy_along_psg(const SparseForm& v, const SparseForm& w, const OnePSG& u,
                             const HermitianFrame& frame, const std::vector<Rat>& alphas);

std::vector<Rat> default_alpha_grid();  // 10^-1 .. 10^-6

struct ScanConfig {
  uint64_t seed = 424242;  // fixed default, echoed in reports
  int samples = 200;
  int rotation_factors = 3;
  int max_diag_exp = 5;
  Rat beta = Rat(1, 2);  // diagonal entries are powers of beta
};

struct ScanReport {
  ScanConfig config;
  double min_p = 0.0;
  GMat argmin;
  Rat argmin_norm_v_sq, argmin_norm_w_sq;
  int evaluated = 0;
};

// Heuristic infimum probe over sigma = k1 * t * k2 with rational rotations
// and a geometric diagonal grid. Never a proof; excluded from gating.
ScanReport energy_scan(const SparseForm& v, const SparseForm& w, const HermitianFrame& frame,
                       const ScanConfig& config);

}  // namespace polystab
