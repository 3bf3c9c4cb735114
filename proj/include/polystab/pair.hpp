#pragma once

// Numerical semistability of pairs: weight-polytope containment over a
// family of tori, with replayable destabilizer certificates.

#include <cstdint>
#include <optional>
#include <vector>

#include "polystab/forms.hpp"

namespace polystab {

struct Pair {
  SparseForm v, w;

  Pair(SparseForm v_, SparseForm w_);  // validates nonzero + compatible action
};

enum class PairStatus { SemistableForTestedTori, Destabilized };

struct Destabilizer {
  TorusFrame frame;
  OnePSG u;
  Rat margin;  // one_psg_weight(w) - one_psg_weight(v), strictly positive
};

struct PairVerdict {
  PairStatus status = PairStatus::SemistableForTestedTori;
  std::optional<Destabilizer> certificate;
  int tested_frames = 0;
};

// Checks N(v) ⊆ N(w) frame by frame; the first separation wins and is
// converted into a primitive sum-zero 1-PSG certificate. Deterministic in
// the frame order.
PairVerdict check_pair_numerical(const Pair& p, const std::vector<TorusFrame>& frames);

// w_lambda(w) - w_lambda(v); positive values certify energy divergence.
Rat destabilizing_slope(const Pair& p, const TorusFrame& frame, const OnePSG& u);

// Classical Hilbert-Mumford semistability as the pair (1, w).
PairVerdict hilbert_mumford_check(const SparseForm& w, const std::vector<TorusFrame>& frames);

// Identity plus seeded pseudorandom integer shear conjugators.
std::vector<TorusFrame> default_frames(int dim, int count, uint64_t seed);

// Shared helper: containment result for one frame's polytope pair, with the
// certificate lifted to a 1-PSG. Exposed for callers that precompute
// polytopes (enumeration drivers, the curve checker).
std::optional<Destabilizer> destabilizer_from_polytopes(const LatticePolytope& nv,
                                                        const LatticePolytope& nw,
                                                        const TorusFrame& frame);

}  // namespace polystab
