#include "polystab/pair.hpp"

#include <random>

namespace polystab {

Pair::Pair(SparseForm v_, SparseForm w_) : v(std::move(v_)), w(std::move(w_)) {
  v.validate();
  w.validate();
  if (v.is_zero() || w.is_zero()) throw DomainError("pair: forms must be nonzero");
  if (v.acting_dim() != w.acting_dim())
    throw DomainError("pair: forms live under actions of different rank");
}

std::optional<Destabilizer> destabilizer_from_polytopes(const LatticePolytope& nv,
                                                        const LatticePolytope& nw,
                                                        const TorusFrame& frame) {
  ContainmentResult r = contains_polytope(nv, nw);
  if (r.contained) return std::nullopt;
  // Both polytopes live in the sum-zero plane, so the separating functional
  // can be projected to a genuine 1-PSG without changing any pairing.
  OnePSG u = OnePSG::from(*r.certificate);
  Rat margin = minimize_linear(nw, u.u) - minimize_linear(nv, u.u);
  if (!(margin > 0)) throw std::logic_error("destabilizer margin failed to replay");
  return Destabilizer{frame, std::move(u), std::move(margin)};
}

PairVerdict check_pair_numerical(const Pair& p, const std::vector<TorusFrame>& frames) {
  if (frames.empty()) throw DomainError("check_pair_numerical: no torus frames supplied");
  PairVerdict verdict;
  for (const auto& frame : frames) {
    ++verdict.tested_frames;
    LatticePolytope nv = weight_polytope(p.v, frame);
    LatticePolytope nw = weight_polytope(p.w, frame);
    if (auto d = destabilizer_from_polytopes(nv, nw, frame)) {
      verdict.status = PairStatus::Destabilized;
      verdict.certificate = std::move(d);
      return verdict;
    }
  }
  verdict.status = PairStatus::SemistableForTestedTori;
  return verdict;
}

Rat destabilizing_slope(const Pair& p, const TorusFrame& frame, const OnePSG& u) {
  return one_psg_weight(p.w, frame, u) - one_psg_weight(p.v, frame, u);
}

PairVerdict hilbert_mumford_check(const SparseForm& w, const std::vector<TorusFrame>& frames) {
  if (w.is_zero()) throw DomainError("hilbert_mumford_check: zero form");
  Pair p(SparseForm::constant_one(w.acting_dim()), w);
  return check_pair_numerical(p, frames);
}

std::vector<TorusFrame> default_frames(int dim, int count, uint64_t seed) {
  if (dim < 1 || count < 1) throw DomainError("default_frames: need dim >= 1 and count >= 1");
  std::vector<TorusFrame> frames;
  frames.push_back(TorusFrame::identity(dim));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  while (static_cast<int>(frames.size()) < count) {
    GMat m = GMat::identity(dim);
    // a few unimodular row operations keep the conjugator integral
    for (int step = 0; step < 3; ++step) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      int c = coef(rng);
      if (c == 0) c = 1;
      for (int col = 0; col < dim; ++col) m.at(j, col) += GQ(Rat(c)) * m.at(i, col);
    }
    if (m.is_identity()) continue;
    frames.emplace_back(std::move(m), "shear#" + std::to_string(frames.size()));
  }
  return frames;
}

}  // namespace polystab
