#pragma once

// Exact rational convex geometry: hulls with V- and H-representations,
// linear minimization, containment with separating certificates, and the
// sum-zero quotient projection of character space.
//
// Everything here is exact; no floating point touches a verdict. Dimensions
// are small in practice, so the hull algorithms favor auditability over
// asymptotics.

#include <optional>
#include <vector>

#include "polystab/linalg.hpp"
#include "polystab/rational.hpp"

namespace polystab {

// <normal, x> >= offset for all points of the polytope, with equality on
// the supporting facet. Normals are primitive integer vectors.
struct Halfspace {
  std::vector<long long> normal;
  Rat offset;
};

// <normal, x> == offset on the whole polytope (affine hull constraint).
struct Equality {
  std::vector<long long> normal;
  Rat offset;
};

struct LatticePolytope {
  std::vector<QVec> vertices;  // lex-sorted, duplicate-free extreme points
  std::vector<Halfspace> halfspaces;
  std::vector<Equality> equalities;
  int ambient_dim = 0;
  int affine_dim = 0;
};

LatticePolytope convex_hull(const std::vector<QVec>& points);

Rat minimize_linear(const LatticePolytope& p, const std::vector<long long>& u);
Rat minimize_linear(const LatticePolytope& p, const QVec& u);

struct ContainmentResult {
  bool contained = false;
  // Present iff separated: a primitive integer u with
  // minimize_linear(q, u) > minimize_linear(p, u).
  std::optional<std::vector<long long>> certificate;
  Rat min_p, min_q;  // the replayed minima for the certificate
};

// Is p a subset of q? Exact vertex-against-constraint check; SEPARATED
// verdicts carry a replayable certificate.
ContainmentResult contains_polytope(const LatticePolytope& p, const LatticePolytope& q);

QVec quotient_project(const QVec& x);

LatticePolytope scale_polytope(const LatticePolytope& p, const Rat& k);

}  // namespace polystab
