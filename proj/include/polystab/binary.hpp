#pragma once

// Pairs of binary forms under SL(2): the closed-form semistability rule on
// root multiplicities, and a finite root-adapted torus family that makes the
// polytope test complete at this rank. The two routes check each other.

#include <string_view>
#include <utility>
#include <vector>

#include "polystab/pair.hpp"

namespace polystab {

// A point of the projective line in canonical form: [a : 1] or [1 : 0].
struct ProjPoint {
  GQ a, b;

  static ProjPoint of(const GQ& a, const GQ& b);
  bool is_infinity() const { return b.is_zero(); }
};

bool operator==(const ProjPoint& p, const ProjPoint& q);
bool operator!=(const ProjPoint& p, const ProjPoint& q);
bool operator<(const ProjPoint& p, const ProjPoint& q);
std::string point_to_string(const ProjPoint& p);

struct FactoredBinaryForm {
  // distinct points with multiplicities >= 1, canonically ordered;
  // the empty product is the degree-zero form 1
  std::vector<std::pair<ProjPoint, int>> factors;

  static FactoredBinaryForm of(std::vector<std::pair<ProjPoint, int>> factors);
  int degree() const;
  int order_at(const ProjPoint& p) const;
  std::vector<ProjPoint> roots() const;
};

// Product of the linear factors (b*x - a*y)^m, exact coefficients.
SparseForm expand(const FactoredBinaryForm& f);

// e <= d and ord_p(g) - ord_p(f) <= (d-e)/2 at every point (half-integers
// compared exactly).
bool closed_form_check(const FactoredBinaryForm& f, const FactoredBinaryForm& g);

// The point family behind the frames: the distinct roots plus one generic
// auxiliary point, padded so at least two points exist.
std::vector<ProjPoint> adapted_points(const FactoredBinaryForm& f, const FactoredBinaryForm& g);

// The conjugator sending p to [0:1] and q to [1:0].
TorusFrame frame_sending(const ProjPoint& p, const ProjPoint& q);

// Frames adapted to ordered pairs of distinct points from adapted_points.
std::vector<TorusFrame> root_adapted_frames(const FactoredBinaryForm& f,
                                            const FactoredBinaryForm& g);

struct OracleReport {
  bool closed_form = false;
  PairVerdict polytope;
  bool agree = false;
};

OracleReport oracle_equivalence(const FactoredBinaryForm& f, const FactoredBinaryForm& g);

// "[a:b]^m * [c:d] * ..."; "1" denotes the empty product.
FactoredBinaryForm parse_factored(std::string_view text);
std::string factored_to_string(const FactoredBinaryForm& f);

// All multiplicity patterns of the given total degree over a fixed root set.
std::vector<FactoredBinaryForm> enumerate_factored_forms(const std::vector<ProjPoint>& roots,
                                                         int degree);

// The standard desk-scale root set {[0:1],[1:0],[1:1],[1:-1],[2:1]}.
std::vector<ProjPoint> standard_root_set();

}  // namespace polystab
