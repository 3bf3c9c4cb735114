#pragma once

// Sparse multivariate forms with Gaussian-rational coefficients, the group
// action by substitution, and weight-space decompositions under conjugated
// maximal tori.
//
// A form may live on several variable blocks of equal size (multihomogeneous
// case); one copy of the acting group transforms all blocks simultaneously.
// Covariant forms substitute sigma itself, contravariant (dual-coordinate)
// forms substitute the inverse transpose, and contravariant characters are
// negated. Characters are taken in the sum-zero quotient of the exponent
// lattice, making polytopes of different modules comparable.

#include <map>
#include <string>
#include <vector>

#include "polystab/geometry.hpp"
#include "polystab/linalg.hpp"
#include "polystab/rational.hpp"

namespace polystab {

enum class Variance { Covariant, Contravariant };

using Exps = std::vector<int>;

struct SparseForm {
  int num_vars = 0;
  Variance variance = Variance::Covariant;
  std::vector<int> blocks;  // sizes; all equal and summing to num_vars
  std::map<Exps, GQ> terms;

  static SparseForm zero(int vars, Variance v = Variance::Covariant, std::vector<int> blks = {});
  static SparseForm zero_like(const SparseForm& f);
  // The trivial module element "1": one constant term on a single block.
  static SparseForm constant_one(int acting_dim);
  static SparseForm monomial(int vars, const Exps& e, const GQ& c = GQ(1),
                             Variance v = Variance::Covariant, std::vector<int> blks = {});

  bool is_zero() const { return terms.empty(); }
  int acting_dim() const { return blocks.empty() ? 0 : blocks[0]; }
  int num_blocks() const { return static_cast<int>(blocks.size()); }
  // total degree per block of the first term (the form must be checked
  // multihomogeneous for this to be meaningful)
  std::vector<int> block_degrees() const;

  void add_term(const Exps& e, const GQ& c);
  // checks block shape, exponent signs and per-block homogeneity
  void validate() const;
};

bool operator==(const SparseForm& a, const SparseForm& b);

SparseForm operator+(const SparseForm& a, const SparseForm& b);
SparseForm operator-(const SparseForm& a, const SparseForm& b);
SparseForm operator*(const SparseForm& a, const SparseForm& b);
SparseForm operator*(const GQ& c, const SparseForm& f);
SparseForm pow_form(const SparseForm& f, int k);
SparseForm derivative(const SparseForm& f, int var);
GQ evaluate(const SparseForm& f, const std::vector<GQ>& point);
std::string form_to_string(const SparseForm& f);  // debugging aid

// Group action by linear substitution (per block; inverse transpose for
// contravariant forms). Throws on singular sigma or size mismatch.
SparseForm apply_group_element(const GMat& sigma, const SparseForm& v);

// A maximal torus presented as the diagonal torus conjugated into position.
struct TorusFrame {
  GMat conjugator;
  GMat conjugator_inverse;
  std::string description;

  explicit TorusFrame(GMat c, std::string desc = "");
  static TorusFrame identity(int dim, std::string desc = "identity");
};

// Integral one-parameter subgroup of the diagonal torus, stored as the
// primitive sum-zero integer representative of its ray.
struct OnePSG {
  std::vector<long long> u;

  static OnePSG from(const std::vector<long long>& raw);
  int dim() const { return static_cast<int>(u.size()); }
};

// The character of a single exponent vector in the sum-zero quotient.
QVec weight_of_exps(const Exps& e, const std::vector<int>& blocks, Variance var);

struct WeightSupport {
  TorusFrame frame;
  // weight (in the quotient lattice) -> component, in the frame's diagonal
  // coordinates
  std::map<QVec, SparseForm> components;

  std::vector<QVec> weights() const;
  // transporting the components back through the frame reassembles the input
  SparseForm pulled_back_sum() const;
};

WeightSupport weight_decompose(const SparseForm& v, const TorusFrame& frame);
LatticePolytope weight_polytope(const SparseForm& v, const TorusFrame& frame);
Rat one_psg_weight(const SparseForm& v, const TorusFrame& frame, const OnePSG& u);

}  // namespace polystab
