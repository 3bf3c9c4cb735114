#pragma once

// Small dense exact linear algebra: rational vectors and Gaussian-rational
// square matrices (group elements, torus conjugators).

#include <vector>

#include "polystab/rational.hpp"

namespace polystab {

using QVec = std::vector<Rat>;

Rat dot(const QVec& a, const QVec& b);

// Scale a rational vector by the unique positive factor making it a
// primitive integer vector (entries coprime). Zero vector stays zero.
std::vector<long long> primitive_integer(const QVec& v);

QVec to_qvec(const std::vector<long long>& v);

// Subtract the mean coordinate; the result pairs identically with any
// sum-zero functional and sums to zero itself.
QVec project_sum_zero(const QVec& x);

// Square matrix over the Gaussian rationals, row-major.
struct GMat {
  int n = 0;
  std::vector<GQ> e;

  GMat() = default;
  explicit GMat(int size) : n(size), e(static_cast<size_t>(size) * size) {}

  GQ& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const GQ& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }

  static GMat identity(int size);
  static GMat diagonal(const std::vector<GQ>& d);

  bool is_identity() const;
  GMat transpose() const;
  GQ det() const;
  GMat inverse() const;           // throws DomainError if singular
  GMat inverse_transpose() const;
  std::vector<GQ> apply(const std::vector<GQ>& x) const;
};

GMat operator*(const GMat& a, const GMat& b);
bool operator==(const GMat& a, const GMat& b);

}  // namespace polystab
