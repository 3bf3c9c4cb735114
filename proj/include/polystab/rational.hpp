#pragma once

// Exact scalar arithmetic: rationals via GMP and Gaussian rationals on top.
// Every verdict-relevant computation in this library runs on these types;
// doubles appear only in reports.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polystab {

// Thrown when a mathematical precondition is violated (maps to CLI exit 3).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown on malformed input: JSON, schemas, literals (maps to CLI exit 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

Rat rat_from_string(std::string_view s);
std::string rat_to_string(const Rat& q);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

// mpq_class(n, d) does not reduce; every fraction built from free-form
// numerator/denominator pairs must pass through here.
inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// log(q) for q > 0, safe for magnitudes far outside double range.
double log_rat(const Rat& q);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

long long rat_to_ll(const Rat& q);

// q^e with integer e (negative allowed for nonzero q).
Rat rat_pow(const Rat& q, long e);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Gaussian rational a + b*i.
struct GQ {
  Rat re, im;

  GQ() : re(0), im(0) {}
  GQ(int v) : re(v), im(0) {}
  GQ(long v) : re(v), im(0) {}
  GQ(const Rat& r) : re(r), im(0) {}
  GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GQ conj() const { return {re, Rat(-im)}; }

  // |z|^2, always a rational.
  Rat norm2() const { return re * re + im * im; }
};

inline GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
inline GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
inline GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
inline GQ operator*(const GQ& a, const GQ& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GQ& operator+=(GQ& a, const GQ& b) { a.re += b.re; a.im += b.im; return a; }
inline GQ& operator-=(GQ& a, const GQ& b) { a.re -= b.re; a.im -= b.im; return a; }
inline GQ& operator*=(GQ& a, const GQ& b) { a = a * b; return a; }

GQ gq_inverse(const GQ& a);
inline GQ operator/(const GQ& a, const GQ& b) { return a * gq_inverse(b); }

inline bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }
// Lexicographic order; used only for canonical/deterministic containers.
inline bool operator<(const GQ& a, const GQ& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

std::string gq_to_string(const GQ& z);
GQ gq_from_string(std::string_view s);

}  // namespace polystab
