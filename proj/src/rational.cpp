#include "polystab/rational.hpp"

#include <cctype>

namespace polystab {

Rat rat_from_string(std::string_view s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string t(s);
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw ParseError("bad rational literal: " + t);
  }
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational literal: " + t);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + t);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

double log_rat(const Rat& q) {
  if (q <= 0) throw DomainError("log of non-positive rational");
  // mantissa*2^exp decomposition keeps this finite for any magnitude
  signed long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, q.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, q.get_den().get_mpz_t());
  return std::log(dn) - std::log(dd) + (static_cast<double>(en) - ed) * std::log(2.0);
}

long long rat_to_ll(const Rat& q) {
  if (!is_integer(q)) throw DomainError("expected integer, got " + rat_to_string(q));
  if (!q.get_num().fits_slong_p()) throw DomainError("integer out of range: " + rat_to_string(q));
  return q.get_num().get_si();
}

Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (q == 0) {
    if (e < 0) throw DomainError("zero to a negative power");
    return Rat(0);
  }
  mpz_class n = q.get_num(), d = q.get_den();
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class np, dp;
  mpz_pow_ui(np.get_mpz_t(), n.get_mpz_t(), a);
  mpz_pow_ui(dp.get_mpz_t(), d.get_mpz_t(), a);
  Rat r = e > 0 ? Rat(np, dp) : Rat(dp, np);
  r.canonicalize();
  return r;
}

GQ gq_inverse(const GQ& a) {
  Rat n = a.norm2();
  if (n == 0) throw DomainError("division by zero Gaussian rational");
  return {a.re / n, -a.im / n};
}

std::string gq_to_string(const GQ& z) {
  if (z.im == 0) return rat_to_string(z.re);
  std::string s = rat_to_string(z.re);
  s += (z.im < 0 ? "-" : "+");
  Rat ia = rat_abs(z.im);
  if (ia != 1) s += rat_to_string(ia);
  s += "i";
  return s;
}

// Accepts "p/q", "p/q+r/si", "-i", "3-2i", etc.
GQ gq_from_string(std::string_view sv) {
  std::string s;
  for (char c : sv)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty Gaussian rational literal");

  auto parse_part = [](std::string_view p, bool imaginary) -> Rat {
    if (imaginary) {
      if (p.empty() || p.back() != 'i') throw ParseError("bad imaginary part");
      p.remove_suffix(1);
      if (p.empty() || p == "+") return Rat(1);
      if (p == "-") return Rat(-1);
    }
    return rat_from_string(p);
  };

  // split at the last top-level +/- that is not a leading sign
  size_t split = std::string::npos;
  for (size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-')
      split = i;
  }
  bool has_i = s.back() == 'i';
  if (split == std::string::npos) {
    if (has_i) return {Rat(0), parse_part(s, true)};
    return {parse_part(s, false), Rat(0)};
  }
  if (!has_i) throw ParseError("bad Gaussian rational literal: " + s);
  return {parse_part(s.substr(0, split), false), parse_part(s.substr(split), true)};
}

}  // namespace polystab
