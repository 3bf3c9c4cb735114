#include "polystab/linalg.hpp"

namespace polystab {

Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<long long> primitive_integer(const QVec& v) {
  mpz_class l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const Rat& x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  if (g == 0) g = 1;
  std::vector<long long> out;
  out.reserve(v.size());
  for (auto& n : ints) {
    mpz_class r = n / g;
    if (!r.fits_slong_p()) throw DomainError("primitive integer vector entry out of range");
    out.push_back(r.get_si());
  }
  return out;
}

QVec to_qvec(const std::vector<long long>& v) {
  QVec q;
  q.reserve(v.size());
  for (long long x : v) q.emplace_back(static_cast<long>(x));
  return q;
}

QVec project_sum_zero(const QVec& x) {
  if (x.empty()) throw DomainError("projection of empty vector");
  Rat mean = 0;
  for (const Rat& c : x) mean += c;
  mean /= static_cast<long>(x.size());
  QVec out = x;
  for (Rat& c : out) c -= mean;
  return out;
}

GMat GMat::identity(int size) {
  GMat m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = GQ(1);
  return m;
}

GMat GMat::diagonal(const std::vector<GQ>& d) {
  GMat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n; ++i) m.at(i, i) = d[static_cast<size_t>(i)];
  return m;
}

bool GMat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? GQ(1) : GQ(0))) return false;
  return true;
}

GMat GMat::transpose() const {
  GMat t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
  return t;
}

GMat operator*(const GMat& a, const GMat& b) {
  if (a.n != b.n) throw DomainError("matrix product: size mismatch");
  GMat c(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const GQ& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

bool operator==(const GMat& a, const GMat& b) { return a.n == b.n && a.e == b.e; }

std::vector<GQ> GMat::apply(const std::vector<GQ>& x) const {
  if (static_cast<int>(x.size()) != n) throw DomainError("matrix apply: size mismatch");
  std::vector<GQ> y(x.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
  return y;
}

GQ GMat::det() const {
  // Gaussian elimination over the field Q(i)
  GMat m = *this;
  GQ d(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return GQ(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    GQ inv = gq_inverse(m.at(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      GQ f = m.at(r, c) * inv;
      for (int j = c; j < n; ++j) m.at(r, j) -= f * m.at(c, j);
    }
  }
  return d;
}

GMat GMat::inverse() const {
  GMat m = *this;
  GMat inv = GMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!m.at(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DomainError("singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m.at(piv, j), m.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    GQ f = gq_inverse(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m.at(r, c).is_zero()) continue;
      GQ g = m.at(r, c);
      for (int j = 0; j < n; ++j) {
        m.at(r, j) -= g * m.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

GMat GMat::inverse_transpose() const { return inverse().transpose(); }

}  // namespace polystab
