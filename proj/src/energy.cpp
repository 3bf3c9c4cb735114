#include "polystab/energy.hpp"

#include <cmath>
#include <random>

namespace polystab {

Rat HermitianFrame::weight(const Exps& e) const {
  auto it = weights.find(e);
  return it == weights.end() ? Rat(1) : it->second;
}

Rat norm_sq(const SparseForm& f, const HermitianFrame& frame) {
  Rat s = 0;
  for (const auto& [e, c] : f.terms) {
    Rat w = frame.weight(e);
    if (w <= 0) throw DomainError("Hermitian frame weights must be positive");
    s += w * c.norm2();
  }
  return s;
}

GQ hermitian_inner(const SparseForm& a, const SparseForm& b, const HermitianFrame& frame) {
  if (a.num_vars != b.num_vars || a.variance != b.variance || a.blocks != b.blocks)
    throw DomainError("hermitian_inner: shape mismatch");
  GQ s(0);
  for (const auto& [e, c] : a.terms) {
    auto it = b.terms.find(e);
    if (it == b.terms.end()) continue;
    s += GQ(frame.weight(e)) * c * it->second.conj();
  }
  return s;
}

EnergySample energy(const SparseForm& v, const SparseForm& w, const GMat& sigma,
                    const HermitianFrame& frame) {
  if (v.is_zero() || w.is_zero()) throw DomainError("energy: forms must be nonzero");
  EnergySample s;
  s.sigma = sigma;
  s.norm_v_sq = norm_sq(apply_group_element(sigma, v), frame);
  s.norm_w_sq = norm_sq(apply_group_element(sigma, w), frame);
  s.p = log_rat(s.norm_w_sq) - log_rat(s.norm_v_sq);
  return s;
}

namespace {

Rat sum_norm_sq(const DirectSumVector& x, const HermitianFrame& frame) {
  Rat s = 0;
  if (!x.first.is_zero()) s += norm_sq(x.first, frame);
  if (!x.second.is_zero()) s += norm_sq(x.second, frame);
  return s;
}

// cos^2 and sin^2 of the Fubini-Study angle, exact through the Hermitian
// pairing; every float downstream derives from this pair
std::pair<Rat, Rat> fs_cos2_sin2(const DirectSumVector& x, const DirectSumVector& y,
                                 const HermitianFrame& frame) {
  Rat nx = sum_norm_sq(x, frame);
  Rat ny = sum_norm_sq(y, frame);
  if (nx == 0 || ny == 0) throw DomainError("fs_distance: zero vector");
  GQ inner = hermitian_inner(x.first, y.first, frame) + hermitian_inner(x.second, y.second, frame);
  Rat c2 = inner.norm2() / (nx * ny);
  Rat s2 = 1 - c2;
  if (s2 < 0) throw std::logic_error("fs_distance: Cauchy-Schwarz violated");
  return {c2, s2};
}

}  // namespace

double fs_distance(const DirectSumVector& x, const DirectSumVector& y, const HermitianFrame& frame) {
  auto [c2, s2] = fs_cos2_sin2(x, y, frame);
  return std::atan2(std::sqrt(rat_to_double(s2)), std::sqrt(rat_to_double(c2)));
}

double distance_identity_residual(const SparseForm& v, const SparseForm& w, const GMat& sigma,
                                  const HermitianFrame& frame) {
  EnergySample s = energy(v, w, sigma, frame);
  SparseForm sv = apply_group_element(sigma, v);
  SparseForm sw = apply_group_element(sigma, w);
  DirectSumVector xvw{sv, sw};
  DirectSumVector xv0{sv, SparseForm::zero_like(w)};
  // tan^2 of the distance evaluated from the same exact split that defines
  // the angle; tan(atan2(...)) would lose digits exactly where the distance
  // approaches the endpoints
  auto [c2, s2] = fs_cos2_sin2(xvw, xv0, frame);
  if (s2 == 0 || c2 == 0) throw DomainError("distance identity: degenerate angle");
  double rhs = log_rat(s2) - log_rat(c2);
  return std::fabs(s.p - rhs);
}

std::vector<Rat> default_alpha_grid() {
  std::vector<Rat> g;
  long long q = 10;
  for (int k = 1; k <= 6; ++k) {
    g.emplace_back(make_rat(1, static_cast<long>(q)));
    q *= 10;
  }
  return g;
}

SlopeReport energy_along_psg(const SparseForm& v, const SparseForm& w, const OnePSG& u,
                             const HermitianFrame& frame, const std::vector<Rat>& alphas) {
  if (v.is_zero() || w.is_zero()) throw DomainError("energy_along_psg: forms must be nonzero");
  if (u.dim() != v.acting_dim() || u.dim() != w.acting_dim())
    throw DomainError("energy_along_psg: 1-PSG dimension mismatch");
  if (alphas.size() < 2) throw DomainError("energy_along_psg: need at least two grid points");

  SlopeReport rep;
  std::vector<double> xs, ps;
  for (const Rat& a : alphas) {
    if (a <= 0) throw DomainError("energy_along_psg: alpha must be positive");
    std::vector<GQ> diag;
    diag.reserve(static_cast<size_t>(u.dim()));
    for (long long e : u.u) diag.emplace_back(rat_pow(a, static_cast<long>(e)));
    GMat lambda = GMat::diagonal(diag);
    SlopeRow row;
    row.alpha = a;
    row.norm_v_sq = norm_sq(apply_group_element(lambda, v), frame);
    row.norm_w_sq = norm_sq(apply_group_element(lambda, w), frame);
    row.p = log_rat(row.norm_w_sq) - log_rat(row.norm_v_sq);
    xs.push_back(2.0 * log_rat(a));
    ps.push_back(row.p);
    rep.rows.push_back(std::move(row));
  }

  size_t n = xs.size();
  double mx = 0, mp = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    mp += ps[i];
  }
  mx /= static_cast<double>(n);
  mp /= static_cast<double>(n);
  double num = 0, den = 0;
  for (size_t i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ps[i] - mp);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  rep.slope_lsq = den == 0 ? 0.0 : num / den;

  // sort finest-last view: grids are expected decreasing, but do not rely on it
  size_t fin = 0, sec = 1;
  for (size_t i = 1; i < n; ++i)
    if (rep.rows[i].alpha < rep.rows[fin].alpha) fin = i;
  sec = fin == 0 ? 1 : 0;
  for (size_t i = 0; i < n; ++i)
    if (i != fin && rep.rows[i].alpha < rep.rows[sec].alpha) sec = i;
  double dx = xs[fin] - xs[sec];
  rep.slope_finest = dx == 0 ? 0.0 : (ps[fin] - ps[sec]) / dx;
  rep.slope_rounded = std::llround(rep.slope_finest);

  double c0 = ps[fin] - static_cast<double>(rep.slope_rounded) * xs[fin];
  rep.drift_bound = 0;
  for (size_t i = 0; i < n; ++i)
    rep.drift_bound =
        std::max(rep.drift_bound, std::fabs(ps[i] - static_cast<double>(rep.slope_rounded) * xs[i] - c0));
  return rep;
}

namespace {

// Rational rotation from a Pythagorean parametrization of the circle.
void rotate_rows(GMat& m, int i, int j, const Rat& t) {
  Rat den = 1 + t * t;
  GQ c(Rat(1 - t * t) / den), s(Rat(2 * t) / den);
  for (int col = 0; col < m.n; ++col) {
    GQ a = m.at(i, col), b = m.at(j, col);
    m.at(i, col) = c * a - s * b;
    m.at(j, col) = s * a + c * b;
  }
}

}  // namespace

ScanReport energy_scan(const SparseForm& v, const SparseForm& w, const HermitianFrame& frame,
                       const ScanConfig& config) {
  if (v.is_zero() || w.is_zero()) throw DomainError("energy_scan: forms must be nonzero");
  int dim = v.acting_dim();
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  std::uniform_int_distribution<int> tnum(-3, 3);
  std::uniform_int_distribution<int> texp(-config.max_diag_exp, config.max_diag_exp);

  auto random_rotation = [&]() {
    GMat m = GMat::identity(dim);
    for (int f = 0; f < config.rotation_factors; ++f) {
      int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      rotate_rows(m, i, j, make_rat(tnum(rng), 7));
    }
    return m;
  };
  auto random_diag = [&]() {
    std::vector<long long> e(static_cast<size_t>(dim));
    long long sum = 0;
    for (int i = 0; i + 1 < dim; ++i) {
      e[static_cast<size_t>(i)] = texp(rng);
      sum += e[static_cast<size_t>(i)];
    }
    e[static_cast<size_t>(dim - 1)] = -sum;  // stay in the determinant-one torus
    std::vector<GQ> d;
    d.reserve(e.size());
    for (long long k : e) d.emplace_back(rat_pow(config.beta, static_cast<long>(k)));
    return GMat::diagonal(d);
  };

  ScanReport rep;
  rep.config = config;
  bool first = true;
  for (int s = 0; s < config.samples; ++s) {
    GMat sigma = random_rotation() * random_diag() * random_rotation();
    EnergySample sample = energy(v, w, sigma, frame);
    ++rep.evaluated;
    if (first || sample.p < rep.min_p) {
      first = false;
      rep.min_p = sample.p;
      rep.argmin = sample.sigma;
      rep.argmin_norm_v_sq = sample.norm_v_sq;
      rep.argmin_norm_w_sq = sample.norm_w_sq;
    }
  }
  return rep;
}

}  // namespace polystab
