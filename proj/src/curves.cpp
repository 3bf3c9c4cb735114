#include "polystab/curves.hpp"

#include <algorithm>

namespace polystab {
namespace {

void require_plane_form(const SparseForm& f) {
  f.validate();
  if (f.num_vars != 3 || f.num_blocks() != 1)
    throw DomainError("plane curve: expected a form in one block of 3 variables");
  if (f.is_zero()) throw DomainError("plane curve: zero form");
}

// Exact rank of a Gaussian-rational matrix given as rows.
int gq_rank(std::vector<std::vector<GQ>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t piv = static_cast<size_t>(rank);
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
    GQ inv = gq_inverse(rows[static_cast<size_t>(rank)][c]);
    for (size_t j = c; j < cols; ++j) rows[static_cast<size_t>(rank)][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][c].is_zero()) continue;
      GQ f = rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[static_cast<size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Exps> monomials_of_degree(int nvars, int deg) {
  std::vector<Exps> out;
  Exps cur(static_cast<size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur[static_cast<size_t>(var)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
  };
  rec(rec, 0, deg);
  return out;
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Determinant of a small matrix of forms, by subset dynamic programming.
SparseForm poly_det(const std::vector<std::vector<SparseForm>>& m, const SparseForm& zero) {
  size_t n = m.size();
  std::vector<SparseForm> dp(static_cast<size_t>(1) << n, zero);
  dp[0].add_term(Exps(static_cast<size_t>(zero.num_vars), 0), GQ(1));
  for (size_t mask = 1; mask < dp.size(); ++mask) {
    size_t row = static_cast<size_t>(__builtin_popcountll(mask)) - 1;
    SparseForm acc = zero;
    int sign = (row % 2 == 0) ? 1 : -1;  // Laplace along the last row
    for (size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1)) continue;
      if (!m[row][j].is_zero() && !dp[mask ^ (static_cast<size_t>(1) << j)].is_zero()) {
        SparseForm term = m[row][j] * dp[mask ^ (static_cast<size_t>(1) << j)];
        if (sign < 0) term = GQ(Rat(-1)) * term;
        acc = acc + term;
      }
      sign = -sign;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

// strip monomial content and scale the lex-greatest coefficient to one
SparseForm canonicalize_content(const SparseForm& f) {
  if (f.is_zero()) return f;
  Exps mins = f.terms.begin()->first;
  for (const auto& [e, c] : f.terms)
    for (size_t i = 0; i < mins.size(); ++i) mins[i] = std::min(mins[i], e[i]);
  SparseForm out = SparseForm::zero_like(f);
  GQ lead = f.terms.rbegin()->second;
  for (const auto& [e, c] : f.terms) {
    Exps shifted = e;
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] -= mins[i];
    out.terms.emplace(shifted, c / lead);
  }
  return out;
}

}  // namespace

bool is_smooth_plane_curve(const SparseForm& f) {
  require_plane_form(f);
  int d = f.block_degrees()[0];
  if (d < 1) return false;
  if (d == 1) return true;
  std::vector<SparseForm> partials = {derivative(f, 0), derivative(f, 1), derivative(f, 2)};
  // the partials have no common projective zero iff the ideal they generate
  // contains every monomial of degree 3(d-1)-2 (regular sequence regularity)
  int target = 3 * (d - 1) - 2;
  std::vector<Exps> cols = monomials_of_degree(3, target);
  std::map<Exps, size_t> col_index;
  for (size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
  std::vector<std::vector<GQ>> rows;
  for (const auto& mono : monomials_of_degree(3, target - (d - 1)))
    for (const auto& p : partials) {
      std::vector<GQ> row(cols.size(), GQ(0));
      for (const auto& [e, c] : p.terms) {
        Exps prod = e;
        for (size_t i = 0; i < prod.size(); ++i) prod[i] += mono[i];
        row[col_index.at(prod)] += c;
      }
      rows.push_back(std::move(row));
    }
  return gq_rank(std::move(rows)) == static_cast<int>(cols.size());
}

PlaneCurve PlaneCurve::of(SparseForm f) {
  require_plane_form(f);
  if (f.variance != Variance::Covariant)
    throw DomainError("plane curve: the defining form is covariant");
  int d = f.block_degrees()[0];
  if (d < 2) throw DomainError("plane curve: degree must be >= 2");
  PlaneCurve c;
  c.degree = d;
  c.smooth = is_smooth_plane_curve(f);
  c.form = std::move(f);
  return c;
}

CurveStabilityData degrees_and_mu(int d) {
  if (d < 2) throw DomainError("degrees_and_mu: degree must be >= 2");
  CurveStabilityData data;
  data.d = d;
  data.deg_resultant = 2 * d;
  data.deg_hyperdiscriminant = d * (d - 1);
  data.mu = 3 - d;
  data.normalized_degree =
      static_cast<long long>(data.deg_resultant) * data.deg_hyperdiscriminant;
  // the same number through the general degree identity at n = 1
  long long via_identity = static_cast<long long>(d) * 2 * (2 * d - d * data.mu);
  if (via_identity != data.normalized_degree)
    throw std::logic_error("degree bookkeeping identity failed");
  return data;
}

SparseForm x_resultant(const PlaneCurve& c) {
  // cross product of the two line blocks U = (0,1,2), V = (3,4,5)
  auto cross_component = [](int i, int j, int k, int l) {
    SparseForm m = SparseForm::zero(6, Variance::Contravariant, {3, 3});
    Exps a(6, 0), b(6, 0);
    a[static_cast<size_t>(i)] = 1;
    a[static_cast<size_t>(j)] = 1;
    b[static_cast<size_t>(k)] = 1;
    b[static_cast<size_t>(l)] = 1;
    m.add_term(a, GQ(1));
    m.add_term(b, GQ(Rat(-1)));
    return m;
  };
  std::vector<SparseForm> cross = {
      cross_component(1, 5, 2, 4),  // u1 v2 - u2 v1
      cross_component(2, 3, 0, 5),  // u2 v0 - u0 v2
      cross_component(0, 4, 1, 3),  // u0 v1 - u1 v0
  };
  SparseForm r = SparseForm::zero(6, Variance::Contravariant, {3, 3});
  for (const auto& [e, coef] : c.form.terms) {
    SparseForm term = pow_form(cross[0], e[0]) * pow_form(cross[1], e[1]) * pow_form(cross[2], e[2]);
    r = r + coef * term;
  }
  if (r.is_zero()) throw std::logic_error("x_resultant vanished");
  r.validate();
  std::vector<int> degs = r.block_degrees();
  if (degs[0] != c.degree || degs[1] != c.degree)
    throw std::logic_error("x_resultant bidegree mismatch");
  return r;
}

SparseForm dual_curve(const SparseForm& f) {
  require_plane_form(f);
  int d = f.block_degrees()[0];
  if (d < 2) throw DomainError("dual curve: degree must be >= 2");

  // restrict to the pencil-parametrized line {ux+vy+wz=0}:
  //   g(s,t) = F(w*s, w*t, -(u*s+v*t)),
  // a binary form in (s,t) whose coefficients live in Q(i)[u,v,w]
  SparseForm zero3 = SparseForm::zero(3);
  std::vector<SparseForm> g(static_cast<size_t>(d) + 1, zero3);  // g[i] multiplies s^i t^(d-i)
  for (const auto& [e, c] : f.terms) {
    int a = e[0], b = e[1], cc = e[2];
    for (int k = 0; k <= cc; ++k) {
      long bin = static_cast<long>((cc % 2 == 0) ? binom(cc, k) : -binom(cc, k));
      GQ coef = c * GQ(Rat(bin));
      Exps mono = {k, cc - k, a + b};  // u^k v^(cc-k) w^(a+b)
      SparseForm add = SparseForm::monomial(3, mono, coef);
      g[static_cast<size_t>(a + k)] = g[static_cast<size_t>(a + k)] + add;
    }
  }

  // partial derivatives as binary forms of degree d-1
  std::vector<SparseForm> gs(static_cast<size_t>(d), zero3), gt(static_cast<size_t>(d), zero3);
  for (int j = 0; j < d; ++j) {
    gs[static_cast<size_t>(j)] = GQ(Rat(j + 1)) * g[static_cast<size_t>(j) + 1];
    gt[static_cast<size_t>(j)] = GQ(Rat(d - j)) * g[static_cast<size_t>(j)];
  }

  // Sylvester resultant of gs and gt with respect to (s,t)
  int m = d - 1, size = 2 * m;
  std::vector<std::vector<SparseForm>> syl(static_cast<size_t>(size),
                                           std::vector<SparseForm>(static_cast<size_t>(size), zero3));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= m; ++k) {
      syl[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = gs[static_cast<size_t>(m - k)];
      syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + k)] = gt[static_cast<size_t>(m - k)];
    }
  SparseForm res = poly_det(syl, zero3);
  if (res.is_zero())
    throw DomainError("dual curve elimination degenerated (the curve is singular)");

  SparseForm delta = canonicalize_content(res);
  delta.variance = f.variance == Variance::Covariant ? Variance::Contravariant : Variance::Covariant;
  delta.validate();
  int got = delta.block_degrees()[0];
  if (got != d * (d - 1))
    throw DomainError("dual curve degree check failed: expected " + std::to_string(d * (d - 1)) +
                      ", got " + std::to_string(got) + " after content removal");
  return delta;
}

SparseForm hyperdiscriminant(const PlaneCurve& c) {
  if (!c.smooth) throw DomainError("hyperdiscriminant requires a smooth curve");
  return dual_curve(c.form);
}

CurveCheckReport mabuchi_bound_report(const PlaneCurve& c, const std::vector<TorusFrame>& frames) {
  if (frames.empty()) throw DomainError("mabuchi_bound_check: no torus frames supplied");
  CurveCheckReport rep;
  rep.data = degrees_and_mu(c.degree);
  SparseForm r = x_resultant(c);
  SparseForm delta = hyperdiscriminant(c);
  for (const auto& frame : frames) {
    LatticePolytope nr =
        scale_polytope(weight_polytope(r, frame), Rat(rep.data.deg_hyperdiscriminant));
    LatticePolytope nd = scale_polytope(weight_polytope(delta, frame), Rat(rep.data.deg_resultant));
    CurveFrameReport fr{frame, true, std::nullopt};
    if (auto dst = destabilizer_from_polytopes(nr, nd, frame)) {
      fr.contained = false;
      fr.certificate = std::move(dst);
    }
    rep.frames.push_back(std::move(fr));
  }
  rep.verdict.status = PairStatus::SemistableForTestedTori;
  for (size_t i = 0; i < rep.frames.size(); ++i) {
    rep.verdict.tested_frames = static_cast<int>(i) + 1;
    if (!rep.frames[i].contained) {
      rep.verdict.status = PairStatus::Destabilized;
      rep.verdict.certificate = rep.frames[i].certificate;
      break;
    }
  }
  if (rep.verdict.status == PairStatus::SemistableForTestedTori)
    rep.verdict.tested_frames = static_cast<int>(rep.frames.size());
  return rep;
}

PairVerdict mabuchi_bound_check(const PlaneCurve& c, const std::vector<TorusFrame>& frames) {
  return mabuchi_bound_report(c, frames).verdict;
}

EquivarianceReport equivariance_check(const PlaneCurve& c, const GMat& sigma) {
  if (sigma.n != 3) throw DomainError("equivariance_check: sigma must be 3x3");
  PlaneCurve moved = PlaneCurve::of(apply_group_element(sigma, c.form));

  EquivarianceReport rep;
  SparseForm r_moved = x_resultant(moved);
  SparseForm r_acted = apply_group_element(sigma, x_resultant(c));
  rep.resultant_equal = r_moved == r_acted;

  SparseForm d_moved = hyperdiscriminant(moved);
  SparseForm d_acted = apply_group_element(sigma, hyperdiscriminant(c));
  const auto& [lead_e, lead_c] = *d_moved.terms.rbegin();
  auto it = d_acted.terms.find(lead_e);
  if (it == d_acted.terms.end()) {
    rep.hyperdiscriminant_proportional = false;
    return rep;
  }
  rep.hyperdiscriminant_scalar = lead_c / it->second;
  rep.hyperdiscriminant_proportional = d_moved == rep.hyperdiscriminant_scalar * d_acted;
  return rep;
}

}  // namespace polystab
