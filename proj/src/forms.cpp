#include "polystab/forms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polystab {

SparseForm SparseForm::zero(int vars, Variance v, std::vector<int> blks) {
  SparseForm f;
  f.num_vars = vars;
  f.variance = v;
  f.blocks = blks.empty() ? std::vector<int>{vars} : std::move(blks);
  int total = std::accumulate(f.blocks.begin(), f.blocks.end(), 0);
  if (vars <= 0 || total != vars) throw DomainError("form: bad block layout");
  for (int b : f.blocks)
    if (b != f.blocks[0]) throw DomainError("form: blocks must have equal size");
  return f;
}

SparseForm SparseForm::zero_like(const SparseForm& f) { return zero(f.num_vars, f.variance, f.blocks); }

SparseForm SparseForm::constant_one(int acting_dim) {
  SparseForm f = zero(acting_dim);
  f.terms.emplace(Exps(static_cast<size_t>(acting_dim), 0), GQ(1));
  return f;
}

SparseForm SparseForm::monomial(int vars, const Exps& e, const GQ& c, Variance v,
                                std::vector<int> blks) {
  SparseForm f = zero(vars, v, std::move(blks));
  f.add_term(e, c);
  return f;
}

void SparseForm::add_term(const Exps& e, const GQ& c) {
  if (static_cast<int>(e.size()) != num_vars) throw DomainError("term: exponent size mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::vector<int> SparseForm::block_degrees() const {
  std::vector<int> degs(blocks.size(), 0);
  if (terms.empty()) return degs;
  const Exps& e = terms.begin()->first;
  size_t off = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int j = 0; j < blocks[b]; ++j) degs[b] += e[off + static_cast<size_t>(j)];
    off += static_cast<size_t>(blocks[b]);
  }
  return degs;
}

void SparseForm::validate() const {
  int total = std::accumulate(blocks.begin(), blocks.end(), 0);
  if (num_vars <= 0 || total != num_vars) throw DomainError("form: bad block layout");
  for (int b : blocks)
    if (b != blocks[0]) throw DomainError("form: blocks must have equal size");
  std::vector<int> degs = block_degrees();
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) throw DomainError("form: stored zero coefficient");
    size_t off = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      int d = 0;
      for (int j = 0; j < blocks[b]; ++j) {
        int x = e[off + static_cast<size_t>(j)];
        if (x < 0) throw DomainError("form: negative exponent");
        d += x;
      }
      if (d != degs[b]) throw DomainError("form: not homogeneous within a block");
      off += static_cast<size_t>(blocks[b]);
    }
  }
}

bool operator==(const SparseForm& a, const SparseForm& b) {
  return a.num_vars == b.num_vars && a.variance == b.variance && a.blocks == b.blocks &&
         a.terms == b.terms;
}

static void check_same_shape(const SparseForm& a, const SparseForm& b) {
  if (a.num_vars != b.num_vars || a.variance != b.variance || a.blocks != b.blocks)
    throw DomainError("form arithmetic: shape mismatch");
}

SparseForm operator+(const SparseForm& a, const SparseForm& b) {
  check_same_shape(a, b);
  SparseForm r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

SparseForm operator-(const SparseForm& a, const SparseForm& b) {
  check_same_shape(a, b);
  SparseForm r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, -c);
  return r;
}

SparseForm operator*(const SparseForm& a, const SparseForm& b) {
  check_same_shape(a, b);
  SparseForm r = SparseForm::zero_like(a);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      Exps e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SparseForm operator*(const GQ& c, const SparseForm& f) {
  SparseForm r = SparseForm::zero_like(f);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : f.terms) r.terms.emplace(e, c * k);
  return r;
}

SparseForm pow_form(const SparseForm& f, int k) {
  if (k < 0) throw DomainError("form power: negative exponent");
  SparseForm r = SparseForm::zero_like(f);
  r.terms.emplace(Exps(static_cast<size_t>(f.num_vars), 0), GQ(1));
  SparseForm base = f;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

SparseForm derivative(const SparseForm& f, int var) {
  if (var < 0 || var >= f.num_vars) throw DomainError("derivative: variable out of range");
  SparseForm r = SparseForm::zero_like(f);
  for (const auto& [e, c] : f.terms) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Exps d = e;
    --d[static_cast<size_t>(var)];
    r.add_term(d, GQ(Rat(k)) * c);
  }
  return r;
}

GQ evaluate(const SparseForm& f, const std::vector<GQ>& point) {
  if (static_cast<int>(point.size()) != f.num_vars) throw DomainError("evaluate: size mismatch");
  GQ s(0);
  for (const auto& [e, c] : f.terms) {
    GQ t = c;
    for (size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::string form_to_string(const SparseForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << gq_to_string(c) << ")";
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        os << "*x" << i;
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  return os.str();
}

SparseForm apply_group_element(const GMat& sigma, const SparseForm& v) {
  int k = v.acting_dim();
  if (sigma.n != k) throw DomainError("group element size does not match the acted block");
  GMat m = v.variance == Variance::Covariant ? sigma : sigma.inverse_transpose();
  if (v.variance == Variance::Covariant && m.det().is_zero())
    throw DomainError("singular group element");

  // substitution x_i -> sum_j m[i][j] x_j within each block
  using TermMap = std::map<Exps, GQ>;
  size_t nv = static_cast<size_t>(v.num_vars);
  // memoized powers of the substituted linear forms, per global variable
  std::vector<std::vector<TermMap>> powers(nv);
  auto linear_for = [&](size_t g) {
    size_t block = g / static_cast<size_t>(k);
    size_t local = g % static_cast<size_t>(k);
    TermMap lin;
    for (int j = 0; j < k; ++j) {
      const GQ& c = m.at(static_cast<int>(local), j);
      if (c.is_zero()) continue;
      Exps e(nv, 0);
      e[block * static_cast<size_t>(k) + static_cast<size_t>(j)] = 1;
      lin.emplace(std::move(e), c);
    }
    return lin;
  };
  auto power_of = [&](size_t g, int exp) -> const TermMap& {
    auto& tower = powers[g];
    if (tower.empty()) {
      tower.emplace_back();  // exponent 0 = 1
      tower.back().emplace(Exps(nv, 0), GQ(1));
      tower.push_back(linear_for(g));
    }
    while (static_cast<int>(tower.size()) <= exp) {
      const TermMap& prev = tower.back();
      const TermMap& lin = tower[1];
      TermMap next;
      for (const auto& [ea, ca] : prev)
        for (const auto& [eb, cb] : lin) {
          Exps e = ea;
          for (size_t i = 0; i < nv; ++i) e[i] += eb[i];
          GQ c = ca * cb;
          auto [it, fresh] = next.emplace(std::move(e), c);
          if (!fresh) it->second += c;
        }
      tower.push_back(std::move(next));
    }
    return tower[static_cast<size_t>(exp)];
  };

  SparseForm out = SparseForm::zero_like(v);
  for (const auto& [e, c] : v.terms) {
    TermMap acc;
    acc.emplace(Exps(nv, 0), c);
    for (size_t g = 0; g < nv; ++g) {
      if (e[g] == 0) continue;
      const TermMap& pw = power_of(g, e[g]);
      TermMap next;
      for (const auto& [ea, ca] : acc)
        for (const auto& [eb, cb] : pw) {
          Exps ee = ea;
          for (size_t i = 0; i < nv; ++i) ee[i] += eb[i];
          GQ cc = ca * cb;
          auto [it, fresh] = next.emplace(std::move(ee), cc);
          if (!fresh) it->second += cc;
        }
      acc = std::move(next);
    }
    for (const auto& [ee, cc] : acc) out.add_term(ee, cc);
  }
  return out;
}

TorusFrame::TorusFrame(GMat c, std::string desc)
    : conjugator(std::move(c)), conjugator_inverse(conjugator.inverse()), description(std::move(desc)) {}

TorusFrame TorusFrame::identity(int dim, std::string desc) {
  return TorusFrame(GMat::identity(dim), std::move(desc));
}

OnePSG OnePSG::from(const std::vector<long long>& raw) {
  if (raw.empty()) throw DomainError("one-parameter subgroup: empty vector");
  QVec projected = project_sum_zero(to_qvec(raw));
  std::vector<long long> u = primitive_integer(projected);
  bool zero = std::all_of(u.begin(), u.end(), [](long long x) { return x == 0; });
  if (zero) throw DomainError("one-parameter subgroup is trivial after projection");
  return OnePSG{std::move(u)};
}

QVec weight_of_exps(const Exps& e, const std::vector<int>& blocks, Variance var) {
  int k = blocks[0];
  QVec raw(static_cast<size_t>(k), Rat(0));
  size_t off = 0;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int j = 0; j < k; ++j) raw[static_cast<size_t>(j)] += e[off + static_cast<size_t>(j)];
    off += static_cast<size_t>(k);
  }
  if (var == Variance::Contravariant)
    for (Rat& x : raw) x = -x;
  return project_sum_zero(raw);
}

std::vector<QVec> WeightSupport::weights() const {
  std::vector<QVec> w;
  w.reserve(components.size());
  for (const auto& [wt, comp] : components) w.push_back(wt);
  return w;
}

SparseForm WeightSupport::pulled_back_sum() const {
  SparseForm sum = SparseForm::zero_like(components.begin()->second);
  for (const auto& [wt, comp] : components) sum = sum + apply_group_element(frame.conjugator, comp);
  return sum;
}

WeightSupport weight_decompose(const SparseForm& v, const TorusFrame& frame) {
  if (v.is_zero()) throw DomainError("weight decomposition of the zero form");
  if (frame.conjugator.n != v.acting_dim())
    throw DomainError("torus frame size does not match the acted block");
  SparseForm moved = apply_group_element(frame.conjugator_inverse, v);
  WeightSupport ws{frame, {}};
  for (const auto& [e, c] : moved.terms) {
    QVec wt = weight_of_exps(e, moved.blocks, moved.variance);
    auto it = ws.components.find(wt);
    if (it == ws.components.end()) it = ws.components.emplace(wt, SparseForm::zero_like(moved)).first;
    it->second.add_term(e, c);
  }
  return ws;
}

LatticePolytope weight_polytope(const SparseForm& v, const TorusFrame& frame) {
  return convex_hull(weight_decompose(v, frame).weights());
}

Rat one_psg_weight(const SparseForm& v, const TorusFrame& frame, const OnePSG& u) {
  if (u.dim() != v.acting_dim()) throw DomainError("one_psg_weight: dimension mismatch");
  WeightSupport ws = weight_decompose(v, frame);
  Rat best;
  bool first = true;
  for (const auto& [wt, comp] : ws.components) {
    Rat s = 0;
    for (size_t i = 0; i < wt.size(); ++i) s += Rat(static_cast<long>(u.u[i])) * wt[i];
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return best;
}

}  // namespace polystab
