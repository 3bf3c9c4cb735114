#include "polystab/binary.hpp"

#include <algorithm>
#include <sstream>

namespace polystab {

ProjPoint ProjPoint::of(const GQ& a, const GQ& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("projective point needs a nonzero coordinate");
  if (b.is_zero()) return {GQ(1), GQ(0)};
  return {a / b, GQ(1)};
}

bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.a == q.a && p.b == q.b; }
bool operator!=(const ProjPoint& p, const ProjPoint& q) { return !(p == q); }
bool operator<(const ProjPoint& p, const ProjPoint& q) {
  if (p.is_infinity() != q.is_infinity()) return q.is_infinity();
  return p.a < q.a;
}

std::string point_to_string(const ProjPoint& p) {
  return "[" + gq_to_string(p.a) + ":" + gq_to_string(p.b) + "]";
}

FactoredBinaryForm FactoredBinaryForm::of(std::vector<std::pair<ProjPoint, int>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second < 1) throw DomainError("factor multiplicity must be >= 1");
    if (i > 0 && factors[i].first == factors[i - 1].first)
      throw DomainError("repeated point in factored form");
  }
  return FactoredBinaryForm{std::move(factors)};
}

int FactoredBinaryForm::degree() const {
  int d = 0;
  for (const auto& [p, m] : factors) d += m;
  return d;
}

int FactoredBinaryForm::order_at(const ProjPoint& p) const {
  for (const auto& [q, m] : factors)
    if (q == p) return m;
  return 0;
}

std::vector<ProjPoint> FactoredBinaryForm::roots() const {
  std::vector<ProjPoint> r;
  r.reserve(factors.size());
  for (const auto& [p, m] : factors) r.push_back(p);
  return r;
}

SparseForm expand(const FactoredBinaryForm& f) {
  SparseForm out = SparseForm::constant_one(2);
  for (const auto& [p, m] : f.factors) {
    SparseForm lin = SparseForm::zero(2);
    lin.add_term({1, 0}, p.b);
    lin.add_term({0, 1}, -p.a);
    out = out * pow_form(lin, m);
  }
  if (out.is_zero()) throw std::logic_error("expanded factored form vanished");
  return out;
}

bool closed_form_check(const FactoredBinaryForm& f, const FactoredBinaryForm& g) {
  int e = f.degree(), d = g.degree();
  if (e > d) return false;
  std::vector<ProjPoint> pts = f.roots();
  for (const auto& p : g.roots()) pts.push_back(p);
  for (const auto& p : pts)
    if (2 * (g.order_at(p) - f.order_at(p)) > d - e) return false;
  return true;
}

namespace {

// Deterministic stream of auxiliary points: the documented pads first, then
// [n:1] and [1:n] for growing n.
ProjPoint aux_candidate(int k) {
  if (k == 0) return ProjPoint::of(GQ(1), GQ(1));
  if (k == 1) return ProjPoint::of(GQ(Rat(-1)), GQ(1));
  int n = k / 2 + 2;
  if (k % 2 == 0) return ProjPoint::of(GQ(Rat(n)), GQ(1));
  return ProjPoint::of(GQ(1), GQ(Rat(n)));
}

bool contains_point(const std::vector<ProjPoint>& pts, const ProjPoint& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

std::vector<ProjPoint> adapted_points(const FactoredBinaryForm& f, const FactoredBinaryForm& g) {
  std::vector<ProjPoint> pts = f.roots();
  for (const auto& p : g.roots())
    if (!contains_point(pts, p)) pts.push_back(p);
  std::sort(pts.begin(), pts.end());

  // one generic point off the roots (needed to expose degree mismatches),
  // plus padding up to two points
  int added = 0, k = 0;
  while (added < 1 || pts.size() < 2) {
    ProjPoint c = aux_candidate(k++);
    if (contains_point(pts, c)) continue;
    pts.push_back(c);
    ++added;
  }
  return pts;
}

TorusFrame frame_sending(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw DomainError("frame_sending: points must be distinct");
  GMat m(2);
  m.at(0, 0) = -p.b;
  m.at(0, 1) = p.a;
  m.at(1, 0) = q.b;
  m.at(1, 1) = -q.a;
  return TorusFrame(std::move(m),
                    point_to_string(p) + "->[0:1], " + point_to_string(q) + "->[1:0]");
}

std::vector<TorusFrame> root_adapted_frames(const FactoredBinaryForm& f,
                                            const FactoredBinaryForm& g) {
  std::vector<ProjPoint> pts = adapted_points(f, g);
  std::vector<TorusFrame> frames;
  for (const auto& p : pts)
    for (const auto& q : pts) {
      if (p == q) continue;
      frames.push_back(frame_sending(p, q));
    }
  return frames;
}

OracleReport oracle_equivalence(const FactoredBinaryForm& f, const FactoredBinaryForm& g) {
  OracleReport rep;
  rep.closed_form = closed_form_check(f, g);
  Pair pair(expand(f), expand(g));
  rep.polytope = check_pair_numerical(pair, root_adapted_frames(f, g));
  rep.agree = rep.closed_form == (rep.polytope.status == PairStatus::SemistableForTestedTori);
  return rep;
}

FactoredBinaryForm parse_factored(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty factored form");
  if (s == "1") return FactoredBinaryForm::of({});

  std::vector<std::pair<ProjPoint, int>> factors;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '[') throw ParseError("expected '[' in factored form: " + s);
    size_t close = s.find(']', i);
    if (close == std::string::npos) throw ParseError("unbalanced '[' in factored form");
    std::string inside = s.substr(i + 1, close - i - 1);
    size_t colon = inside.find(':');
    if (colon == std::string::npos) throw ParseError("expected ':' in point literal");
    GQ a = gq_from_string(inside.substr(0, colon));
    GQ b = gq_from_string(inside.substr(colon + 1));
    i = close + 1;
    int mult = 1;
    if (i < s.size() && s[i] == '^') {
      size_t j = i + 1, start = j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == start) throw ParseError("expected multiplicity after '^'");
      mult = std::stoi(s.substr(start, j - start));
      i = j;
    }
    ProjPoint p = ProjPoint::of(a, b);
    bool merged = false;
    for (auto& [q, m] : factors)
      if (q == p) {
        m += mult;
        merged = true;
        break;
      }
    if (!merged) factors.emplace_back(p, mult);
    if (i < s.size()) {
      if (s[i] != '*') throw ParseError("expected '*' between factors");
      ++i;
    }
  }
  return FactoredBinaryForm::of(std::move(factors));
}

std::string factored_to_string(const FactoredBinaryForm& f) {
  if (f.factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, m] : f.factors) {
    if (!first) os << " * ";
    first = false;
    os << point_to_string(p);
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

std::vector<FactoredBinaryForm> enumerate_factored_forms(const std::vector<ProjPoint>& roots,
                                                         int degree) {
  std::vector<FactoredBinaryForm> out;
  std::vector<std::pair<ProjPoint, int>> current;
  auto rec = [&](auto&& self, size_t i, int remaining) -> void {
    if (i == roots.size()) {
      if (remaining == 0) out.push_back(FactoredBinaryForm::of(current));
      return;
    }
    self(self, i + 1, remaining);  // multiplicity 0
    for (int m = 1; m <= remaining; ++m) {
      current.emplace_back(roots[i], m);
      self(self, i + 1, remaining - m);
      current.pop_back();
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<ProjPoint> standard_root_set() {
  return {ProjPoint::of(GQ(0), GQ(1)), ProjPoint::of(GQ(1), GQ(0)), ProjPoint::of(GQ(1), GQ(1)),
          ProjPoint::of(GQ(Rat(-1)), GQ(1)), ProjPoint::of(GQ(2), GQ(1))};
}

}  // namespace polystab
