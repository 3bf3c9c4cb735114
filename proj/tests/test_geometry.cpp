#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polystab/geometry.hpp"

using namespace polystab;

namespace {

QVec qv(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Rat rr(long n, long d) { return make_rat(n, d); }

// independent minimization oracle: scan the raw input points
Rat min_over_points(const std::vector<QVec>& pts, const std::vector<long long>& u) {
  Rat best;
  bool first = true;
  for (const auto& p : pts) {
    Rat s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += Rat(static_cast<long>(u[i])) * p[i];
    if (first || s < best) {
      best = s;
      first = false;
    }
  }
  return best;
}

// membership oracle: x lies in conv(S) iff x is a vertex of nothing new
bool member_oracle(const QVec& x, const std::vector<QVec>& s) {
  LatticePolytope h = convex_hull(s);
  for (const auto& v : h.vertices)
    if (v == x) return true;
  std::vector<QVec> extended = s;
  extended.push_back(x);
  LatticePolytope h2 = convex_hull(extended);
  for (const auto& v : h2.vertices)
    if (v == x) return false;
  return true;
}

std::vector<QVec> random_points(std::mt19937_64& rng, int dim, int count) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<QVec> pts;
  for (int i = 0; i < count; ++i) {
    QVec p;
    for (int j = 0; j < dim; ++j) p.push_back(make_rat(num(rng), den(rng)));
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("hull drops interior points") {
  auto h = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), {rr(1, 2), rr(1, 4)}});
  CHECK(h.vertices == std::vector<QVec>{qv({0, 0}), qv({0, 1}), qv({1, 0})});
  CHECK(h.affine_dim == 2);
  CHECK(h.halfspaces.size() == 3);
  CHECK(h.equalities.empty());
}

TEST_CASE("hull of a single point is a point with two equalities") {
  auto h = convex_hull({qv({5, 5})});
  CHECK(h.vertices == std::vector<QVec>{qv({5, 5})});
  CHECK(h.affine_dim == 0);
  CHECK(h.equalities.size() == 2);
  CHECK(h.halfspaces.empty());
}

TEST_CASE("hull of collinear points keeps the endpoints") {
  auto h = convex_hull({qv({0, 0}), qv({1, 1}), qv({2, 2})});
  CHECK(h.vertices == std::vector<QVec>{qv({0, 0}), qv({2, 2})});
  CHECK(h.affine_dim == 1);
  CHECK(h.equalities.size() == 1);
  CHECK(h.halfspaces.size() == 2);
}

TEST_CASE("hull input validation") {
  CHECK_THROWS_AS(convex_hull({}), DomainError);
  CHECK_THROWS_AS(convex_hull({qv({1, 2}), qv({1, 2, 3})}), DomainError);
}

TEST_CASE("minimize_linear on the unit square") {
  auto square = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  CHECK(minimize_linear(square, std::vector<long long>{1, 1}) == 0);
  CHECK(minimize_linear(square, std::vector<long long>{-1, -2}) == -3);
  CHECK_THROWS_AS(minimize_linear(square, std::vector<long long>{1}), DomainError);
}

TEST_CASE("minimize_linear on a segment matches the endpoint oracle") {
  std::vector<QVec> endpoints = {qv({1, -1}), qv({2, -2})};
  auto seg = convex_hull(endpoints);
  std::vector<long long> u = {1, -1};
  CHECK(minimize_linear(seg, u) == min_over_points(endpoints, u));
  CHECK(minimize_linear(seg, u) == 2);
}

TEST_CASE("containment of a segment in the unit square") {
  auto seg = convex_hull({qv({0, 0}), qv({1, 0})});
  auto square = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  auto r = contains_polytope(seg, square);
  CHECK(r.contained);
  CHECK_FALSE(contains_polytope(square, seg).contained);
}

TEST_CASE("separation produces a replayable certificate") {
  auto p = convex_hull({qv({0, 0})});
  auto q = convex_hull({qv({1, 0}), qv({0, 1})});
  auto r = contains_polytope(p, q);
  REQUIRE_FALSE(r.contained);
  REQUIRE(r.certificate.has_value());
  CHECK(*r.certificate == std::vector<long long>{1, 1});
  CHECK(minimize_linear(q, *r.certificate) == 1);
  CHECK(minimize_linear(p, *r.certificate) == 0);
  CHECK(r.min_q > r.min_p);
}

TEST_CASE("containment is reflexive") {
  auto h = convex_hull({qv({0, 0}), qv({3, 1}), qv({1, 4}), qv({-2, 2})});
  CHECK(contains_polytope(h, h).contained);
  CHECK_THROWS_AS(contains_polytope(h, convex_hull({qv({1, 2, 3})})), DomainError);
}

TEST_CASE("quotient projection") {
  CHECK(quotient_project(qv({3, 0, 0})) == qv({2, -1, -1}));
  CHECK(quotient_project(qv({1, 1})) == qv({0, 0}));
  CHECK(quotient_project(qv({4, 0})) == qv({2, -2}));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    QVec x, y;
    for (int i = 0; i < 4; ++i) {
      x.emplace_back(c(rng));
      y.emplace_back(c(rng));
    }
    QVec px = quotient_project(x);
    Rat sum = 0;
    for (const Rat& v : px) sum += v;
    CHECK(sum == 0);
    CHECK(quotient_project(px) == px);  // idempotent
    QVec xy = x;
    for (size_t i = 0; i < xy.size(); ++i) xy[i] += y[i];
    QVec pxy = quotient_project(xy);
    QVec py = quotient_project(y);
    for (size_t i = 0; i < xy.size(); ++i) CHECK(pxy[i] == px[i] + py[i]);  // linear
  }
  // the diagonal direction is exactly the kernel
  CHECK(quotient_project(qv({7, 7, 7, 7})) == qv({0, 0, 0, 0}));
}

TEST_CASE("scale_polytope") {
  auto square = convex_hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
  auto same = scale_polytope(square, Rat(1));
  CHECK(same.vertices == square.vertices);
  CHECK(same.halfspaces.size() == square.halfspaces.size());

  auto pt = scale_polytope(convex_hull({qv({1, -1})}), Rat(2));
  CHECK(pt.vertices == std::vector<QVec>{qv({2, -2})});

  auto half = scale_polytope(square, rr(1, 2));
  CHECK(half.vertices == std::vector<QVec>{qv({0, 0}), {rr(0, 1), rr(1, 2)}, {rr(1, 2), rr(0, 1)},
                                           {rr(1, 2), rr(1, 2)}});
  for (const auto& v : half.vertices)
    for (const auto& h : half.halfspaces) {
      Rat s = 0;
      for (size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(h.normal[i])) * v[i];
      CHECK(s >= h.offset);
    }
  CHECK_THROWS_AS(scale_polytope(square, Rat(0)), DomainError);
  CHECK_THROWS_AS(scale_polytope(square, Rat(-2)), DomainError);
}

TEST_CASE("randomized hull properties: idempotence, duality, V/H exactness") {
  std::mt19937_64 rng(2012);
  std::uniform_int_distribution<int> dim_pick(1, 4);
  std::uniform_int_distribution<int> count_pick(1, 8);
  std::uniform_int_distribution<long> upick(-9, 9);

  for (int trial = 0; trial < 300; ++trial) {
    int dim = dim_pick(rng);
    auto pts = random_points(rng, dim, count_pick(rng));
    LatticePolytope h = convex_hull(pts);

    // idempotence
    LatticePolytope h2 = convex_hull(h.vertices);
    CHECK(h2.vertices == h.vertices);
    CHECK(h2.affine_dim == h.affine_dim);

    // V/H exactness and facet support counts
    for (const auto& v : h.vertices) {
      for (const auto& hs : h.halfspaces) {
        Rat s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(hs.normal[i])) * v[i];
        CHECK(s >= hs.offset);
      }
      for (const auto& eq : h.equalities) {
        Rat s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(eq.normal[i])) * v[i];
        CHECK(s == eq.offset);
      }
    }
    for (const auto& hs : h.halfspaces) {
      int on = 0;
      for (const auto& v : h.vertices) {
        Rat s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += Rat(static_cast<long>(hs.normal[i])) * v[i];
        if (s == hs.offset) ++on;
      }
      CHECK(on >= h.affine_dim);
    }

    // minimization duality against the raw input points
    for (int k = 0; k < 25; ++k) {
      std::vector<long long> u;
      for (int i = 0; i < dim; ++i) u.push_back(upick(rng));
      CHECK(minimize_linear(h, u) == min_over_points(pts, u));
    }
  }
}

TEST_CASE("randomized containment against the membership oracle") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dim_pick(1, 3);
  std::uniform_int_distribution<int> count_pick(1, 6);
  std::uniform_int_distribution<long> upick(-9, 9);

  for (int trial = 0; trial < 200; ++trial) {
    int dim = dim_pick(rng);
    auto ps = random_points(rng, dim, count_pick(rng));
    auto qs = random_points(rng, dim, count_pick(rng));
    LatticePolytope p = convex_hull(ps);
    LatticePolytope q = convex_hull(qs);
    ContainmentResult r = contains_polytope(p, q);

    bool oracle = true;
    for (const auto& v : p.vertices)
      if (!member_oracle(v, qs)) oracle = false;
    CHECK(r.contained == oracle);

    if (r.contained) {
      for (int k = 0; k < 40; ++k) {
        std::vector<long long> u;
        for (int i = 0; i < dim; ++i) u.push_back(upick(rng));
        CHECK(minimize_linear(q, u) <= minimize_linear(p, u));
      }
    } else {
      CHECK(minimize_linear(q, *r.certificate) > minimize_linear(p, *r.certificate));
    }
  }
}
