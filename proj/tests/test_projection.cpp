#include <doctest.h>

#include "qpkit/monomials.hpp"
#include "qpkit/projection.hpp"

using namespace qpkit;

namespace {

VarietyModel twisted_cubic() { return toric_model(LatticeConfig::make(1, {{0}, {1}, {2}, {3}})); }

VarietyModel veronese(long long j) {
  std::vector<std::vector<long long>> pts;
  for (long long x = 0; x <= j; ++x)
    for (long long y = 0; x + y <= j; ++y) pts.push_back({x, y});
  return toric_model(LatticeConfig::make(2, pts));
}

ProjectivePoint rat_point(const std::vector<long>& v) {
  ProjectivePoint p;
  for (long x : v) p.emplace_back(x);
  return p;
}

PointConfig rnc_points(int n, int count) {
  std::vector<std::vector<Rational>> pts;
  for (long t = 1; t <= count; ++t) {
    std::vector<Rational> p;
    Rational v(1);
    for (int i = 0; i <= n; ++i) {
      p.push_back(v);
      v *= t;
    }
    pts.push_back(p);
  }
  return PointConfig::make(n, pts);
}

PointConfig random_points(int n, int count, Rng& rng) {
  std::vector<std::vector<Rational>> pts;
  while (static_cast<int>(pts.size()) < count) {
    std::vector<Rational> p;
    for (int i = 0; i <= n; ++i) p.emplace_back(rng.uniform(-30, 30));
    bool zero = true;
    for (auto& c : p) zero &= c == 0;
    if (!zero) pts.push_back(p);
  }
  return PointConfig::make(n, pts);
}

}  // namespace

TEST_CASE("kappa_at examples") {
  auto cubic = twisted_cubic();
  CHECK(kappa_at(cubic, {}) == 3);

  auto red = graph_model(GraphSpec::make(3, {{1, 2}}));
  CHECK(kappa_at(red, {rat_point({1, 0, 0})}) == 0);

  Rng rng(11);
  auto p = sample_point(cubic, rng);
  CHECK(kappa_at(cubic, {p}) == 1);
}

TEST_CASE("kappa_at rejects points off the variety, naming a quadric") {
  auto cubic = twisted_cubic();
  CHECK_THROWS_WITH_AS(kappa_at(cubic, {rat_point({1, 1, 1, 2})}),
                       doctest::Contains("quadric"), std::invalid_argument);
}

TEST_CASE("kappa_sequence examples") {
  auto cubic_seq = kappa_sequence(twisted_cubic(), 3, 42);
  CHECK(cubic_seq.values == std::vector<long long>({3, 1, 0}));
  CHECK(cubic_seq.agreement);

  auto v2_seq = kappa_sequence(veronese(2), 3, 42);
  CHECK(v2_seq.values == std::vector<long long>({6, 3, 1, 0}));

  auto v3_seq = kappa_sequence(veronese(3), 3, 42);
  CHECK(v3_seq.qp() == 6);
  CHECK(v3_seq.values.front() == 27);
  CHECK(v3_seq.values.back() == 0);
}

TEST_CASE("kappa_sequence rejects reducible and degenerate models") {
  auto red = graph_model(GraphSpec::make(3, {{1, 2}}));
  CHECK_THROWS_AS(kappa_sequence(red, 3, 42), std::invalid_argument);
  // a single point is irreducible but degenerate: kappa never reaches 0
  auto single = pointset_model(PointConfig::make(3, {rat_point({1, 2, 3, 4})}));
  CHECK_THROWS_AS(kappa_sequence(single, 3, 42), std::invalid_argument);
}

TEST_CASE("quadratic persistence examples") {
  CHECK(quadratic_persistence(veronese(2), 3, 42) == 3);
  CHECK(quadratic_persistence(twisted_cubic(), 3, 42) == 2);
  auto square = toric_model(LatticeConfig::make(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(quadratic_persistence(square, 3, 42) == 1);
}

TEST_CASE("qp_upper_search on the reducible example") {
  auto red = graph_model(GraphSpec::make(3, {{1, 2}}));
  auto res = qp_upper_search(red, 3, 3, 42);
  REQUIRE(res.found);
  CHECK(res.k == 1);
  REQUIRE(res.witness.size() == 1);
  // witness projectively equivalent to [1:0:0]
  CHECK(res.witness[0][0] != 0);
  CHECK(res.witness[0][1] == 0);
  CHECK(res.witness[0][2] == 0);
}

TEST_CASE("qp_upper_search on point configurations") {
  auto rnc8 = pointset_model(rnc_points(5, 8));
  auto res = qp_upper_search(rnc8, 8, 3, 42);
  REQUIRE(res.found);
  CHECK(res.k == 4);  // n - 1, the rational-normal-curve floor
  CHECK(res.exhaustive_below);

  // Nine random points never lie on a rational normal curve, so the
  // persistence drops below n - 1.
  Rng rng(97);
  auto nine = pointset_model(random_points(5, 9, rng));
  auto res9 = qp_upper_search(nine, 9, 3, 42);
  REQUIRE(res9.found);
  CHECK(res9.k < 4);
}

TEST_CASE("qp_upper_search on toric models uses vertex and sampled points") {
  auto res = qp_upper_search(twisted_cubic(), 3, 3, 42);
  REQUIRE(res.found);
  CHECK(res.k == 2);  // agrees with the generic chain
  // every witness point is on the variety (rechecked by construction)
  for (const auto& p : res.witness) CHECK_NOTHROW(require_on_variety(twisted_cubic(), p));
}

TEST_CASE("qp_upper_search inconclusive status") {
  GraphSpec petersen = GraphSpec::make(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  auto res = qp_upper_search(graph_model(petersen), 1, 1, 42);
  CHECK(!res.found);
}

TEST_CASE("kappa monotone under enlarging gamma") {
  Rng rng(7);
  auto v2 = veronese(2);
  PointList gamma;
  long long prev = kappa_at(v2, gamma);
  for (int i = 0; i < 3; ++i) {
    gamma.push_back(sample_point(v2, rng));
    long long cur = kappa_at(v2, gamma);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("kappa sequence shape invariants") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto seq = kappa_sequence(veronese(3), 3, seed);
    auto m = veronese(3);
    CHECK(seq.values.front() == m.quadrics.dim());
    CHECK(seq.values.back() == 0);
    CHECK(seq.strictly_decreasing());
    CHECK(seq.strictly_convex());
    CHECK(seq.qp() <= m.codim());
    // per-step drop bound along the generic chain
    for (std::size_t j = 1; j < seq.values.size(); ++j)
      CHECK(seq.values[j - 1] - seq.values[j] <= m.codim() - (static_cast<long long>(j) - 1));
    // sandwich
    const long long qp = seq.qp();
    CHECK(binomial(qp + 1, 2) <= m.quadrics.dim());
    CHECK(m.quadrics.dim() <= qp * m.codim() - binomial(qp, 2));
  }
}

TEST_CASE("oracle equals the gradient computation") {
  Rng sampler(4242);
  auto models = std::vector<VarietyModel>{twisted_cubic(), veronese(2)};
  for (const auto& m : models) {
    for (int size = 0; size <= 2; ++size) {
      PointList gamma;
      for (int i = 0; i < size; ++i) gamma.push_back(sample_point(m, sampler));
      const long long expected = kappa_at(m, gamma);
      for (std::uint64_t seed : {10ull, 20ull, 30ull}) {
        Rng rng(seed);
        const int nsamples = static_cast<int>(binomial(m.n - size + 2, 2)) + 10;
        CHECK(kappa_oracle(m, gamma, nsamples, rng) == expected);
      }
    }
  }
}

TEST_CASE("oracle examples") {
  auto cubic = twisted_cubic();
  Rng rng(3);
  CHECK(kappa_oracle(cubic, {}, quad_count(3) + 5, rng) == 3);

  auto v2 = veronese(2);
  Rng sampler(8);
  PointList gamma;
  for (int i = 0; i < 3; ++i) gamma.push_back(sample_point(v2, sampler));
  Rng rng2(9);
  CHECK(kappa_oracle(v2, gamma, quad_count(2) + 10, rng2) == 0);
}

TEST_CASE("oracle rejects degenerate spans") {
  auto v2 = veronese(2);
  Rng rng(14);
  auto p = sample_point(v2, rng);
  auto q = p;
  for (auto& c : q) c *= 2;  // same projective point
  Rng rng2(15);
  CHECK_THROWS_AS(kappa_oracle(v2, {p, q}, 40, rng2), std::invalid_argument);
}

TEST_CASE("minimal degree toric models have qp = codim") {
  // normalized volume = codim + 1 characterizes these
  std::vector<LatticeConfig> configs;
  configs.push_back(LatticeConfig::make(1, {{0}, {1}, {2}, {3}}));
  configs.push_back(LatticeConfig::make(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  std::vector<std::vector<long long>> t2;
  for (long long x = 0; x <= 2; ++x)
    for (long long y = 0; x + y <= 2; ++y) t2.push_back({x, y});
  configs.push_back(LatticeConfig::make(2, t2));
  for (const auto& a : configs) {
    auto m = toric_model(a);
    if (normalized_volume(a) == m.codim() + 1)
      CHECK(quadratic_persistence(m, 3, 42) == m.codim());
  }
}
