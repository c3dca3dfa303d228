#include <doctest.h>

#include <set>

#include "qpkit/polytopes.hpp"
#include "qpkit/rng.hpp"

using namespace qpkit;

namespace {

LatticeConfig triangle(long long j) {
  std::vector<std::vector<long long>> pts;
  for (long long x = 0; x <= j; ++x)
    for (long long y = 0; x + y <= j; ++y) pts.push_back({x, y});
  return LatticeConfig::make(2, pts);
}

LatticeConfig unit_square() {
  return LatticeConfig::make(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

// Random unimodular map in dimension 2: shear/swap/negate compositions.
std::vector<std::vector<long long>> unimodular2(Rng& rng, const LatticeConfig& a) {
  long long m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (int step = 0; step < 6; ++step) {
    switch (rng.uniform(0, 2)) {
      case 0: {  // shear
        long long s = rng.uniform(-3, 3);
        m00 += s * m10;
        m01 += s * m11;
        break;
      }
      case 1:
        std::swap(m00, m10);
        std::swap(m01, m11);
        break;
      default:
        m00 = -m00;
        m01 = -m01;
    }
  }
  std::vector<long long> t{rng.uniform(-5, 5), rng.uniform(-5, 5)};
  std::vector<std::vector<long long>> out;
  for (const auto& p : a.points)
    out.push_back({m00 * p[0] + m01 * p[1] + t[0], m10 * p[0] + m11 * p[1] + t[1]});
  return out;
}

}  // namespace

TEST_CASE("lattice_points examples") {
  CHECK(triangle(2).points.size() == 6);
  CHECK(lattice_points({{0, 0}, {2, 0}, {0, 2}}).points.size() == 6);
  CHECK(lattice_points({{0}, {3}}).points ==
        std::vector<std::vector<long long>>({{0}, {1}, {2}, {3}}));
  CHECK(lattice_points({{0, 0}, {0, 1}, {1, 0}, {1, 1}}).points.size() == 4);
}

TEST_CASE("lattice_points handles non-full-dimensional hulls") {
  // segment embedded diagonally in Z^2
  auto seg = lattice_points({{0, 0}, {3, 3}});
  CHECK(seg.points.size() == 4);
  // triangle with even coordinates: interior integer points still found
  auto t = lattice_points({{0, 0}, {2, 0}, {0, 2}});
  std::set<std::vector<long long>> got(t.points.begin(), t.points.end());
  CHECK(got.count({1, 0}) == 1);
  CHECK(got.count({1, 1}) == 1);
}

TEST_CASE("minkowski_count examples") {
  CHECK(minkowski_count(LatticeConfig::make(1, {{0}, {1}, {2}, {3}})) == 7);
  CHECK(minkowski_count(triangle(3)) == 28);  // equals |T_6 cap Z^2|
  CHECK(triangle(6).points.size() == 28);
  CHECK(minkowski_count(LatticeConfig::make(2, {{5, 7}})) == 1);
}

TEST_CASE("min_line_cover examples") {
  for (long long j = 1; j <= 4; ++j) CHECK(min_line_cover(triangle(j)).lines == j + 1);
  auto pr = prism(unit_square(), 3);
  auto cover = min_line_cover(pr);
  CHECK(cover.lines == 4);
  CHECK(min_line_cover(LatticeConfig::make(2, {{0, 0}, {2, 4}, {1, 2}})).lines == 1);
  CHECK(min_line_cover(LatticeConfig::make(2, {{3, 1}})).lines == 1);
}

TEST_CASE("min_line_cover bounds") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    int count = 2 + static_cast<int>(rng.uniform(0, 6));
    std::vector<std::vector<long long>> pts;
    while (static_cast<int>(pts.size()) < count) {
      std::vector<long long> p{rng.uniform(0, 4), rng.uniform(0, 4)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto a = LatticeConfig::make(2, pts);
    auto cover = min_line_cover(a);
    CHECK(cover.lines <= static_cast<long long>(a.points.size()));
    if (cover.lines == 1) CHECK(a.affine_dim() <= 1);
  }
}

TEST_CASE("normalized_volume examples") {
  CHECK(normalized_volume(LatticeConfig::make(1, {{0}, {1}, {2}, {3}})) == 3);
  CHECK(normalized_volume(triangle(2)) == 4);
  CHECK(normalized_volume(unit_square()) == 2);
  // lattice generated by A - A corrects the index: {0, 2} has length 1
  CHECK(normalized_volume(LatticeConfig::make(1, {{0}, {2}})) == 1);
  CHECK_THROWS(normalized_volume(LatticeConfig::make(2, {{1, 1}})));
}

TEST_CASE("normalized_volume invariant under unimodular maps") {
  Rng rng(17);
  auto base = triangle(2);
  Int expected = normalized_volume(base);
  for (int trial = 0; trial < 10; ++trial) {
    auto mapped = LatticeConfig::make(2, unimodular2(rng, base));
    CHECK(normalized_volume(mapped) == expected);
  }
}

TEST_CASE("prism, pyramid, lawrence prism point counts") {
  auto tri = lattice_points({{0, 0}, {1, 0}, {0, 1}});
  CHECK(prism(tri, 2).points.size() == 9);
  CHECK(pyramid(triangle(2)).points.size() == 7);
  auto lp = lawrence_prism({1, 2});
  CHECK(lp.points.size() == 5);
  // cross-check against the hull scan
  auto hull = lattice_points({{0, 0}, {0, 1}, {1, 0}, {1, 2}});
  CHECK(lp.points == hull.points);
}

TEST_CASE("prisms are covered by |A| vertical lines") {
  auto sq = unit_square();
  for (int k = 1; k <= 3; ++k) {
    auto pr = prism(sq, k);
    CHECK(min_line_cover(pr).lines <= static_cast<long long>(sq.points.size()));
  }
  CHECK(min_line_cover(prism(sq, 3)).lines == 4);
}

TEST_CASE("minkowski count vs dilated polytope") {
  // |A + A| <= |2 conv(A) cap Z^d|, with equality for the normal
  // configurations used throughout.
  auto doubled = [](const LatticeConfig& a) {
    std::vector<std::vector<long long>> verts;
    for (int i : hull_vertices(a)) {
      auto v = a.points[i];
      for (auto& x : v) x *= 2;
      verts.push_back(std::move(v));
    }
    return static_cast<long long>(lattice_points(verts).points.size());
  };
  for (long long j = 1; j <= 3; ++j) {
    auto t = triangle(j);
    CHECK(minkowski_count(t) == doubled(t));
  }
  auto sq = unit_square();
  CHECK(minkowski_count(sq) == doubled(sq));
  auto pr = prism(sq, 2);
  CHECK(minkowski_count(pr) == doubled(pr));
}

TEST_CASE("hull vertices") {
  auto t = triangle(2);
  auto verts = hull_vertices(t);
  CHECK(verts.size() == 3);
  CHECK(boundary_point_count(t) == 6);
  CHECK(boundary_point_count(triangle(3)) == 9);  // one interior point
}

TEST_CASE("configuration validation") {
  CHECK_THROWS(LatticeConfig::make(1, {{0}, {0}}));
  CHECK_THROWS(LatticeConfig::make(2, {{0}}));
  CHECK_THROWS(lawrence_prism({2, 1}));  // must be nondecreasing
}
