#include <doctest.h>

#include "qpkit/ratlin.hpp"
#include "qpkit/rng.hpp"

using namespace qpkit;

namespace {

RationalMatrix from_ints(const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Rational(static_cast<long>(rows[i][j]));
  return m;
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols) {
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      // small rationals, with some zeros for realistic sparsity
      long num = rng.uniform(-6, 6);
      long den = rng.uniform(1, 4);
      m(i, j) = Rational(num, den);
      m(i, j).canonicalize();
    }
  return m;
}

// Independent oracle: plain rational Gauss-Jordan, no Bareiss, no pivots
// beyond first-nonzero. Frozen reference for the rref examples.
RationalMatrix naive_rref(RationalMatrix m) {
  int lead = 0;
  for (int r = 0; r < m.rows() && lead < m.cols(); ++r) {
    int i = r;
    while (i < m.rows() && m(i, lead) == 0) ++i;
    if (i == m.rows()) {
      --r;
      ++lead;
      continue;
    }
    for (int c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(r, c));
    Rational inv = 1 / m(r, lead);
    for (int c = 0; c < m.cols(); ++c) m(r, c) *= inv;
    for (int k = 0; k < m.rows(); ++k) {
      if (k == r || m(k, lead) == 0) continue;
      Rational f = m(k, lead);
      for (int c = 0; c < m.cols(); ++c) m(k, c) -= f * m(r, c);
    }
    ++lead;
  }
  return m;
}

}  // namespace

TEST_CASE("rref on the stated examples") {
  auto id = RationalMatrix::identity(2);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.pivots == std::vector<int>{0, 1});

  auto zero = RationalMatrix(2, 3);
  auto rz = rref(zero);
  CHECK(rz.reduced == zero);
  CHECK(rz.pivots.empty());

  auto m = from_ints({{1, 2}, {2, 4}});
  auto rm = rref(m);
  CHECK(rm.reduced == from_ints({{1, 2}, {0, 0}}));
  CHECK(rm.pivots == std::vector<int>{0});
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(from_ints({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RationalMatrix(0, 5)) == 0);
}

TEST_CASE("kernel basis examples") {
  auto k1 = kernel_basis(from_ints({{1, 1, 1}}));
  REQUIRE(k1.size() == 2);
  CHECK(k1[0] == std::vector<Rational>{Rational(-1), Rational(1), Rational(0)});
  CHECK(k1[1] == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});

  CHECK(kernel_basis(from_ints({{1, 2}, {3, 4}})).empty());

  auto k3 = kernel_basis(from_ints({{1, 2}, {2, 4}}));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0][0] / k3[0][1] == Rational(-2));
}

TEST_CASE("rref matches an independent Gauss-Jordan oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng.uniform(0, 6));
    int cols = 1 + static_cast<int>(rng.uniform(0, 6));
    auto m = random_matrix(rng, rows, cols);
    CHECK(rref(m).reduced == naive_rref(m));
  }
}

TEST_CASE("rref is idempotent") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_matrix(rng, 1 + static_cast<int>(rng.uniform(0, 5)),
                           1 + static_cast<int>(rng.uniform(0, 5)));
    auto r = rref(m).reduced;
    CHECK(rref(r).reduced == r);
  }
}

TEST_CASE("rank equals rank of the transpose") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_matrix(rng, 1 + static_cast<int>(rng.uniform(0, 6)),
                           1 + static_cast<int>(rng.uniform(0, 6)));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel vectors annihilate the matrix exactly and rank-nullity holds") {
  Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_matrix(rng, 1 + static_cast<int>(rng.uniform(0, 6)),
                           1 + static_cast<int>(rng.uniform(0, 6)));
    auto basis = kernel_basis(m);
    CHECK(static_cast<int>(basis.size()) + rank(m) == m.cols());
    for (const auto& v : basis)
      for (const auto& entry : m.apply(v)) CHECK(entry == 0);
  }
}
