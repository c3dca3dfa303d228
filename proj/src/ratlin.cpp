#include "qpkit/ratlin.hpp"

#include <cassert>

namespace qpkit {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  assert(cols_ == o.rows_);
  RationalMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < o.cols_; ++c)
        if (o(k, c) != 0) p(r, c) += a * o(k, c);
    }
  return p;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  assert(static_cast<int>(v.size()) == cols_);
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) return false;
  return true;
}

namespace {

// Clears denominators and common numerator factors so each row is a
// primitive integer vector (empty rows stay zero).
std::vector<std::vector<Int>> primitive_rows(const RationalMatrix& m) {
  std::vector<std::vector<Int>> z(m.rows(), std::vector<Int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den().get_mpz_t());
    Int g = 0;
    for (int c = 0; c < m.cols(); ++c) {
      z[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[r][c].get_mpz_t());
    }
    if (g > 1)
      for (int c = 0; c < m.cols(); ++c) mpz_divexact(z[r][c].get_mpz_t(), z[r][c].get_mpz_t(), g.get_mpz_t());
  }
  return z;
}

// Bareiss forward pass in place; returns (pivot row, pivot col) pairs.
// The one-step division by the previous pivot stays exact under column
// skips because every intermediate entry is a minor of the scaled input.
std::vector<std::pair<int, int>> bareiss_forward(std::vector<std::vector<Int>>& z, int cols) {
  std::vector<std::pair<int, int>> pivots;
  const int rows = static_cast<int>(z.size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (z[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) z[pr].swap(z[r]);
    const Int pivot = z[r][c];
    for (int i = r + 1; i < rows; ++i) {
      const Int factor = z[i][c];
      for (int j = c; j < cols; ++j) {
        Int t = z[i][j] * pivot - factor * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    pivots.emplace_back(r, c);
    prev = pivot;
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RationalMatrix& m) {
  auto z = primitive_rows(m);
  auto pv = bareiss_forward(z, m.cols());

  RrefResult res;
  res.reduced = RationalMatrix(m.rows(), m.cols());
  for (auto& [r, c] : pv) res.pivots.push_back(c);

  // Back-substitution over the rationals on the echelon rows.
  const int nr = static_cast<int>(pv.size());
  std::vector<std::vector<Rational>> rr(nr, std::vector<Rational>(m.cols()));
  for (int i = nr - 1; i >= 0; --i) {
    const int pc = pv[i].second;
    Rational inv(z[i][pc]);
    for (int j = pc; j < m.cols(); ++j) rr[i][j] = Rational(z[i][j]) / inv;
    for (int k = i + 1; k < nr; ++k) {
      const int kc = pv[k].second;
      if (rr[i][kc] == 0) continue;
      Rational f = rr[i][kc];
      for (int j = kc; j < m.cols(); ++j)
        if (rr[k][j] != 0) rr[i][j] -= f * rr[k][j];
    }
  }
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < m.cols(); ++j) res.reduced(i, j) = rr[i][j];
  return res;
}

int rank(const RationalMatrix& m) {
  auto z = primitive_rows(m);
  return static_cast<int>(bareiss_forward(z, m.cols()).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qpkit
