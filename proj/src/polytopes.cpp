#include "qpkit/polytopes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qpkit/ratlin.hpp"

namespace qpkit {

namespace {

using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

IVec to_ivec(const std::vector<long long>& v) {
  IVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Int dot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Divides by the gcd and orients the first nonzero entry positive.
void make_primitive(IVec& v) {
  Int g = 0;
  for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  for (auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

// Row echelon basis of the lattice spanned by the rows, via unimodular
// row operations (gcd elimination). Pivot columns strictly increase.
IMat lattice_basis(IMat rows) {
  if (rows.empty()) return {};
  const int d = static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < d && r < static_cast<int>(rows.size()); ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][c] != 0 && (best < 0 || cmp(abs(rows[i][c]), abs(rows[best][c])) < 0)) best = i;
      if (best < 0) break;
      bool clean = true;
      for (int i = r; i < static_cast<int>(rows.size()); ++i) {
        if (i == best || rows[i][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t());
        for (int j = 0; j < d; ++j) rows[i][j] -= q * rows[best][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        std::swap(rows[best], rows[r]);
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

// Coordinates of `target` in an echelon lattice basis; throws when the
// vector is not in the lattice.
IVec lattice_coords(const IMat& basis, IVec target) {
  IVec coords;
  coords.reserve(basis.size());
  for (const auto& row : basis) {
    int p = 0;
    while (row[p] == 0) ++p;
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), target[p].get_mpz_t(), row[p].get_mpz_t());
    if (rem != 0) throw std::runtime_error("vector not in lattice");
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * row[j];
    coords.push_back(q);
  }
  for (auto& x : target)
    if (x != 0) throw std::runtime_error("vector not in lattice");
  return coords;
}

// Basis of {x in Z^d : N x = 0} via unimodular column reduction.
IMat integer_kernel_basis(const IMat& n, int d) {
  IMat w = n;
  IMat u(d, IVec(d));
  for (int i = 0; i < d; ++i) u[i][i] = 1;  // columns of u tracked as u[col]
  int col = 0;
  for (std::size_t row = 0; row < w.size(); ++row) {
    for (;;) {
      int best = -1;
      for (int j = col; j < d; ++j)
        if (w[row][j] != 0 && (best < 0 || cmp(abs(w[row][j]), abs(w[row][best])) < 0)) best = j;
      if (best < 0) break;
      bool clean = true;
      for (int j = col; j < d; ++j) {
        if (j == best || w[row][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w[row][j].get_mpz_t(), w[row][best].get_mpz_t());
        for (std::size_t rr = 0; rr < w.size(); ++rr) w[rr][j] -= q * w[rr][best];
        for (int rr = 0; rr < d; ++rr) u[j][rr] -= q * u[best][rr];
        if (w[row][j] != 0) clean = false;
      }
      if (clean) {
        for (std::size_t rr = 0; rr < w.size(); ++rr) std::swap(w[rr][best], w[rr][col]);
        std::swap(u[best], u[col]);
        ++col;
        break;
      }
    }
  }
  return IMat(u.begin() + col, u.end());
}

RationalMatrix to_matrix(const IMat& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Rational(rows[r][c]);
  return m;
}

int rational_rank(const IMat& rows, int cols) {
  if (rows.empty()) return 0;
  return rank(to_matrix(rows, cols));
}

struct Facet {
  IVec normal;  // primitive, oriented so normal . p <= offset for all p
  Int offset;
  bool operator<(const Facet& o) const {
    return normal != o.normal ? normal < o.normal : offset < o.offset;
  }
};

// Brute-force facet enumeration for a full-dimensional configuration in
// Z^r: candidate hyperplanes through r-subsets, kept when supporting.
std::vector<Facet> facets_fulldim(const IMat& pts, int r) {
  const int m = static_cast<int>(pts.size());
  std::set<Facet> out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  auto advance = [&]() {
    int i = r - 1;
    while (i >= 0 && idx[i] == m - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  if (m < r) return {};
  do {
    IMat diffs;
    for (int i = 1; i < r; ++i) diffs.push_back(sub(pts[idx[i]], pts[idx[0]]));
    RationalMatrix dm = to_matrix(diffs, r);
    auto ker = kernel_basis(dm);
    if (ker.size() != 1) continue;  // subset does not span a hyperplane
    IVec normal(r);
    Int lcm = 1;
    for (int j = 0; j < r; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), ker[0][j].get_den().get_mpz_t());
    for (int j = 0; j < r; ++j) normal[j] = ker[0][j].get_num() * (lcm / ker[0][j].get_den());
    make_primitive(normal);
    Int offset = dot(normal, pts[idx[0]]);
    bool above = false, below = false;
    for (const auto& p : pts) {
      int s = cmp(dot(normal, p), offset);
      above |= s > 0;
      below |= s < 0;
    }
    if (above && below) continue;
    if (above) {
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    out.insert(Facet{normal, offset});
  } while (advance());
  return std::vector<Facet>(out.begin(), out.end());
}

bool in_hull_fulldim(const std::vector<Facet>& facets, const IVec& x) {
  for (const auto& f : facets)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

// Normalized volume of a full-dimensional configuration in Z^r, by the
// cone decomposition nvol(P) = sum over facets missing v0 of
// nvol(facet) * lattice height of v0.
Int nvol_fulldim(const IMat& pts, int r) {
  if (r == 1) {
    Int lo = pts[0][0], hi = pts[0][0];
    for (const auto& p : pts) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  auto facets = facets_fulldim(pts, r);
  const IVec& v0 = pts[0];
  Int total = 0;
  for (const auto& f : facets) {
    Int height = f.offset - dot(f.normal, v0);
    if (height == 0) continue;
    IMat fpts;
    for (const auto& p : pts)
      if (dot(f.normal, p) == f.offset) fpts.push_back(p);
    IMat dir_basis = integer_kernel_basis({f.normal}, r);
    IMat mapped;
    for (const auto& p : fpts) mapped.push_back(lattice_coords(lattice_basis(dir_basis), sub(p, fpts[0])));
    total += nvol_fulldim(mapped, r - 1) * height;
  }
  return total;
}

// Maps the configuration to full-rank coordinates. `saturate` picks the
// lattice Z^d cap span (membership tests) over span_Z(A - A) (volume).
struct FullRank {
  IMat pts;  // |A| points in Z^r
  int r = 0;
  IMat basis;  // echelon lattice basis, rows in Z^d
  IVec base;   // translation origin (first point of A)
};

FullRank full_rank_coords(const LatticeConfig& a, bool saturate) {
  IMat diffs;
  for (std::size_t i = 1; i < a.points.size(); ++i)
    diffs.push_back(sub(to_ivec(a.points[i]), to_ivec(a.points[0])));
  int r = rational_rank(diffs, a.dim);
  FullRank out;
  out.r = r;
  out.base = to_ivec(a.points[0]);
  if (r == 0) {
    out.pts.assign(a.points.size(), IVec{});
    return out;
  }
  if (saturate) {
    auto ker = kernel_basis(to_matrix(diffs, a.dim));  // rational orthocomplement
    if (ker.empty()) {
      IMat id(a.dim, IVec(a.dim));
      for (int i = 0; i < a.dim; ++i) id[i][i] = 1;
      out.basis = std::move(id);
    } else {
      IMat n;
      for (auto& kv : ker) {
        IVec row(a.dim);
        Int lcm = 1;
        for (int j = 0; j < a.dim; ++j)
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), kv[j].get_den().get_mpz_t());
        for (int j = 0; j < a.dim; ++j) row[j] = kv[j].get_num() * (lcm / kv[j].get_den());
        n.push_back(std::move(row));
      }
      out.basis = lattice_basis(integer_kernel_basis(n, a.dim));
    }
  } else {
    out.basis = lattice_basis(diffs);
  }
  for (const auto& p : a.points)
    out.pts.push_back(lattice_coords(out.basis, sub(to_ivec(p), out.base)));
  return out;
}

}  // namespace

LatticeConfig LatticeConfig::make(int dim, std::vector<std::vector<long long>> points) {
  if (dim < 1) throw std::invalid_argument("lattice dimension must be positive");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("lattice point has wrong dimension");
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate lattice points");
  return LatticeConfig{dim, std::move(points)};
}

int LatticeConfig::affine_dim() const {
  IMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.push_back(sub(to_ivec(points[i]), to_ivec(points[0])));
  return rational_rank(diffs, dim);
}

LatticeConfig lattice_points(const std::vector<std::vector<long long>>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("no vertices");
  const int d = static_cast<int>(vertices[0].size());
  std::vector<std::vector<long long>> unique_vertices = vertices;
  std::sort(unique_vertices.begin(), unique_vertices.end());
  unique_vertices.erase(std::unique(unique_vertices.begin(), unique_vertices.end()),
                        unique_vertices.end());
  LatticeConfig vcfg = LatticeConfig::make(d, unique_vertices);

  auto fr = full_rank_coords(vcfg, /*saturate=*/true);
  std::vector<std::vector<long long>> found;
  if (fr.r == 0) {
    found.push_back(unique_vertices[0]);
    return LatticeConfig::make(d, std::move(found));
  }
  auto facets = facets_fulldim(fr.pts, fr.r);

  // Bounding-box scan in the original coordinates; membership is exact.
  std::vector<long long> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = hi[j] = unique_vertices[0][j];
    for (const auto& v : unique_vertices) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  }
  std::vector<long long> cursor = lo;
  for (;;) {
    // A candidate lies inside iff it is in the saturated span lattice and
    // satisfies every facet inequality in the mapped coordinates.
    try {
      IVec mapped = lattice_coords(fr.basis, sub(to_ivec(cursor), fr.base));
      if (in_hull_fulldim(facets, mapped)) found.push_back(cursor);
    } catch (const std::runtime_error&) {
      // not in the affine span
    }
    int j = d - 1;
    while (j >= 0 && cursor[j] == hi[j]) cursor[j--] = lo[j];
    if (j < 0) break;
    ++cursor[j];
  }
  std::sort(found.begin(), found.end());
  return LatticeConfig::make(d, std::move(found));
}

long long minkowski_count(const LatticeConfig& a) {
  std::set<std::vector<long long>> sums;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    for (std::size_t j = i; j < a.points.size(); ++j) {
      std::vector<long long> s(a.dim);
      for (int t = 0; t < a.dim; ++t) s[t] = a.points[i][t] + a.points[j][t];
      sums.insert(std::move(s));
    }
  return static_cast<long long>(sums.size());
}

LineCover min_line_cover(const LatticeConfig& a) {
  if (a.points.empty()) throw std::invalid_argument("empty configuration");
  std::vector<long long> fallback(a.dim, 0);
  fallback[0] = 1;
  LineCover best{static_cast<long long>(a.points.size()), fallback};
  if (a.points.size() == 1) return LineCover{1, fallback};

  std::set<std::vector<long long>> dirs;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    for (std::size_t j = i + 1; j < a.points.size(); ++j) {
      IVec d = sub(to_ivec(a.points[j]), to_ivec(a.points[i]));
      make_primitive(d);
      std::vector<long long> dl(a.dim);
      for (int t = 0; t < a.dim; ++t) dl[t] = d[t].get_si();
      dirs.insert(std::move(dl));
    }
  for (const auto& dl : dirs) {
    IVec v = to_ivec(dl);
    Int vv = dot(v, v);
    std::set<IVec> lines;
    for (const auto& pl : a.points) {
      IVec p = to_ivec(pl);
      Int pv = dot(p, v);
      IVec key(a.dim);
      for (int t = 0; t < a.dim; ++t) key[t] = p[t] * vv - pv * v[t];
      lines.insert(std::move(key));
    }
    long long count = static_cast<long long>(lines.size());
    if (count < best.lines) best = LineCover{count, dl};
  }
  return best;
}

Int normalized_volume(const LatticeConfig& a) {
  auto fr = full_rank_coords(a, /*saturate=*/false);
  if (fr.r == 0) throw std::invalid_argument("normalized_volume: degenerate hull");
  return nvol_fulldim(fr.pts, fr.r);
}

LatticeConfig prism(const LatticeConfig& a, int k) {
  if (k < 1) throw std::invalid_argument("prism height must be >= 1");
  std::vector<std::vector<long long>> pts;
  for (long long h = 0; h <= k; ++h)
    for (const auto& p : a.points) {
      auto q = p;
      q.push_back(h);
      pts.push_back(std::move(q));
    }
  return LatticeConfig::make(a.dim + 1, std::move(pts));
}

LatticeConfig pyramid(const LatticeConfig& a) {
  std::vector<std::vector<long long>> pts;
  for (const auto& p : a.points) {
    auto q = p;
    q.push_back(0);
    pts.push_back(std::move(q));
  }
  std::vector<long long> apex(a.dim + 1, 0);
  apex[a.dim] = 1;
  pts.push_back(std::move(apex));
  return LatticeConfig::make(a.dim + 1, std::move(pts));
}

LatticeConfig lawrence_prism(const std::vector<long long>& heights) {
  const int k = static_cast<int>(heights.size());
  if (k < 1) throw std::invalid_argument("lawrence_prism needs at least one height");
  if (!std::is_sorted(heights.begin(), heights.end()))
    throw std::invalid_argument("lawrence_prism heights must be nondecreasing");
  // Line i runs from e_i up along the last axis to e_i + a_i e_k (line 0
  // starts at the origin); the union of these segments is the whole
  // lattice point set of the Lawrence prism.
  std::vector<std::vector<long long>> pts;
  for (int i = 0; i < k; ++i) {
    if (heights[i] < 0) throw std::invalid_argument("lawrence_prism heights must be nonnegative");
    for (long long t = 0; t <= heights[i]; ++t) {
      std::vector<long long> p(k, 0);
      if (i > 0) p[i - 1] = 1;
      p[k - 1] = t;
      pts.push_back(std::move(p));
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return LatticeConfig::make(k, std::move(pts));
}

long long boundary_point_count(const LatticeConfig& a) {
  auto fr = full_rank_coords(a, /*saturate=*/true);
  if (fr.r == 0) return static_cast<long long>(a.points.size());
  auto facets = facets_fulldim(fr.pts, fr.r);
  long long count = 0;
  for (const auto& p : fr.pts) {
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) {
        ++count;
        break;
      }
  }
  return count;
}

std::vector<int> hull_vertices(const LatticeConfig& a) {
  auto fr = full_rank_coords(a, /*saturate=*/true);
  std::vector<int> verts;
  if (fr.r == 0) {
    for (std::size_t i = 0; i < a.points.size(); ++i) verts.push_back(static_cast<int>(i));
    return verts;
  }
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    IMat others;
    for (std::size_t j = 0; j < a.points.size(); ++j)
      if (j != i) others.push_back(fr.pts[j]);
    // Affine rank drop means the point is needed to span: a vertex.
    IMat diffs;
    for (std::size_t j = 1; j < others.size(); ++j) diffs.push_back(sub(others[j], others[0]));
    if (rational_rank(diffs, fr.r) < fr.r) {
      verts.push_back(static_cast<int>(i));
      continue;
    }
    auto facets = facets_fulldim(others, fr.r);
    if (!in_hull_fulldim(facets, fr.pts[i])) verts.push_back(static_cast<int>(i));
  }
  return verts;
}

}  // namespace qpkit
