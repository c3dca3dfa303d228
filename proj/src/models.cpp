#include "qpkit/models.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qpkit/monomials.hpp"

namespace qpkit {

namespace {

constexpr long long kSampleBox = 50;

Rational pow_rational(const Rational& base, long long e) {
  Rational r = 1;
  Rational b = base;
  long long k = e < 0 ? -e : e;
  for (; k > 0; k >>= 1) {
    if (k & 1) r *= b;
    b *= b;
  }
  if (e < 0) {
    if (r == 0) throw std::domain_error("zero base with negative exponent");
    r = 1 / r;
  }
  return r;
}

std::vector<Rational> normalize_projective(const std::vector<Rational>& p) {
  // Scale so the first nonzero coordinate is 1; used only for comparisons.
  std::vector<Rational> q = p;
  for (const auto& x : q)
    if (x != 0) {
      Rational inv = 1 / x;
      for (auto& y : q) y *= inv;
      return q;
    }
  throw std::invalid_argument("zero vector is not a projective point");
}

}  // namespace

PointConfig PointConfig::make(int n, std::vector<std::vector<Rational>> points) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  if (points.empty()) throw std::invalid_argument("point configuration needs >= 1 point");
  std::set<std::vector<Rational>> seen;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n + 1)
      throw std::invalid_argument("point has wrong number of coordinates");
    if (!seen.insert(normalize_projective(p)).second)
      throw std::invalid_argument("points must be pairwise distinct projectively");
  }
  return PointConfig{n, std::move(points)};
}

QuadricSpace toric_quadrics(const LatticeConfig& a) {
  const int n = static_cast<int>(a.points.size()) - 1;
  QuadricSpace qs;
  qs.n = n;
  // Kernel of the merge map x_i x_j -> a_i + a_j: within each fiber of
  // the sum, differences of consecutive monomials. Basis vectors are
  // binomial: exactly two entries, +1 and -1.
  std::map<std::vector<long long>, std::vector<std::pair<int, int>>> fibers;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<long long> s(a.dim);
      for (int t = 0; t < a.dim; ++t) s[t] = a.points[i][t] + a.points[j][t];
      fibers[std::move(s)].emplace_back(i, j);
    }
  const int m2 = quad_count(n);
  for (const auto& [sum, mons] : fibers)
    for (std::size_t k = 1; k < mons.size(); ++k) {
      std::vector<Rational> v(m2);
      v[quad_index(n, mons[0].first, mons[0].second)] = 1;
      v[quad_index(n, mons[k].first, mons[k].second)] = -1;
      qs.basis.push_back(std::move(v));
    }
  return qs;
}

VarietyModel toric_model(const LatticeConfig& a) {
  if (a.points.size() < 2) throw std::invalid_argument("toric model needs >= 2 lattice points");
  VarietyModel m;
  m.kind = ModelKind::toric;
  m.lattice = a;
  m.n = static_cast<int>(a.points.size()) - 1;
  m.dim_x = a.affine_dim();
  m.irreducible = true;
  m.quadrics = toric_quadrics(a);
  return m;
}

VarietyModel graph_model(const GraphSpec& g) {
  if (g.vertex_count < 2) throw std::invalid_argument("graph model needs >= 2 vertices");
  VarietyModel m;
  m.kind = ModelKind::graph;
  m.graph = g;
  m.n = g.vertex_count - 1;
  m.dim_x = clique_number(g) - 1;
  const long long all_pairs = binomial(g.vertex_count, 2);
  m.irreducible = static_cast<long long>(g.edges.size()) == all_pairs;  // complete graph
  m.quadrics.n = m.n;
  const int m2 = quad_count(m.n);
  for (int i = 0; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (!g.adjacent(i, j)) {
        std::vector<Rational> v(m2);
        v[quad_index(m.n, i, j)] = 1;
        m.quadrics.basis.push_back(std::move(v));
      }
  return m;
}

RationalMatrix pointset_evaluation_matrix(const PointConfig& c, int q) {
  auto mons = degree_monomials(c.n, q);
  RationalMatrix e(static_cast<int>(c.points.size()), static_cast<int>(mons.size()));
  for (int r = 0; r < e.rows(); ++r)
    for (int col = 0; col < e.cols(); ++col) {
      Rational v = 1;
      for (int idx : mons[col]) v *= c.points[r][idx];
      e(r, col) = v;
    }
  return e;
}

VarietyModel pointset_model(const PointConfig& c) {
  VarietyModel m;
  m.kind = ModelKind::pointset;
  m.pointset = c;
  m.n = c.n;
  m.dim_x = 0;
  m.irreducible = c.points.size() == 1;
  m.quadrics.n = c.n;
  for (auto& v : kernel_basis(pointset_evaluation_matrix(c, 2))) m.quadrics.basis.push_back(std::move(v));
  return m;
}

bool VarietyModel::degenerate() const {
  switch (kind) {
    case ModelKind::toric:
      return false;  // distinct characters are linearly independent
    case ModelKind::graph:
      return false;  // every vertex lies in some maximal clique
    case ModelKind::pointset:
      return rank(pointset_evaluation_matrix(pointset, 1)) < n + 1;
  }
  return false;
}

long long hilbert_dim(const VarietyModel& m, int q) {
  if (q < 0 || q > 3) throw std::invalid_argument("hilbert_dim supports q in {0,1,2,3}");
  if (q == 0) return 1;
  switch (m.kind) {
    case ModelKind::toric: {
      std::set<std::vector<long long>> sums;
      const auto& pts = m.lattice.points;
      const int d = m.lattice.dim;
      if (q == 1) return static_cast<long long>(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j) {
          if (q == 2) {
            std::vector<long long> s(d);
            for (int t = 0; t < d; ++t) s[t] = pts[i][t] + pts[j][t];
            sums.insert(std::move(s));
          } else {
            for (std::size_t k = j; k < pts.size(); ++k) {
              std::vector<long long> s(d);
              for (int t = 0; t < d; ++t) s[t] = pts[i][t] + pts[j][t] + pts[k][t];
              sums.insert(std::move(s));
            }
          }
        }
      return static_cast<long long>(sums.size());
    }
    case ModelKind::graph: {
      long long count = 0;
      for (const auto& mon : degree_monomials(m.n, q)) {
        bool clique = true;
        for (std::size_t i = 0; i < mon.size() && clique; ++i)
          for (std::size_t j = i + 1; j < mon.size() && clique; ++j)
            if (mon[i] != mon[j] && !m.graph.adjacent(mon[i], mon[j])) clique = false;
        if (clique) ++count;
      }
      return count;
    }
    case ModelKind::pointset:
      return rank(pointset_evaluation_matrix(m.pointset, q));
  }
  throw std::logic_error("unreachable");
}

std::vector<Rational> sample_point(const VarietyModel& m, Rng& rng) {
  switch (m.kind) {
    case ModelKind::toric: {
      std::vector<long long> t(m.lattice.dim);
      for (auto& x : t) x = rng.nonzero(kSampleBox);
      std::vector<Rational> p;
      p.reserve(m.n + 1);
      for (const auto& a : m.lattice.points) {
        Rational coord = 1;
        for (int i = 0; i < m.lattice.dim; ++i) coord *= pow_rational(Rational(static_cast<long>(t[i])), a[i]);
        p.push_back(std::move(coord));
      }
      return p;
    }
    case ModelKind::graph: {
      auto cliques = maximal_cliques(m.graph);
      const auto& clique = cliques[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(cliques.size()) - 1))];
      std::vector<Rational> p(m.n + 1, Rational(0));
      for (int v : clique) p[v] = Rational(rng.nonzero(kSampleBox));
      return p;
    }
    case ModelKind::pointset:
      return m.pointset.points[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(m.pointset.points.size()) - 1))];
  }
  throw std::logic_error("unreachable");
}

Rational evaluate_quadric(int n, const std::vector<Rational>& coeffs,
                          const std::vector<Rational>& point) {
  Rational v = 0;
  int idx = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j, ++idx)
      if (coeffs[idx] != 0) v += coeffs[idx] * point[i] * point[j];
  return v;
}

std::vector<Rational> quadric_gradient(int n, const std::vector<Rational>& coeffs,
                                       const std::vector<Rational>& point) {
  std::vector<Rational> g(n + 1, Rational(0));
  int idx = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j, ++idx) {
      const Rational& c = coeffs[idx];
      if (c == 0) continue;
      if (i == j) {
        g[i] += 2 * c * point[i];
      } else {
        g[i] += c * point[j];
        g[j] += c * point[i];
      }
    }
  return g;
}

int violated_quadric(const VarietyModel& m, const std::vector<Rational>& point) {
  for (int b = 0; b < m.quadrics.dim(); ++b)
    if (evaluate_quadric(m.n, m.quadrics.basis[b], point) != 0) return b;
  return -1;
}

void require_on_variety(const VarietyModel& m, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != m.n + 1)
    throw std::invalid_argument("point has wrong number of coordinates");
  bool nonzero = false;
  for (const auto& x : point) nonzero |= x != 0;
  if (!nonzero) throw std::invalid_argument("zero vector is not a projective point");
  int b = violated_quadric(m, point);
  if (b >= 0)
    throw std::invalid_argument("point is not on the variety: basis quadric #" +
                                std::to_string(b) + " does not vanish");
  if (m.kind == ModelKind::pointset) {
    auto norm = normalize_projective(point);
    for (const auto& p : m.pointset.points)
      if (normalize_projective(p) == norm) return;
    throw std::invalid_argument("point is not one of the stored configuration points");
  }
}

}  // namespace qpkit
