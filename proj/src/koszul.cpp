#include "qpkit/koszul.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "qpkit/monomials.hpp"

namespace qpkit {

namespace {

using Key = std::vector<long long>;  // multidegree of a Koszul basis element

// Graded piece R_q with explicit basis and multiplication by variables.
struct RingPiece {
  long long dim = 0;
  // toric: basis[i] = semigroup element (q-fold sum); graph: basis[i] =
  // monomial as sorted index tuple. Pointset pieces carry normal forms.
  std::vector<Key> toric_basis;
  std::map<Key, int> toric_index;
  std::vector<std::vector<int>> graph_basis;
  std::map<std::vector<int>, int> graph_index;
  std::vector<std::vector<int>> pivot_monomials;          // pointset basis
  std::map<std::vector<int>, std::vector<Rational>> nf;   // monomial -> coords
};

struct GradedRing {
  const VarietyModel* model;
  RingPiece piece[4];

  explicit GradedRing(const VarietyModel& m) : model(&m) {
    for (int q = 0; q <= 3; ++q) build(q);
  }

  void build(int q) {
    RingPiece& rp = piece[q];
    switch (model->kind) {
      case ModelKind::toric: {
        const auto& pts = model->lattice.points;
        const int d = model->lattice.dim;
        std::map<Key, int> seen;
        std::vector<int> mon;
        for (const auto& tuple : degree_monomials(model->n, q)) {
          Key s(d, 0);
          for (int idx : tuple)
            for (int t = 0; t < d; ++t) s[t] += pts[idx][t];
          if (seen.emplace(s, static_cast<int>(rp.toric_basis.size())).second)
            rp.toric_basis.push_back(std::move(s));
        }
        rp.toric_index = std::move(seen);
        rp.dim = static_cast<long long>(rp.toric_basis.size());
        break;
      }
      case ModelKind::graph: {
        for (const auto& tuple : degree_monomials(model->n, q)) {
          bool clique = true;
          for (std::size_t i = 0; i < tuple.size() && clique; ++i)
            for (std::size_t j = i + 1; j < tuple.size() && clique; ++j)
              if (tuple[i] != tuple[j] && !model->graph.adjacent(tuple[i], tuple[j]))
                clique = false;
          if (clique) {
            rp.graph_index.emplace(tuple, static_cast<int>(rp.graph_basis.size()));
            rp.graph_basis.push_back(tuple);
          }
        }
        rp.dim = static_cast<long long>(rp.graph_basis.size());
        break;
      }
      case ModelKind::pointset: {
        auto ev = pointset_evaluation_matrix(model->pointset, q);
        auto rr = rref(ev);
        auto mons = degree_monomials(model->n, q);
        for (int c : rr.pivots) rp.pivot_monomials.push_back(mons[c]);
        rp.dim = static_cast<long long>(rr.pivots.size());
        for (int c = 0; c < ev.cols(); ++c) {
          std::vector<Rational> coords(rr.pivots.size());
          for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            coords[r] = rr.reduced(static_cast<int>(r), c);
          rp.nf.emplace(mons[c], std::move(coords));
        }
        break;
      }
    }
  }

  // x_i * basis[b] in R_q expressed over the basis of R_{q+1}.
  std::vector<std::pair<int, Rational>> mult(int i, int b, int q) const {
    const RingPiece& src = piece[q];
    const RingPiece& dst = piece[q + 1];
    switch (model->kind) {
      case ModelKind::toric: {
        Key s = src.toric_basis[b];
        for (int t = 0; t < model->lattice.dim; ++t) s[t] += model->lattice.points[i][t];
        return {{dst.toric_index.at(s), Rational(1)}};
      }
      case ModelKind::graph: {
        std::vector<int> mon = src.graph_basis[b];
        mon.insert(std::lower_bound(mon.begin(), mon.end(), i), i);
        auto it = dst.graph_index.find(mon);
        if (it == dst.graph_index.end()) return {};  // support is not a clique
        return {{it->second, Rational(1)}};
      }
      case ModelKind::pointset: {
        std::vector<int> mon = src.pivot_monomials[b];
        mon.insert(std::lower_bound(mon.begin(), mon.end(), i), i);
        const auto& coords = dst.nf.at(mon);
        std::vector<std::pair<int, Rational>> out;
        for (std::size_t t = 0; t < coords.size(); ++t)
          if (coords[t] != 0) out.emplace_back(static_cast<int>(t), coords[t]);
        return out;
      }
    }
    return {};
  }

  // Multidegree of basis element b of R_q, as a Key (toric: Z^d sum;
  // graph: exponent vector in Z^{n+1}).
  Key multidegree(int b, int q) const {
    if (model->kind == ModelKind::toric) return piece[q].toric_basis[b];
    Key k(model->n + 1, 0);
    for (int idx : piece[q].graph_basis[b]) ++k[idx];
    return k;
  }

  bool has_multigrading() const { return model->kind != ModelKind::pointset; }
};

void for_each_subset(int n, int p, const std::function<void(const std::vector<int>&)>& fn) {
  if (p < 0 || p > n) return;
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  if (p == 0) {
    fn(idx);
    return;
  }
  for (;;) {
    fn(idx);
    int i = p - 1;
    while (i >= 0 && idx[i] == n - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_budget(const VarietyModel& m, const GradedRing& ring, int p, int q, long long budget) {
  const long long rows = binomial(m.n + 1, p - 1) * ring.piece[q + 1].dim;
  const long long cols = binomial(m.n + 1, p) * ring.piece[q].dim;
  if (rows > 0 && cols > 0 && rows > budget / cols)
    throw BudgetExceeded("koszul differential over entry budget at p=" + std::to_string(p) +
                         ", q=" + std::to_string(q));
}

void validate_pq(const VarietyModel& m, int p, int q) {
  if (q < 0 || q > 2)
    throw std::invalid_argument("koszul: unsupported q (R_{q+1} must be a supported graded piece)");
  if (p < 0 || p > m.n + 1) throw std::invalid_argument("koszul: p out of range");
}

// Rank of d_{p,q}, block-decomposed by multidegree when available.
long long differential_rank(const VarietyModel& m, const GradedRing& ring, int p, int q,
                            long long budget) {
  if (p <= 0 || p > m.n + 1 || q < 0 || q > 2) return 0;
  if (ring.piece[q].dim == 0) return 0;
  check_budget(m, ring, p, q, budget);

  if (!ring.has_multigrading()) {
    // Dense fallback (pointset models).
    std::vector<std::vector<int>> cod_wedges;
    std::map<std::vector<int>, int> cod_rank;
    for_each_subset(m.n + 1, p - 1, [&](const std::vector<int>& w) {
      cod_rank.emplace(w, static_cast<int>(cod_wedges.size()));
      cod_wedges.push_back(w);
    });
    const long long dimq1 = ring.piece[q + 1].dim;
    RationalMatrix d(static_cast<int>(cod_wedges.size() * dimq1),
                     static_cast<int>(binomial(m.n + 1, p) * ring.piece[q].dim));
    int col = 0;
    for_each_subset(m.n + 1, p, [&](const std::vector<int>& w) {
      for (int b = 0; b < ring.piece[q].dim; ++b, ++col) {
        for (int s = 0; s < p; ++s) {
          std::vector<int> sub = w;
          sub.erase(sub.begin() + s);
          const int wr = cod_rank.at(sub);
          const int sign = (s % 2 == 0) ? 1 : -1;
          for (auto& [b2, coeff] : ring.mult(w[s], b, q))
            d(static_cast<int>(wr * dimq1) + b2, col) += sign * coeff;
        }
      }
    });
    return rank(d);
  }

  // Group codomain elements by multidegree.
  struct Block {
    std::map<std::pair<std::vector<int>, int>, int> rows;
    std::vector<std::map<int, Rational>> cols;  // sparse columns
  };
  std::map<Key, Block> blocks;
  for_each_subset(m.n + 1, p - 1, [&](const std::vector<int>& w) {
    for (long long b = 0; b < ring.piece[q + 1].dim; ++b) {
      Key key = ring.multidegree(static_cast<int>(b), q + 1);
      if (m.kind == ModelKind::toric) {
        for (int i : w)
          for (int t = 0; t < m.lattice.dim; ++t) key[t] += m.lattice.points[i][t];
      } else {
        for (int i : w) ++key[i];
      }
      auto& blk = blocks[key];
      blk.rows.emplace(std::make_pair(w, static_cast<int>(b)),
                       static_cast<int>(blk.rows.size()));
    }
  });
  for_each_subset(m.n + 1, p, [&](const std::vector<int>& w) {
    for (int b = 0; b < ring.piece[q].dim; ++b) {
      Key key = ring.multidegree(b, q);
      if (m.kind == ModelKind::toric) {
        for (int i : w)
          for (int t = 0; t < m.lattice.dim; ++t) key[t] += m.lattice.points[i][t];
      } else {
        for (int i : w) ++key[i];
      }
      auto it = blocks.find(key);
      if (it == blocks.end()) continue;  // entire column is zero
      std::map<int, Rational> column;
      for (int s = 0; s < p; ++s) {
        std::vector<int> sub = w;
        sub.erase(sub.begin() + s);
        const int sign = (s % 2 == 0) ? 1 : -1;
        for (auto& [b2, coeff] : ring.mult(w[s], b, q)) {
          const int row = it->second.rows.at({sub, b2});
          column[row] += sign * coeff;
        }
      }
      it->second.cols.push_back(std::move(column));
    }
  });

  long long total = 0;
  for (auto& [key, blk] : blocks) {
    if (blk.cols.empty()) continue;
    RationalMatrix a(static_cast<int>(blk.rows.size()), static_cast<int>(blk.cols.size()));
    for (int c = 0; c < a.cols(); ++c)
      for (auto& [r, v] : blk.cols[c]) a(r, c) = v;
    total += rank(a);
  }
  return total;
}

}  // namespace

RationalMatrix koszul_differential(const VarietyModel& m, int p, int q, long long budget) {
  validate_pq(m, p, q);
  GradedRing ring(m);
  const long long dimq = ring.piece[q].dim;
  const long long dimq1 = ring.piece[q + 1].dim;
  if (p == 0)  // maps into wedge^{-1} = 0
    return RationalMatrix(0, static_cast<int>(dimq));
  check_budget(m, ring, p, q, budget);

  std::vector<std::vector<int>> cod_wedges;
  std::map<std::vector<int>, int> cod_rank;
  for_each_subset(m.n + 1, p - 1, [&](const std::vector<int>& w) {
    cod_rank.emplace(w, static_cast<int>(cod_wedges.size()));
    cod_wedges.push_back(w);
  });
  RationalMatrix d(static_cast<int>(cod_wedges.size() * dimq1),
                   static_cast<int>(binomial(m.n + 1, p) * dimq));
  int col = 0;
  for_each_subset(m.n + 1, p, [&](const std::vector<int>& w) {
    for (int b = 0; b < dimq; ++b, ++col) {
      for (int s = 0; s < p; ++s) {
        std::vector<int> sub = w;
        sub.erase(sub.begin() + s);
        const int wr = cod_rank.at(sub);
        const int sign = (s % 2 == 0) ? 1 : -1;
        for (auto& [b2, coeff] : ring.mult(w[s], b, q))
          d(static_cast<int>(wr * dimq1) + b2, col) += sign * coeff;
      }
    }
  });
  return d;
}

long long koszul_dim(const VarietyModel& m, int p, int q, long long budget) {
  validate_pq(m, p, q);
  GradedRing ring(m);
  const long long domain = binomial(m.n + 1, p) * ring.piece[q].dim;
  const long long r1 = differential_rank(m, ring, p, q, budget);
  const long long r2 = (q >= 1) ? differential_rank(m, ring, p + 1, q - 1, budget) : 0;
  return (domain - r1) - r2;
}

LinearStrand linear_strand(const VarietyModel& m, int p_max, long long budget) {
  if (p_max < 1 || p_max > m.n) throw std::invalid_argument("linear_strand: need 1 <= p_max <= n");
  if (m.degenerate())
    throw std::invalid_argument("linear_strand: model is degenerate (I_X contains linear forms)");

  GradedRing ring(m);
  LinearStrand out;
  out.p_max = p_max;

  bool k1_stopped = false;
  for (int p = 1; p <= p_max && !k1_stopped; ++p) {
    try {
      const long long domain = binomial(m.n + 1, p) * ring.piece[1].dim;
      const long long r1 = differential_rank(m, ring, p, 1, budget);
      const long long r2 = differential_rank(m, ring, p + 1, 0, budget);
      out.k_p1.push_back((domain - r1) - r2);
    } catch (const BudgetExceeded&) {
      out.truncated = true;
      k1_stopped = true;
    }
  }
  out.ell = 0;
  for (std::size_t i = 0; i < out.k_p1.size(); ++i)
    if (out.k_p1[i] != 0) out.ell = static_cast<int>(i) + 1;
  // Exact when the strand visibly terminated (the linear strand is
  // generated by the quadrics, so it cannot revive after a zero) or when
  // it was followed all the way to p = n.
  const bool k1_terminated = !out.k_p1.empty() && out.k_p1.back() == 0;
  out.ell_exact = k1_terminated || (!k1_stopped && p_max == m.n);

  bool gl_pinned = false;
  for (int p = 0; p <= p_max; ++p) {
    try {
      const long long domain = binomial(m.n + 1, p) * ring.piece[2].dim;
      const long long r1 = differential_rank(m, ring, p, 2, budget);
      const long long r2 = differential_rank(m, ring, p + 1, 1, budget);
      const long long v = (domain - r1) - r2;
      out.k_p2.push_back(v);
      if (v != 0) {
        out.gl_index = p - 1;
        out.gl_exact = true;
        gl_pinned = true;
        break;
      }
    } catch (const BudgetExceeded&) {
      out.truncated = true;
      break;
    }
  }
  if (!gl_pinned) {
    const int reached = static_cast<int>(out.k_p2.size()) - 1;  // all-zero through `reached`
    if (reached == m.n) {
      out.gl_index = std::nullopt;  // 2-regular
      out.gl_exact = true;
    } else {
      out.gl_index = std::max(reached, 0);  // certified lower bound only
      out.gl_exact = false;
    }
  }
  return out;
}

}  // namespace qpkit
