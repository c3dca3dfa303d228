#include "qpkit/projection.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpkit/monomials.hpp"

namespace qpkit {

namespace {

// Rows of gradient conditions for one point, restricted to the span of
// `generators` (each a coefficient vector over the quadric basis of the
// model). Column s is the gradient of sum_b generators[s][b] f_b at p.
RationalMatrix gradient_conditions(const VarietyModel& m,
                                   const std::vector<std::vector<Rational>>& generators,
                                   const ProjectivePoint& p) {
  const int cols = static_cast<int>(generators.size());
  RationalMatrix c(m.n + 1, cols);
  for (int s = 0; s < cols; ++s) {
    // gradient of the combined quadric; combine basis gradients lazily
    std::vector<Rational> combined(quad_count(m.n), Rational(0));
    for (int b = 0; b < m.quadrics.dim(); ++b) {
      const Rational& w = generators[s][b];
      if (w == 0) continue;
      const auto& basis = m.quadrics.basis[b];
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (basis[t] != 0) combined[t] += w * basis[t];
    }
    auto grad = quadric_gradient(m.n, combined, p);
    for (int i = 0; i <= m.n; ++i) c(i, s) = std::move(grad[i]);
  }
  return c;
}

std::vector<std::vector<Rational>> identity_generators(int dim) {
  std::vector<std::vector<Rational>> gen(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i) gen[i][i] = 1;
  return gen;
}

// One incremental step: restrict the current kernel by the gradient
// conditions of a new point. Returns the new kernel generators.
std::vector<std::vector<Rational>> restrict_kernel(
    const VarietyModel& m, const std::vector<std::vector<Rational>>& generators,
    const ProjectivePoint& p) {
  auto cond = gradient_conditions(m, generators, p);
  auto ker = kernel_basis(cond);
  std::vector<std::vector<Rational>> next;
  next.reserve(ker.size());
  for (const auto& w : ker) {
    std::vector<Rational> combo(m.quadrics.dim(), Rational(0));
    for (std::size_t s = 0; s < generators.size(); ++s) {
      if (w[s] == 0) continue;
      for (int b = 0; b < m.quadrics.dim(); ++b)
        if (generators[s][b] != 0) combo[b] += w[s] * generators[s][b];
    }
    next.push_back(std::move(combo));
  }
  return next;
}

std::vector<long long> kappa_chain_one_trial(const VarietyModel& m, Rng& rng) {
  std::vector<long long> seq{m.quadrics.dim()};
  auto gen = identity_generators(m.quadrics.dim());
  const int cap = m.n + 2;  // generic chains stop at codim steps
  int steps = 0;
  while (seq.back() > 0) {
    if (++steps > cap)
      throw std::runtime_error("kappa chain failed to reach 0; try another seed");
    auto p = sample_point(m, rng);
    gen = restrict_kernel(m, gen, p);
    seq.push_back(static_cast<long long>(gen.size()));
  }
  return seq;
}

}  // namespace

bool KappaSequence::strictly_decreasing() const {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] >= values[i - 1]) return false;
  return true;
}

bool KappaSequence::strictly_convex() const {
  auto at = [&](int j) { return j < static_cast<int>(values.size()) ? values[j] : 0; };
  for (int j = 1; j <= qp(); ++j)
    if (2 * at(j) >= at(j - 1) + at(j + 1)) return false;
  return true;
}

long long kappa_at(const VarietyModel& m, const PointList& gamma) {
  for (const auto& p : gamma) require_on_variety(m, p);
  if (gamma.empty()) return m.quadrics.dim();
  const int dim = m.quadrics.dim();
  RationalMatrix cond(static_cast<int>(gamma.size()) * (m.n + 1), dim);
  auto gens = identity_generators(dim);
  int row = 0;
  for (const auto& p : gamma) {
    auto block = gradient_conditions(m, gens, p);
    for (int i = 0; i <= m.n; ++i, ++row)
      for (int s = 0; s < dim; ++s) cond(row, s) = block(i, s);
  }
  return nullity(cond);
}

KappaSequence kappa_sequence(const VarietyModel& m, int trials, std::uint64_t seed) {
  if (!m.irreducible)
    throw std::invalid_argument(
        "kappa_sequence requires an irreducible model; use qp_upper_search");
  if (m.degenerate())
    throw std::invalid_argument(
        "kappa_sequence requires a non-degenerate model: a square of a vanishing "
        "linear form stays singular under every projection");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  std::vector<std::vector<long long>> all;
  std::size_t longest = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
    all.push_back(kappa_chain_one_trial(m, rng));
    longest = std::max(longest, all.back().size());
  }
  KappaSequence out;
  out.trials = trials;
  out.seed = seed;
  for (std::size_t j = 0; j < longest; ++j) {
    long long mn = all[0].size() > j ? all[0][j] : 0;
    for (const auto& s : all) mn = std::min(mn, j < s.size() ? s[j] : 0);
    if (!out.values.empty() && out.values.back() == 0) break;
    out.values.push_back(mn);
  }
  for (const auto& s : all)
    if (s != std::vector<long long>(out.values)) out.agreement = false;
  return out;
}

int quadratic_persistence(const VarietyModel& m, int trials, std::uint64_t seed) {
  return kappa_sequence(m, trials, seed).qp();
}

namespace {

PointList coordinate_point_candidates(const VarietyModel& m) {
  PointList out;
  auto unit = [&](int i) {
    ProjectivePoint p(m.n + 1, Rational(0));
    p[i] = 1;
    return p;
  };
  if (m.kind == ModelKind::graph) {
    for (int i = 0; i <= m.n; ++i) out.push_back(unit(i));
  } else if (m.kind == ModelKind::toric) {
    // Only the torus-fixed points of polytope vertices lie on X.
    for (int i : hull_vertices(m.lattice)) out.push_back(unit(i));
  }
  return out;
}

PointList search_candidates(const VarietyModel& m, int trials, std::uint64_t seed) {
  if (m.kind == ModelKind::pointset) return m.pointset.points;
  PointList out = coordinate_point_candidates(m);
  Rng rng(Rng::derive(seed, 0x5eedull));
  if (m.kind == ModelKind::graph) {
    auto cliques = maximal_cliques(m.graph);
    for (int t = 0; t < trials; ++t)
      for (const auto& clique : cliques) {
        ProjectivePoint p(m.n + 1, Rational(0));
        for (int v : clique) p[v] = Rational(rng.nonzero(50));
        out.push_back(std::move(p));
      }
  } else {
    for (int t = 0; t < trials * (m.codim() + 2); ++t) out.push_back(sample_point(m, rng));
  }
  return out;
}

}  // namespace

namespace {

// Depth-first enumeration of size-`target` candidate subsets, restricting
// the quadric kernel one point at a time so shared prefixes share work.
// Candidates arrive sorted by standalone drop rank (descending), so the
// suffix prefix-sums bound the total drop any completion can achieve.
struct SubsetSearcher {
  const VarietyModel& m;
  const PointList& candidates;
  const std::vector<long long>& drop_prefix;  // drop_prefix[i] = sum of drops of 0..i-1
  int target;
  UpperSearchResult* res;

  long long best_drop(int start, int count) const {
    // Largest achievable drop from picking `count` candidates at >= start.
    const int nc = static_cast<int>(candidates.size());
    const int end = std::min(start + count, nc);
    return drop_prefix[end] - drop_prefix[start];
  }

  bool run(int start, int depth, const std::vector<std::vector<Rational>>& gen,
           std::vector<int>& picked) {
    if (depth == target) {
      ++res->combinations_tried;
      if (gen.empty()) {
        for (int i : picked) res->witness.push_back(candidates[i]);
        return true;
      }
      return false;
    }
    const int nc = static_cast<int>(candidates.size());
    const int remaining = target - depth;
    for (int i = start; i <= nc - remaining; ++i) {
      if (static_cast<long long>(gen.size()) > best_drop(i, remaining)) break;
      auto restricted = restrict_kernel(m, gen, candidates[i]);
      if (static_cast<long long>(restricted.size()) > best_drop(i + 1, remaining - 1)) continue;
      picked.push_back(i);
      if (run(i + 1, depth + 1, restricted, picked)) return true;
      picked.pop_back();
    }
    return false;
  }
};

struct RankedCandidates {
  PointList points;                    // sorted by standalone drop, descending
  std::vector<long long> drop_prefix;  // prefix sums of standalone drops
};

RankedCandidates rank_candidates(const VarietyModel& m, PointList candidates) {
  const auto initial = identity_generators(m.quadrics.dim());
  std::vector<std::pair<long long, int>> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    auto restricted = restrict_kernel(m, initial, candidates[i]);
    order.emplace_back(m.quadrics.dim() - static_cast<long long>(restricted.size()),
                       static_cast<int>(i));
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  RankedCandidates rc;
  rc.drop_prefix.push_back(0);
  for (const auto& [drop, idx] : order) {
    rc.points.push_back(std::move(candidates[idx]));
    rc.drop_prefix.push_back(rc.drop_prefix.back() + drop);
  }
  return rc;
}

// Greedy chain over the candidate pool; returns the picked points when
// kappa reaches 0 within max_size, empty otherwise.
PointList greedy_witness(const VarietyModel& m, const PointList& candidates, int max_size) {
  auto gen = identity_generators(m.quadrics.dim());
  std::vector<bool> used(candidates.size(), false);
  PointList picked;
  while (static_cast<int>(picked.size()) < max_size && !gen.empty()) {
    int best = -1;
    std::vector<std::vector<Rational>> best_gen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      auto g2 = restrict_kernel(m, gen, candidates[i]);
      if (best < 0 || g2.size() < best_gen.size()) {
        best = static_cast<int>(i);
        best_gen = std::move(g2);
      }
    }
    if (best < 0) break;
    used[best] = true;
    picked.push_back(candidates[best]);
    gen = std::move(best_gen);
  }
  if (!gen.empty()) picked.clear();
  return picked;
}

}  // namespace

UpperSearchResult qp_upper_search(const VarietyModel& m, int max_size, int trials,
                                  std::uint64_t seed) {
  if (max_size < 0) throw std::invalid_argument("max_size must be >= 0");
  UpperSearchResult res;
  if (m.quadrics.dim() == 0) {
    res.found = true;
    res.k = 0;
    res.exhaustive_below = true;
    return res;
  }
  PointList pool = search_candidates(m, trials, seed);
  for (const auto& p : pool) require_on_variety(m, p);
  auto ranked = rank_candidates(m, std::move(pool));
  const int nc = static_cast<int>(ranked.points.size());
  const auto initial = identity_generators(m.quadrics.dim());

  // Greedy probe caps the exhaustive certification below its size.
  PointList greedy = greedy_witness(m, ranked.points, max_size);
  const int limit = greedy.empty() ? max_size : static_cast<int>(greedy.size()) - 1;

  for (int size = 1; size <= limit && size <= nc; ++size) {
    SubsetSearcher searcher{m, ranked.points, ranked.drop_prefix, size, &res};
    std::vector<int> picked;
    if (searcher.run(0, 0, initial, picked)) {
      res.found = true;
      res.k = static_cast<int>(res.witness.size());
      res.exhaustive_below = true;
      return res;
    }
  }
  if (!greedy.empty()) {
    res.found = true;
    res.k = static_cast<int>(greedy.size());
    res.witness = std::move(greedy);
    res.exhaustive_below = true;
    return res;
  }
  return res;  // inconclusive within max_size
}

UpperSearchResult qp_greedy_upper(const VarietyModel& m, int max_size, int trials,
                                  std::uint64_t seed) {
  UpperSearchResult res;
  if (m.quadrics.dim() == 0) {
    res.found = true;
    res.k = 0;
    res.exhaustive_below = true;
    return res;
  }
  PointList pool = search_candidates(m, trials, seed);
  for (const auto& p : pool) require_on_variety(m, p);
  PointList greedy = greedy_witness(m, pool, max_size);
  if (!greedy.empty()) {
    res.found = true;
    res.k = static_cast<int>(greedy.size());
    res.witness = std::move(greedy);
  }
  return res;
}

long long kappa_oracle(const VarietyModel& m, const PointList& gamma, int nsamples, Rng& rng) {
  for (const auto& p : gamma) require_on_variety(m, p);
  const int k = static_cast<int>(gamma.size());

  // Linear forms vanishing on Span(gamma): kernel of the coordinate
  // evaluation matrix at gamma.
  std::vector<std::vector<Rational>> forms;
  if (k == 0) {
    for (int i = 0; i <= m.n; ++i) {
      std::vector<Rational> e(m.n + 1, Rational(0));
      e[i] = 1;
      forms.push_back(std::move(e));
    }
  } else {
    RationalMatrix ev(k, m.n + 1);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c <= m.n; ++c) ev(r, c) = gamma[r][c];
    if (rank(ev) != k)
      throw std::invalid_argument("kappa_oracle: gamma does not span the expected dimension");
    forms = kernel_basis(ev);
  }
  const int nf = static_cast<int>(forms.size());

  // Evaluate all products l_i l_j at sampled points of X; the nullity of
  // that matrix estimates dim (I_{pi_gamma(X)})_2.
  const int ncols = nf * (nf + 1) / 2;
  RationalMatrix ev(nsamples, ncols);
  for (int s = 0; s < nsamples; ++s) {
    auto p = sample_point(m, rng);
    std::vector<Rational> lv(nf);
    for (int i = 0; i < nf; ++i) {
      Rational v = 0;
      for (int c = 0; c <= m.n; ++c)
        if (forms[i][c] != 0) v += forms[i][c] * p[c];
      lv[i] = std::move(v);
    }
    int col = 0;
    for (int i = 0; i < nf; ++i)
      for (int j = i; j < nf; ++j, ++col) ev(s, col) = lv[i] * lv[j];
  }
  return nullity(ev);
}

}  // namespace qpkit
