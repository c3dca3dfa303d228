#include "qpkit/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpkit/monomials.hpp"

namespace qpkit {

long long convex_bound(long long dim_r2) {
  if (dim_r2 < 1) throw std::invalid_argument("convex_bound needs dim R_2 >= 1");
  long long r = 0;
  while ((r + 1) * (r + 2) / 2 < dim_r2) ++r;
  return r;
}

long long gl_bound(int n, std::optional<long long> gl_index, int codim) {
  long long g = gl_index ? *gl_index : codim;  // infinity collapses to codim
  return n + 1 - std::min<long long>(g, codim);
}

long long scroll_bound(const VarietyModel& m) {
  switch (m.kind) {
    case ModelKind::toric:
      return min_line_cover(m.lattice).lines + 1;
    case ModelKind::graph:
      return treewidth(m.graph) + 1;
    case ModelKind::pointset:
      throw std::invalid_argument("scroll_bound is not applicable to pointset models");
  }
  throw std::logic_error("unreachable");
}

long long qp_lower_bound(int n, int qp) { return n + 1 - qp; }

long long quadratic_deficiency(int codim, long long dim_i2) {
  long long eps = binomial(codim + 1, 2) - dim_i2;
  if (eps < 0)
    throw std::runtime_error(
        "negative quadratic deficiency: dim (I_X)_2 exceeds C(codim+1,2), "
        "the model construction is inconsistent");
  return eps;
}

std::optional<PrismInvariants> prism_invariants(const LatticeConfig& a, int k) {
  const int d = a.affine_dim();
  if (d < 2) throw std::invalid_argument("prism_invariants: dim conv(A) must be >= 2");
  const long long npts = static_cast<long long>(a.points.size());
  const long long threshold = (npts + d - 2) / (d - 1) - 1;  // ceil(|A|/(d-1)) - 1
  if (k < threshold) return std::nullopt;
  return PrismInvariants{k * npts - 1, npts + 1, k * npts - 1};
}

namespace {

// Detects A = B x {0..k} along a coordinate axis with dim conv(B) >= 2;
// used to fire the prism formula inside reports.
struct PrismShape {
  LatticeConfig base;
  int k;
};

std::vector<PrismShape> detect_axis_prisms(const LatticeConfig& a) {
  std::vector<PrismShape> shapes;
  if (a.dim < 3) return shapes;  // base must have dimension >= 2
  for (int axis = 0; axis < a.dim; ++axis) {
    long long lo = a.points[0][axis], hi = lo;
    for (const auto& p : a.points) {
      lo = std::min(lo, p[axis]);
      hi = std::max(hi, p[axis]);
    }
    if (hi == lo) continue;
    std::vector<std::vector<long long>> base_pts;
    for (const auto& p : a.points)
      if (p[axis] == lo) {
        auto q = p;
        q.erase(q.begin() + axis);
        base_pts.push_back(std::move(q));
      }
    std::sort(base_pts.begin(), base_pts.end());
    if (static_cast<long long>(base_pts.size()) * (hi - lo + 1) !=
        static_cast<long long>(a.points.size()))
      continue;
    bool layered = true;
    for (long long h = lo; h <= hi && layered; ++h) {
      std::vector<std::vector<long long>> layer;
      for (const auto& p : a.points)
        if (p[axis] == h) {
          auto q = p;
          q.erase(q.begin() + axis);
          layer.push_back(std::move(q));
        }
      std::sort(layer.begin(), layer.end());
      layered = layer == base_pts;
    }
    if (!layered) continue;
    LatticeConfig base = LatticeConfig::make(a.dim - 1, base_pts);
    if (base.affine_dim() < 2) continue;
    shapes.push_back(PrismShape{std::move(base), static_cast<int>(hi - lo)});
  }
  return shapes;
}

void add_upper(PyBoundsReport& r, long long value, const std::string& provenance) {
  r.uppers.push_back(UpperBound{value, provenance});
}

}  // namespace

void classify_extremal(const VarietyModel& m, PyBoundsReport& report, bool acm) {
  // The equivalences below hold for non-degenerate irreducible models;
  // graph varieties (reducible unless complete) are skipped.
  if (!m.irreducible || m.kind != ModelKind::toric) {
    if (m.irreducible && report.qp_value && report.ell && report.ell_exact &&
        *report.qp_value < *report.ell)
      throw std::runtime_error(
          "contradiction: persistence bounds strand length (qp >= ell) violated");
    return;
  }
  if (!report.qp_value) return;
  const long long qp = *report.qp_value;
  const long long codim = report.codim;

  const bool eps_zero = report.eps == 0;
  const bool qp_max = qp == codim;
  if (eps_zero != qp_max)
    throw std::runtime_error(
        "contradiction: minimal-degree characterization (eps = 0 iff qp = codim) violated");
  if (report.degree) {
    const bool min_deg = *report.degree == 1 + codim;
    if (eps_zero != min_deg)
      throw std::runtime_error(
          "contradiction: minimal-degree characterization (deg = 1 + codim iff eps = 0) violated");
  }
  if (eps_zero) {
    report.certificates.push_back(
        "minimal degree: eps = 0, qp = codim, deg = 1 + codim; py = dim + 1 exactly");
    report.py_exact = report.dim_x + 1;
  } else if (report.eps == 1 || report.eps == 2) {
    if (qp != codim - 1)
      throw std::runtime_error(
          "contradiction: almost-maximal persistence (eps in {1,2} forces qp = codim - 1) "
          "violated");
    report.certificates.push_back("almost-maximal persistence: eps in {1,2} and qp = codim - 1");
    if (acm) {
      report.certificates.push_back(
          "ACM flag supplied: qp = codim - 1 pins py = dim + 2 exactly");
      report.py_exact = report.dim_x + 2;
    }
  }
  if (report.ell && report.ell_exact) {
    if (qp < *report.ell)
      throw std::runtime_error(
          "contradiction: persistence bounds strand length (qp >= ell) violated");
    report.certificates.push_back("persistence bounds strand length: qp >= ell verified");
  }
}

PyBoundsReport full_report(const VarietyModel& m, const ReportConfig& config) {
  if (m.degenerate())
    throw std::invalid_argument(
        "bounds require a non-degenerate model (the points must span the ambient space)");
  PyBoundsReport r;
  r.n = m.n;
  r.dim_x = m.dim_x;
  r.codim = m.codim();
  r.dim_i2 = m.quadrics.dim();
  r.dim_r2 = hilbert_dim(m, 2);
  r.eps = quadratic_deficiency(r.codim, r.dim_i2);

  // Quadratic persistence.
  if (m.irreducible) {
    auto seq = kappa_sequence(m, config.trials, config.seed);
    r.kappa = seq.values;
    r.kappa_agreement = seq.agreement;
    r.qp_value = seq.qp();
    if (!seq.agreement)
      r.warnings.push_back("kappa trials disagreed; the entrywise minimum is reported");
  } else if (config.max_gamma == 0) {
    r.warnings.push_back("qp witness search disabled (max_gamma 0)");
  } else if (m.kind == ModelKind::pointset) {
    int cap = config.max_gamma > 0 ? config.max_gamma
                                   : static_cast<int>(m.pointset.points.size());
    auto search = qp_upper_search(m, cap, config.trials, config.seed);
    if (search.found) {
      r.qp_value = search.k;  // exhaustive over subsets: exact
    } else {
      r.warnings.push_back("pointset qp search inconclusive within max_gamma");
    }
  } else {
    // Greedy witness only; the minimality sweep is left to the qp command.
    int cap = config.max_gamma > 0 ? config.max_gamma : m.n + 1;
    auto search = qp_greedy_upper(m, cap, config.trials, config.seed);
    if (search.found) {
      r.qp_upper = search.k;
    } else {
      r.warnings.push_back("graph qp upper search inconclusive within max_gamma " +
                           std::to_string(cap));
    }
  }

  // Linear strand.
  const int p_max = config.p_max > 0 ? std::min(config.p_max, m.n) : m.n;
  {
    auto strand = linear_strand(m, p_max, config.budget);
    r.ell = strand.ell;
    r.ell_exact = strand.ell_exact;
    r.gl_known = true;
    r.gl_infinite = !strand.gl_index.has_value();
    if (strand.gl_index) r.gl_index = *strand.gl_index;
    r.gl_exact = strand.gl_exact;
    r.strand_truncated = strand.truncated;
    if (strand.truncated)
      r.warnings.push_back("linear strand truncated by the matrix entry budget");
  }

  // Degree.
  if (m.kind == ModelKind::toric) {
    r.degree = normalized_volume(m.lattice).get_si();
    r.assumptions.push_back(
        "degree taken as the normalized volume (exact for normal configurations)");
  } else if (m.kind == ModelKind::pointset) {
    r.degree = static_cast<long long>(m.pointset.points.size());
  }

  // Lower bound.
  if (r.qp_value && (m.irreducible || m.kind == ModelKind::pointset)) {
    r.lower = qp_lower_bound(m.n, *r.qp_value);
    r.lower_provenance = "n + 1 - qp";
    r.lower_certified = true;
    if (m.kind != ModelKind::pointset)
      r.assumptions.push_back(
          "totally-real hypothesis holds (rational points are dense by construction)");
  } else if (m.kind == ModelKind::graph) {
    const int omega = m.dim_x + 1;
    r.lower = omega;
    r.lower_provenance = "component-inclusion (py of a coordinate subspace)";
    r.lower_certified = true;
    if (r.qp_upper)
      r.warnings.push_back("advisory only: n + 1 - qp_upper = " +
                           std::to_string(m.n + 1 - *r.qp_upper) +
                           " is not a certified lower bound for reducible models");
  }

  // Upper bounds.
  add_upper(r, convex_bound(r.dim_r2), "convex");
  if (r.gl_known) {
    std::optional<long long> g;
    if (!r.gl_infinite) g = *r.gl_index;
    // A truncated strand still yields a valid bound: the certified lower
    // bound on the index only weakens n + 1 - min{g, codim}.
    add_upper(r, gl_bound(m.n, g, r.codim), "green-lazarsfeld");
  }
  if (m.kind == ModelKind::toric) {
    add_upper(r, scroll_bound(m), "scroll/line-cover");
  } else if (m.kind == ModelKind::graph) {
    if (m.graph.vertex_count <= 20) {
      add_upper(r, scroll_bound(m), "treewidth");
    } else {
      add_upper(r, treewidth_upper_bound(m.graph) + 1, "treewidth");
      r.warnings.push_back("treewidth over the exact cap; min-degree heuristic upper bound used");
    }
  }
  if (m.kind == ModelKind::toric) {
    for (const auto& shape : detect_axis_prisms(m.lattice)) {
      auto inv = prism_invariants(shape.base, shape.k);
      if (!inv) continue;
      add_upper(r, inv->py, "prism-formula");
      r.certificates.push_back("tall prism: qp = ell = k|A|-1 = " + std::to_string(inv->qp) +
                               ", py = |A|+1 = " + std::to_string(inv->py));
      r.py_exact = inv->py;
      if (r.qp_value && *r.qp_value != inv->qp)
        throw std::runtime_error("contradiction: tall-prism persistence formula violated");
      if (r.ell && r.ell_exact && *r.ell != inv->ell)
        throw std::runtime_error("contradiction: tall-prism strand formula violated");
      break;
    }
    if (m.dim_x == 2) {
      // Advisory only: boundary-point predictor for the index of toric
      // surfaces; it disagrees with 2-regular surfaces, so it never
      // participates in bounds or certificates.
      long long b = boundary_point_count(m.lattice);
      r.assumptions.push_back("advisory toric-surface predictor: index ~ boundary points - 3 = " +
                              std::to_string(b - 3));
    }
  }

  classify_extremal(m, r, config.acm);
  if (config.acm) r.assumptions.push_back("arithmetically Cohen-Macaulay flag supplied by user");

  // Interval.
  long long hi = r.uppers.front().value;
  for (const auto& u : r.uppers) hi = std::min(hi, u.value);
  if (r.py_exact) {
    r.interval_lo = *r.py_exact;
    r.interval_hi = *r.py_exact;
    if (*r.py_exact > hi)
      throw std::runtime_error("contradiction: certified py exceeds a certified upper bound");
  } else {
    r.interval_lo = r.lower;
    r.interval_hi = hi;
    if (r.lower && r.lower_certified && (m.irreducible || m.kind == ModelKind::pointset) &&
        *r.lower > hi)
      throw std::runtime_error("contradiction: certified lower bound exceeds an upper bound");
  }
  return r;
}

}  // namespace qpkit
