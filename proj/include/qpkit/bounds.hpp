#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpkit/koszul.hpp"
#include "qpkit/models.hpp"
#include "qpkit/projection.hpp"

namespace qpkit {

struct UpperBound {
  long long value;
  std::string provenance;  // convex | green-lazarsfeld | scroll/line-cover | treewidth | prism-formula
};

struct PyBoundsReport {
  int n = 0, dim_x = 0, codim = 0;
  long long dim_i2 = 0, dim_r2 = 0, eps = 0;

  std::optional<int> qp_value;           // exact (irreducible / exhaustive pointset)
  std::optional<int> qp_upper;           // certified upper bound only (graph search)
  std::vector<long long> kappa;          // generic kappa chain when available
  bool kappa_agreement = true;

  std::optional<int> ell;
  bool ell_exact = true;
  std::optional<int> gl_index;           // engaged only when gl_known
  bool gl_infinite = false;
  bool gl_known = false;
  bool gl_exact = true;
  bool strand_truncated = false;

  std::optional<long long> degree;       // toric: normalized volume; pointset: |X|

  std::optional<long long> lower;
  std::string lower_provenance;
  bool lower_certified = false;
  std::vector<UpperBound> uppers;
  std::vector<std::string> certificates;
  std::optional<long long> py_exact;

  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  std::optional<long long> interval_lo, interval_hi;
};

// Largest r >= 0 with C(r+1,2) < dim_R2.
long long convex_bound(long long dim_r2);

// n + 1 - min{g, codim}; nullopt encodes g = infinity.
long long gl_bound(int n, std::optional<long long> gl_index, int codim);

// Toric: minimal line cover + 1. Graph: treewidth + 1. Throws for
// pointset models (not applicable) and for graphs over the exact cap.
long long scroll_bound(const VarietyModel& m);

long long qp_lower_bound(int n, int qp);

// C(codim+1,2) - dim_I2; throws on a negative result (inconsistency).
long long quadratic_deficiency(int codim, long long dim_i2);

struct PrismInvariants {
  long long qp, py, ell;
};

// Formula values (k|A|-1, |A|+1, k|A|-1) for the prism A x [0,k]; nullopt
// when k is below the validity threshold ceil(|A|/(dim-1)) - 1. Throws
// when conv(A) has dimension < 2.
std::optional<PrismInvariants> prism_invariants(const LatticeConfig& a, int k);

struct ReportConfig {
  int trials = 3;
  std::uint64_t seed = 42;
  bool acm = false;           // user-supplied arithmetically Cohen-Macaulay flag
  int max_gamma = -1;         // graph/pointset witness search cap (-1: default)
  long long budget = kDefaultEntryBudget;
  int p_max = -1;             // strand depth (-1: n)
};

// Fires the extremal classifications on a report in progress; appends
// certificate lines, pins py when a classification applies, and throws
// (naming the violated statement) if computed values contradict one.
void classify_extremal(const VarietyModel& m, PyBoundsReport& report, bool acm);

PyBoundsReport full_report(const VarietyModel& m, const ReportConfig& config);

}  // namespace qpkit
