#pragma once

#include <optional>
#include <vector>

#include "qpkit/models.hpp"

namespace qpkit {

// Linear strand of the Betti table: K_{p,1} and K_{p,2} dimensions, the
// strand length ell(X), and the Green-Lazarsfeld index.
struct LinearStrand {
  std::vector<long long> k_p1;       // p = 1 .. (as computed, <= p_max)
  std::vector<long long> k_p2;       // p = 0 .. (as computed, <= p_max)
  int ell = 0;
  bool ell_exact = true;             // false: lower bound (truncated strand)
  std::optional<int> gl_index;       // nullopt = infinity (2-regular)
  bool gl_exact = true;              // false: lower bound p_reached - 1
  bool truncated = false;            // some (p,q) refused by the budget
  int p_max = 0;
};

inline constexpr long long kDefaultEntryBudget = 50'000'000;

// Thrown when a differential would exceed the entry budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix of d : wedge^p V (x) R_q -> wedge^{p-1} V (x) R_{q+1} in lex
// wedge bases, d(e_{i_1..i_p} (x) r) = sum_s (-1)^s e_{..i_s^..} (x) x_{i_s} r.
// Supported q: 0, 1, 2 (R_{q+1} must exist; higher q fails its own
// precondition since hilbert_dim stops at 3).
RationalMatrix koszul_differential(const VarietyModel& m, int p, int q,
                                   long long budget = kDefaultEntryBudget);

// dim K_{p,q} = dim ker d_{p,q} - rank d_{p+1,q-1}. Toric and graph
// models decompose into multidegree blocks; pointset models go dense.
long long koszul_dim(const VarietyModel& m, int p, int q,
                     long long budget = kDefaultEntryBudget);

// Fills K_{p,1} for p = 1..p_max and K_{p,2} for p = 0..p_max (stopping
// early once the Green-Lazarsfeld index is pinned by a nonzero K_{p,2}).
LinearStrand linear_strand(const VarietyModel& m, int p_max,
                           long long budget = kDefaultEntryBudget);

}  // namespace qpkit
