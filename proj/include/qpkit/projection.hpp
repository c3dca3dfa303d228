#pragma once

#include <cstdint>
#include <vector>

#include "qpkit/models.hpp"

namespace qpkit {

using ProjectivePoint = std::vector<Rational>;
using PointList = std::vector<ProjectivePoint>;

// kappa_j values down to 0, plus sampling metadata.
struct KappaSequence {
  std::vector<long long> values;  // values.front() = dim (I_X)_2, back() = 0
  int trials = 0;
  std::uint64_t seed = 0;
  bool agreement = true;  // every trial produced the minimum sequence

  int qp() const { return static_cast<int>(values.size()) - 1; }
  bool strictly_decreasing() const;
  // 2 k_j < k_{j-1} + k_{j+1} for 0 < j <= qp, padding with 0 past the end.
  bool strictly_convex() const;
};

// dim of the quadrics in (I_X)_2 singular at every point of gamma, i.e.
// the nullity of the gradient-condition matrix. Points are checked to lie
// on X exactly.
long long kappa_at(const VarietyModel& m, const PointList& gamma);

// Generic kappa chain: per trial, sample points until kappa hits 0; the
// result is the entrywise minimum over trials.
KappaSequence kappa_sequence(const VarietyModel& m, int trials, std::uint64_t seed);

// |kappa_sequence| - 1; irreducible models only.
int quadratic_persistence(const VarietyModel& m, int trials, std::uint64_t seed);

struct UpperSearchResult {
  bool found = false;
  int k = 0;
  PointList witness;
  // True when every candidate set of size < k was tried. For pointset
  // models the candidates are all subsets of the configuration, so the
  // result is exact; for graph/toric models it is a best-effort flag.
  bool exhaustive_below = false;
  long long combinations_tried = 0;
};

// Witness search certifying qp(X) <= k. Pointset: exhaustive over subsets
// of the configuration (exact). Graph: torus-fixed coordinate points plus
// random points on maximal cliques. Toric: vertex coordinate points plus
// parametrized samples.
UpperSearchResult qp_upper_search(const VarietyModel& m, int max_size, int trials,
                                  std::uint64_t seed);

// Greedy witness only: certifies qp(X) <= |witness| without the minimality
// sweep. Cheap enough for report assembly on large reducible models.
UpperSearchResult qp_greedy_upper(const VarietyModel& m, int max_size, int trials,
                                  std::uint64_t seed);

// Interpolation cross-check of kappa_at requiring no gradients: quadrics
// in the linear forms vanishing on Span(gamma), interpolated through
// nsamples points of X.
long long kappa_oracle(const VarietyModel& m, const PointList& gamma, int nsamples, Rng& rng);

}  // namespace qpkit
