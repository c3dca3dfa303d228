#pragma once

#include <string>
#include <vector>

#include "qpkit/graphs.hpp"
#include "qpkit/polytopes.hpp"
#include "qpkit/ratlin.hpp"
#include "qpkit/rng.hpp"

namespace qpkit {

// Finite point configuration in P^n with exact rational coordinates.
struct PointConfig {
  int n = 0;
  std::vector<std::vector<Rational>> points;  // each of size n+1, nonzero

  static PointConfig make(int n, std::vector<std::vector<Rational>> points);
};

// Basis of (I_X)_2 as coefficient vectors over the lex-ordered degree-2
// monomial basis x_i x_j (i <= j) of S_2.
struct QuadricSpace {
  int n = 0;
  std::vector<std::vector<Rational>> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

enum class ModelKind { toric, graph, pointset };

struct VarietyModel {
  ModelKind kind;
  int n = 0;      // ambient projective dimension
  int dim_x = 0;  // dimension of X
  bool irreducible = false;
  QuadricSpace quadrics;

  // Originating configuration (one of these, per kind).
  LatticeConfig lattice;
  GraphSpec graph;
  PointConfig pointset;

  int codim() const { return n - dim_x; }
  bool degenerate() const;  // I_X contains a linear form
};

VarietyModel toric_model(const LatticeConfig& a);
QuadricSpace toric_quadrics(const LatticeConfig& a);
VarietyModel graph_model(const GraphSpec& g);
VarietyModel pointset_model(const PointConfig& c);

// dim R_q for q in {0,1,2,3}. Toric: distinct q-fold sums of A. Graph:
// degree-q monomials with clique support. Pointset: rank of the degree-q
// evaluation matrix.
long long hilbert_dim(const VarietyModel& m, int q);

// A rational point exactly on X. Toric: monomial parametrization at a
// random integer tuple in [-50,50]^d without zeros. Graph: a maximal
// clique chosen uniformly, nonzero integer coordinates on its support.
// Pointset: one of the stored points.
std::vector<Rational> sample_point(const VarietyModel& m, Rng& rng);

// Exact evaluation of a quadric coefficient vector at a point.
Rational evaluate_quadric(int n, const std::vector<Rational>& coeffs,
                          const std::vector<Rational>& point);

// Gradient of a quadric at a point (n+1 entries).
std::vector<Rational> quadric_gradient(int n, const std::vector<Rational>& coeffs,
                                       const std::vector<Rational>& point);

// Index of a violated basis quadric, or -1 when the point lies on every
// quadric of the model.
int violated_quadric(const VarietyModel& m, const std::vector<Rational>& point);

// Throws (naming the violated quadric) unless the point is on X.
void require_on_variety(const VarietyModel& m, const std::vector<Rational>& point);

// Degree-q evaluation matrix of a pointset (rows = points, cols = lex
// degree-q monomials); shared by models and koszul.
RationalMatrix pointset_evaluation_matrix(const PointConfig& c, int q);

}  // namespace qpkit
