#pragma once

#include <vector>

#include "qpkit/rational.hpp"

namespace qpkit {

// Lattice point configuration A = P cap Z^d, points pairwise distinct.
struct LatticeConfig {
  int dim = 0;                                 // ambient lattice dimension d
  std::vector<std::vector<long long>> points;  // each of size dim

  static LatticeConfig make(int dim, std::vector<std::vector<long long>> points);
  int affine_dim() const;  // dimension of the affine span
};

// All integer points of conv(vertices), by bounding-box scan with exact
// half-space membership.
LatticeConfig lattice_points(const std::vector<std::vector<long long>>& vertices);

// |A + A|, distinct pairwise sums a_i + a_j including i = j.
long long minkowski_count(const LatticeConfig& a);

struct LineCover {
  long long lines;
  std::vector<long long> direction;  // primitive witnessing direction
};

// Minimal number of parallel lines covering A. Candidate directions are
// the primitive pairwise differences; any other direction gives the
// all-singletons cover |A|, which is evaluated as the baseline.
LineCover min_line_cover(const LatticeConfig& a);

// Normalized volume of conv(A) with respect to the affine lattice
// generated by A - A (the degree of the toric variety, with the usual
// caveat for non-normal configurations). Throws on affinely degenerate A.
Int normalized_volume(const LatticeConfig& a);

LatticeConfig prism(const LatticeConfig& a, int k);
LatticeConfig pyramid(const LatticeConfig& a);
LatticeConfig lawrence_prism(const std::vector<long long>& heights);

// Indices of points of A that are vertices of conv(A).
std::vector<int> hull_vertices(const LatticeConfig& a);

// Number of points of A lying on the boundary of conv(A) (relative to
// its affine span).
long long boundary_point_count(const LatticeConfig& a);

}  // namespace qpkit
