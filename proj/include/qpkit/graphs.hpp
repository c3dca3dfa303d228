#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qpkit {

// Simple graph on vertices 0..vertex_count-1, no loops, no multi-edges.
struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // normalized i < j, sorted, unique

  static GraphSpec make(int vertices, std::vector<std::pair<int, int>> edges);
  bool adjacent(int u, int v) const;
  std::vector<std::uint64_t> adjacency_masks() const;  // vertex_count <= 64
};

// Exact clique number via branch and bound with a greedy coloring bound.
int clique_number(const GraphSpec& g);

// Smallest induced cycle of length >= 4; nullopt when chordal (iota = inf).
std::optional<int> min_induced_cycle(const GraphSpec& g);

// Exact treewidth by DP over vertex subsets (elimination orderings).
// Rejects vertex_count > 20; use treewidth_upper_bound beyond the cap.
int treewidth(const GraphSpec& g);

// Min-degree heuristic; an upper bound only, callers must flag it.
int treewidth_upper_bound(const GraphSpec& g);

bool is_chordal(const GraphSpec& g);

// Bron-Kerbosch with pivoting; throws if more than `cap` cliques appear.
std::vector<std::vector<int>> maximal_cliques(const GraphSpec& g, std::size_t cap = 100000);

}  // namespace qpkit
