#include "qpkit/graphs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qpkit {

GraphSpec GraphSpec::make(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph has a loop");
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph has a repeated edge");
  return GraphSpec{vertices, std::move(edges)};
}

bool GraphSpec::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::uint64_t> GraphSpec::adjacency_masks() const {
  if (vertex_count > 64) throw std::invalid_argument("graph too large (max 64 vertices)");
  std::vector<std::uint64_t> adj(vertex_count, 0);
  for (auto& [u, v] : edges) {
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }
  return adj;
}

namespace {

using Mask = std::uint64_t;

// Greedy coloring of the candidate set; vertices come back ordered by
// color so the branch-and-bound can cut as soon as size + color <= best.
void color_sort(const std::vector<Mask>& adj, Mask cand, std::vector<int>& order,
                std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int color = 0;
  while (cand) {
    ++color;
    Mask cls = cand;
    while (cls) {
      int v = std::countr_zero(cls);
      cls &= cls - 1;
      cls &= ~adj[v];
      cand &= ~(1ull << v);
      order.push_back(v);
      bound.push_back(color);
    }
  }
}

void max_clique_rec(const std::vector<Mask>& adj, Mask cand, int size, int& best) {
  std::vector<int> order, bound;
  color_sort(adj, cand, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (size + bound[i] <= best) return;
    int v = order[i];
    best = std::max(best, size + 1);
    Mask next = cand & adj[v];
    if (next) max_clique_rec(adj, next, size + 1, best);
    cand &= ~(1ull << v);
  }
}

void bron_kerbosch(const std::vector<Mask>& adj, Mask r, Mask p, Mask x,
                   std::vector<std::vector<int>>& out, std::size_t cap) {
  if (!p && !x) {
    if (out.size() >= cap) throw std::runtime_error("maximal clique cap exceeded");
    std::vector<int> clique;
    for (Mask m = r; m; m &= m - 1) clique.push_back(std::countr_zero(m));
    out.push_back(std::move(clique));
    return;
  }
  // Pivot: vertex of P|X with most neighbours in P.
  int pivot = -1, bestdeg = -1;
  for (Mask m = p | x; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(p & adj[v]);
    if (d > bestdeg) {
      bestdeg = d;
      pivot = v;
    }
  }
  for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
    int v = std::countr_zero(m);
    Mask vb = 1ull << v;
    bron_kerbosch(adj, r | vb, p & adj[v], x & adj[v], out, cap);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

int clique_number(const GraphSpec& g) {
  auto adj = g.adjacency_masks();
  Mask all = g.vertex_count == 64 ? ~0ull : (1ull << g.vertex_count) - 1;
  int best = 0;
  max_clique_rec(adj, all, 0, best);
  return best;
}

std::vector<std::vector<int>> maximal_cliques(const GraphSpec& g, std::size_t cap) {
  auto adj = g.adjacency_masks();
  Mask all = g.vertex_count == 64 ? ~0ull : (1ull << g.vertex_count) - 1;
  std::vector<std::vector<int>> out;
  bron_kerbosch(adj, 0, all, 0, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first search for an induced cycle of length exactly `target`.
// The path stays induced: a new vertex may touch only the previous one,
// and the first one only when closing. Cycles are rooted at their
// minimal vertex to avoid revisiting rotations.
bool hole_of_length(const std::vector<Mask>& adj, int n, int target, std::vector<int>& path,
                    Mask used) {
  int len = static_cast<int>(path.size());
  int last = path.back();
  int root = path.front();
  if (len == target) return (adj[last] >> root) & 1ull;
  for (int v = root + 1; v < n; ++v) {
    if ((used >> v) & 1ull) continue;
    if (!((adj[last] >> v) & 1ull)) continue;
    bool chord = false;
    for (int i = 0; i + 1 < len && !chord; ++i) {
      if (i == 0 && len + 1 == target) continue;  // closing edge allowed
      chord = (adj[path[i]] >> v) & 1ull;
    }
    if (chord) continue;
    path.push_back(v);
    if (hole_of_length(adj, n, target, path, used | (1ull << v))) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<int> min_induced_cycle(const GraphSpec& g) {
  auto adj = g.adjacency_masks();
  int n = g.vertex_count;
  for (int len = 4; len <= n; ++len) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> path{v};
      if (hole_of_length(adj, n, len, path, 1ull << v)) return len;
    }
  }
  return std::nullopt;
}

bool is_chordal(const GraphSpec& g) {
  // Lex-BFS, then verify a perfect elimination ordering in reverse.
  int n = g.vertex_count;
  auto adj = g.adjacency_masks();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || label[v] > label[best])) best = v;
    done[best] = true;
    order.push_back(best);
    for (int u = 0; u < n; ++u)
      if (!done[u] && ((adj[best] >> u) & 1ull)) label[u].push_back(n - step);
  }
  std::reverse(order.begin(), order.end());  // elimination order
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    // Later neighbours of v must contain all other later neighbours of v
    // in the neighbourhood of the earliest one.
    int w = -1;
    for (int u = 0; u < n; ++u)
      if (((adj[v] >> u) & 1ull) && pos[u] > i && (w < 0 || pos[u] < pos[w])) w = u;
    if (w < 0) continue;
    for (int u = 0; u < n; ++u)
      if (u != w && ((adj[v] >> u) & 1ull) && pos[u] > i && !((adj[w] >> u) & 1ull)) return false;
  }
  return true;
}

namespace {

// Q(S, v): vertices outside S u {v} seen from v through paths internal to S.
int dp_q(const std::vector<Mask>& adj, Mask s, int v, Mask all) {
  Mask reach = adj[v] & s;
  Mask grown = reach;
  do {
    reach = grown;
    for (Mask m = reach; m; m &= m - 1) grown |= adj[std::countr_zero(m)] & s;
  } while (grown != reach);
  Mask outside = (adj[v] | [&] {
                   Mask acc = 0;
                   for (Mask m = reach; m; m &= m - 1) acc |= adj[std::countr_zero(m)];
                   return acc;
                 }()) &
                 all & ~s & ~(1ull << v);
  return std::popcount(outside);
}

}  // namespace

int treewidth(const GraphSpec& g) {
  int n = g.vertex_count;
  if (n > 20)
    throw std::invalid_argument(
        "treewidth: exact mode capped at 20 vertices; use the advisory upper bound");
  auto adj = g.adjacency_masks();
  Mask all = (1ull << n) - 1;
  std::vector<int> f(static_cast<std::size_t>(1) << n, 0);
  f[0] = -1;
  for (Mask s = 1; s <= all; ++s) {
    int best = n;  // treewidth never exceeds n-1
    for (Mask m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      Mask rest = s & ~(1ull << v);
      int cand = std::max(f[rest], dp_q(adj, rest, v, all));
      best = std::min(best, cand);
    }
    f[s] = best;
  }
  return f[all];
}

int treewidth_upper_bound(const GraphSpec& g) {
  int n = g.vertex_count;
  auto adj = g.adjacency_masks();
  std::vector<Mask> a = adj;
  Mask alive = n == 64 ? ~0ull : (1ull << n) - 1;
  int width = 0;
  for (int step = 0; step < n; ++step) {
    int v = -1, deg = n + 1;
    for (Mask m = alive; m; m &= m - 1) {
      int u = std::countr_zero(m);
      int d = std::popcount(a[u] & alive);
      if (d < deg) {
        deg = d;
        v = u;
      }
    }
    width = std::max(width, deg);
    Mask nb = a[v] & alive;
    for (Mask m = nb; m; m &= m - 1) {
      int u = std::countr_zero(m);
      a[u] |= nb & ~(1ull << u);
    }
    alive &= ~(1ull << v);
  }
  return width;
}

}  // namespace qpkit
