#pragma once

#include <vector>

namespace qpkit {

// Monomials of S = k[x_0..x_n] as sorted index multisets, lex ordered.
// Degree-2 monomials x_i x_j (i <= j) carry the closed-form index used
// by every quadric coefficient vector in the project.

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline int quad_count(int n) { return static_cast<int>(binomial(n + 2, 2)); }

// Index of x_i x_j (i <= j) in the lex order (0,0),(0,1),...,(1,1),...
inline int quad_index(int n, int i, int j) {
  return i * (n + 1) - i * (i - 1) / 2 + (j - i);
}

inline std::vector<std::pair<int, int>> quad_monomials(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// All degree-q monomials as nondecreasing index tuples, lex ordered.
inline std::vector<std::vector<int>> degree_monomials(int n, int q) {
  std::vector<std::vector<int>> out;
  if (q == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> cur(q, 0);
  for (;;) {
    out.push_back(cur);
    int i = q - 1;
    while (i >= 0 && cur[i] == n) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < q; ++j) cur[j] = cur[i];
  }
  return out;
}

}  // namespace qpkit
