#pragma once

// Straightforward re-implementations used as test oracles. Nothing here calls
// into the library: signed permutations are plain windows (vector<int>),
// graphs are adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Window = std::vector<int>;

inline std::vector<Window> permutations(int n) {
  std::vector<Window> out;
  Window w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Every signed window, in no particular order.
inline std::vector<Window> signed_windows(int n) {
  std::vector<Window> out;
  for (const auto& w : permutations(n)) {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      Window u = w;
      for (int i = 0; i < n; ++i) {
        if ((signs >> i) & 1u) u[static_cast<std::size_t>(i)] = -u[static_cast<std::size_t>(i)];
      }
      out.push_back(u);
    }
  }
  return out;
}

inline int negatives(const Window& u) {
  return static_cast<int>(std::count_if(u.begin(), u.end(), [](int x) { return x < 0; }));
}

inline std::vector<Window> even_windows(int n) {
  std::vector<Window> out;
  for (auto& u : signed_windows(n)) {
    if (negatives(u) % 2 == 0) out.push_back(u);
  }
  return out;
}

// Type A descents of a word (positions 1..n-1).
inline int des_a(const Window& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1] ? 1 : 0;
  return d;
}

// Type B: sentinel u_0 = 0 in front of the window.
inline int des_b(const Window& u) {
  Window ext{0};
  ext.insert(ext.end(), u.begin(), u.end());
  return des_a(ext);
}

// Type D: sentinel u_0 = -u_2.
inline int des_d(const Window& u) {
  Window ext{-u[1]};
  ext.insert(ext.end(), u.begin(), u.end());
  return des_a(ext);
}

// u as a map on ±[n].
inline int value_at(const Window& u, int p) { return p > 0 ? u[static_cast<std::size_t>(p - 1)] : -u[static_cast<std::size_t>(-p - 1)]; }

inline int position_of(const Window& u, int v) {
  const int n = static_cast<int>(u.size());
  for (int p = -n; p <= n; ++p) {
    if (p != 0 && value_at(u, p) == v) return p;
  }
  return 0;
}

// inv_B by the definition: pairs (i, j), 1 <= |i| <= j <= n, u^{-1}(i) > u^{-1}(j).
inline std::set<std::pair<int, int>> inversions_b(const Window& u) {
  const int n = static_cast<int>(u.size());
  std::set<std::pair<int, int>> out;
  for (int j = 1; j <= n; ++j) {
    for (int i = -j; i <= j; ++i) {
      if (i == 0 || (i > 0 && i == j)) continue;
      if (position_of(u, i) > position_of(u, j)) out.emplace(i, j);
    }
  }
  return out;
}

inline std::vector<std::int64_t> eulerian_a(int n) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(std::max(n, 1)), 0);
  for (const auto& w : permutations(n)) ++row[static_cast<std::size_t>(des_a(w))];
  return row;
}

inline std::vector<std::int64_t> eulerian_b(int n) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& u : signed_windows(n)) ++row[static_cast<std::size_t>(des_b(u))];
  return row;
}

inline std::vector<std::int64_t> eulerian_d(int n) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& u : even_windows(n)) ++row[static_cast<std::size_t>(des_d(u))];
  return row;
}

// Set partitions of [n] into k blocks, counted via restricted growth strings.
inline std::int64_t stirling2(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  std::int64_t count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    count += blocks == k ? 1 : 0;
    // Next restricted growth string.
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(a.begin(), a.begin() + i);
      if (a[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) return count;
    ++a[static_cast<std::size_t>(i)];
    std::fill(a.begin() + i + 1, a.end(), 0);
  }
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Graphs as symmetric 0/1 matrices indexed from 1.
struct Graph {
  int n;
  std::vector<std::vector<int>> adj;

  explicit Graph(int n_) : n(n_), adj(static_cast<std::size_t>(n_) + 1, std::vector<int>(static_cast<std::size_t>(n_) + 1, 0)) {}
  void add(int a, int b) { adj[a][b] = adj[b][a] = 1; }
  int degree(int v) const { return std::accumulate(adj[v].begin(), adj[v].end(), 0); }
};

inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((mask >> k) & 1u) g.add(slots[k].first, slots[k].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

// Threshold iff repeatedly deleting an isolated or a dominating vertex
// empties the graph.
inline bool is_threshold_by_elimination(const Graph& g) {
  std::vector<bool> alive(static_cast<std::size_t>(g.n) + 1, true);
  int left = g.n;
  while (left > 0) {
    bool removed = false;
    for (int v = 1; v <= g.n && !removed; ++v) {
      if (!alive[v]) continue;
      int d = 0;
      for (int u = 1; u <= g.n; ++u) d += alive[u] && g.adj[v][u] ? 1 : 0;
      if (d == 0 || d == left - 1) {
        alive[v] = false;
        --left;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(static_cast<std::size_t>(a.n) + 1);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool same = true;
    for (int i = 1; i <= a.n && same; ++i)
      for (int j = 1; j <= a.n && same; ++j) same = a.adj[i][j] == b.adj[p[i]][p[j]];
    if (same) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

// Join of x and y in a finite order given by a leq matrix; -1 if none.
inline int naive_join(const std::vector<std::vector<bool>>& leq, int x, int y) {
  const int n = static_cast<int>(leq.size());
  for (int z = 0; z < n; ++z) {
    if (!leq[x][z] || !leq[y][z]) continue;
    bool least = true;
    for (int t = 0; t < n && least; ++t) {
      if (leq[x][t] && leq[y][t] && !leq[z][t]) least = false;
    }
    if (least) return z;
  }
  return -1;
}

inline int naive_meet(const std::vector<std::vector<bool>>& leq, int x, int y) {
  const int n = static_cast<int>(leq.size());
  for (int z = 0; z < n; ++z) {
    if (!leq[z][x] || !leq[z][y]) continue;
    bool greatest = true;
    for (int t = 0; t < n && greatest; ++t) {
      if (leq[t][x] && leq[t][y] && !leq[t][z]) greatest = false;
    }
    if (greatest) return z;
  }
  return -1;
}

}  // namespace oracle
