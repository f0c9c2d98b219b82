#pragma once

#include <set>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "signedpaths/sgnperm.hpp"
#include "signedpaths/threshold.hpp"

namespace testing {

inline signedpaths::SignedPermutation sp(std::vector<int> window) { return signedpaths::SignedPermutation(std::move(window)); }
inline signedpaths::Permutation perm(std::vector<int> word) { return signedpaths::Permutation(std::move(word)); }

// The running example of the test suite and its barred preimage.
inline signedpaths::SignedPermutation example_u() { return sp({-2, 3, 1, 6, -4, -7, 5}); }
inline signedpaths::Permutation example_w() { return perm({7, 4, 2, 3, 1, 6, 5}); }

inline std::set<std::pair<int, int>> as_set(const signedpaths::InversionSet& s) {
  std::set<std::pair<int, int>> out(s.positive.begin(), s.positive.end());
  out.insert(s.negative.begin(), s.negative.end());
  return out;
}

inline oracle::Graph to_oracle(const signedpaths::SimpleGraph& g) {
  oracle::Graph out(g.order());
  for (const auto& [a, b] : g.edges()) out.add(a, b);
  return out;
}

inline signedpaths::SimpleGraph from_oracle(const oracle::Graph& g) {
  std::vector<signedpaths::Edge> edges;
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (g.adj[i][j]) edges.emplace_back(i, j);
  return signedpaths::SimpleGraph(g.n, edges);
}

}  // namespace testing
