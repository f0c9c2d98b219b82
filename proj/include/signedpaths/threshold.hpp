#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "signedpaths/barred.hpp"
#include "signedpaths/pathrep.hpp"
#include "signedpaths/sgnperm.hpp"

namespace signedpaths {

using Edge = std::pair<int, int>;

/// A labeled simple graph on [n], held as one neighbourhood mask per vertex
/// (bit v set in neighbourhood(u) iff {u, v} is an edge).
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);
  /// PreconditionError on loops or endpoints outside [n]; duplicate edges collapse.
  SimpleGraph(int n, const std::vector<Edge>& edges);

  /// Edge set given by bit k of `mask` for the k-th pair of
  /// edge_slots(n) (pairs (i, j), i < j, lexicographic).
  static SimpleGraph from_edge_mask(int n, std::uint64_t mask);
  static std::vector<Edge> edge_slots(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return ((adj_[static_cast<std::size_t>(u)] >> v) & 1u) != 0; }
  std::uint32_t neighbourhood(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  std::size_t edge_count() const;

  /// Sorted (min, max) pairs.
  std::vector<Edge> edges() const;

  /// sigma ∘ E = {{sigma(x), sigma(y)} : {x, y} ∈ E}.
  SimpleGraph relabeled(const Permutation& sigma) const;

  bool is_subgraph_of(const SimpleGraph& other) const;

  bool operator==(const SimpleGraph&) const = default;
  auto operator<=>(const SimpleGraph&) const = default;

 private:
  int n_;
  std::vector<std::uint32_t> adj_;  // index 0 unused
};

/// v ≼ u iff N(v) ⊆ N(u) ∪ {u}.
bool vicinal_leq(const SimpleGraph& g, int v, int u);

enum class ThresholdMethod { Vicinal, ForbiddenSubgraph };

/// Vicinal: ≼ is total. ForbiddenSubgraph: no induced 2K2, P4 (the path with
/// three edges) or C4 among the 4-vertex subsets.
bool is_threshold(const SimpleGraph& g, ThresholdMethod method = ThresholdMethod::Vicinal);

/// Degrees are non-increasing along w.
bool is_degree_ordering(const SimpleGraph& g, const Permutation& w);

/// Sort by (-degree, label). PreconditionError for non-threshold input.
Permutation canonical_degree_ordering(const SimpleGraph& g);

/// E_f = {{x, y} : x != y, y <= f(x)}. PreconditionError unless f is self-adjoint.
SimpleGraph edges_from_height(const HeightFunction& f);

/// f_E(x) = max N(x) (max ∅ = 0), f_E(0) = n. PreconditionError unless the
/// graph is threshold with the identity as a degree ordering.
HeightFunction height_from_edges(const SimpleGraph& g);

/// E^u = lambda_x ∘ {{x, y} : x != y, cell (x, y) below the path of u}.
SimpleGraph edges_from_signed(const SignedPermutation& u);

/// An element (w, E) of TG_n.
struct ThresholdPair {
  Permutation w;
  SimpleGraph graph;

  bool operator==(const ThresholdPair&) const = default;
  auto operator<=>(const ThresholdPair&) const = default;
};

/// Threshold graph with w among its degree orderings.
bool is_tg_pair(const ThresholdPair& pair);

/// (lambda_x, E^u).
ThresholdPair tg_pair(const SignedPermutation& u);

/// The unique even-signed u with tg_pair(u) = pair. PreconditionError if pair ∉ TG_n.
SignedPermutation signed_from_tg(const ThresholdPair& pair);

/// The unique smooth u with tg_pair(u) = pair (n >= 2).
SignedPermutation smooth_signed_from_tg(const ThresholdPair& pair);

/// Threshold graph on [n] -> normal simply barred permutation whose first
/// block has at least two letters (n >= 2). Equal degrees share a block.
/// For n <= 1 the single graph maps to (identity, ∅).
SimplyBarredPermutation sbp_from_threshold(const SimpleGraph& g);

/// Inverse of sbp_from_threshold. PreconditionError unless the input is normal
/// with a first block of size >= 2 (or is (identity, ∅) for n <= 1).
SimpleGraph threshold_from_sbp(const SimplyBarredPermutation& sbp);

/// All graphs on [n] in edge-mask order (n <= 8).
template <class Fn>
void for_each_graph(int n, Fn&& fn) {
  const auto slots = static_cast<unsigned>(n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) fn(SimpleGraph::from_edge_mask(n, mask));
}

/// TG_n built directly: every threshold graph on [n] paired with each of its
/// degree orderings. Sorted.
std::vector<ThresholdPair> enumerate_tg(int n);

/// Sorted degree sequence; a complete isomorphism invariant on threshold graphs.
std::vector<int> degree_signature(const SimpleGraph& g);

/// Brute force over all relabelings.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace signedpaths
