#include "signedpaths/threshold.hpp"

#include <algorithm>
#include <bit>

#include "signedpaths/errors.hpp"

namespace signedpaths {

namespace {

std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

void check_vertex(int n, int v, const char* what) {
  if (v < 1 || v > n) throw PreconditionError(std::string(what) + ": vertex out of range");
}

}  // namespace

// -- SimpleGraph -------------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0 || n > kMaxRank) throw PreconditionError("SimpleGraph: vertex count out of range");
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n) {
  for (auto [a, b] : edges) {
    check_vertex(n, a, "SimpleGraph");
    check_vertex(n, b, "SimpleGraph");
    if (a == b) throw PreconditionError("SimpleGraph: loops are not allowed");
    adj_[static_cast<std::size_t>(a)] |= bit(b);
    adj_[static_cast<std::size_t>(b)] |= bit(a);
  }
}

std::vector<Edge> SimpleGraph::edge_slots(int n) {
  std::vector<Edge> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

SimpleGraph SimpleGraph::from_edge_mask(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  const auto slots = edge_slots(n);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if ((mask >> k) & 1u) {
      auto [a, b] = slots[k];
      g.adj_[static_cast<std::size_t>(a)] |= bit(b);
      g.adj_[static_cast<std::size_t>(b)] |= bit(a);
    }
  }
  return g;
}

int SimpleGraph::degree(int v) const { return std::popcount(neighbourhood(v)); }

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 1; v <= n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::relabeled(const Permutation& sigma) const {
  if (sigma.size() != n_) throw PreconditionError("SimpleGraph::relabeled: size mismatch");
  std::vector<Edge> out;
  for (auto [a, b] : edges()) out.emplace_back(sigma(a), sigma(b));
  return SimpleGraph(n_, out);
}

bool SimpleGraph::is_subgraph_of(const SimpleGraph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 1; v <= n_; ++v) {
    if ((neighbourhood(v) & ~other.neighbourhood(v)) != 0) return false;
  }
  return true;
}

// -- recognition ---------------------------------------------------------------

bool vicinal_leq(const SimpleGraph& g, int v, int u) {
  check_vertex(g.order(), v, "vicinal_leq");
  check_vertex(g.order(), u, "vicinal_leq");
  return (g.neighbourhood(v) & ~(g.neighbourhood(u) | bit(u))) == 0;
}

namespace {

bool vicinal_total(const SimpleGraph& g) {
  const int n = g.order();
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!vicinal_leq(g, u, v) && !vicinal_leq(g, v, u)) return false;
    }
  }
  return true;
}

// Induced subgraph on four vertices is 2K2, P4 or C4.
bool forbidden_quadruple(const SimpleGraph& g, const int (&q)[4]) {
  int edges = 0;
  int degrees[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[i], q[j])) {
        ++edges;
        ++degrees[i];
        ++degrees[j];
      }
    }
  }
  std::sort(std::begin(degrees), std::end(degrees));
  if (edges == 2) return degrees[0] == 1 && degrees[3] == 1;
  if (edges == 3) return degrees[0] == 1 && degrees[1] == 1 && degrees[2] == 2 && degrees[3] == 2;
  if (edges == 4) return degrees[0] == 2 && degrees[3] == 2;
  return false;
}

bool no_forbidden_subgraph(const SimpleGraph& g) {
  const int n = g.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const int q[4] = {a, b, c, d};
          if (forbidden_quadruple(g, q)) return false;
        }
  return true;
}

}  // namespace

bool is_threshold(const SimpleGraph& g, ThresholdMethod method) {
  return method == ThresholdMethod::Vicinal ? vicinal_total(g) : no_forbidden_subgraph(g);
}

bool is_degree_ordering(const SimpleGraph& g, const Permutation& w) {
  if (w.size() != g.order()) throw PreconditionError("is_degree_ordering: size mismatch");
  for (int i = 1; i < w.size(); ++i) {
    if (g.degree(w(i)) < g.degree(w(i + 1))) return false;
  }
  return true;
}

Permutation canonical_degree_ordering(const SimpleGraph& g) {
  if (!is_threshold(g)) throw PreconditionError("canonical_degree_ordering: graph is not threshold");
  std::vector<int> word(static_cast<std::size_t>(g.order()));
  for (int v = 1; v <= g.order(); ++v) word[static_cast<std::size_t>(v - 1)] = v;
  std::stable_sort(word.begin(), word.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return Permutation(std::move(word));
}

// -- height functions ------------------------------------------------------------

SimpleGraph edges_from_height(const HeightFunction& f) {
  if (!is_self_adjoint(f)) throw PreconditionError("edges_from_height: height function is not self-adjoint");
  const int n = f.size();
  std::vector<Edge> edges;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= f(x); ++y) edges.emplace_back(x, y);
  }
  return SimpleGraph(n, edges);
}

HeightFunction height_from_edges(const SimpleGraph& g) {
  const int n = g.order();
  if (!is_threshold(g)) throw PreconditionError("height_from_edges: graph is not threshold");
  if (!is_degree_ordering(g, Permutation::identity(n))) {
    throw PreconditionError("height_from_edges: identity is not a degree ordering");
  }
  std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = n;
  for (int x = 1; x <= n; ++x) {
    const std::uint32_t nb = g.neighbourhood(x);
    f[static_cast<std::size_t>(x)] = nb == 0 ? 0 : 31 - std::countl_zero(nb);
  }
  return HeightFunction(std::move(f));
}

SimpleGraph edges_from_signed(const SignedPermutation& u) {
  const PathRepresentation rep = path_representation(u);
  const HeightFunction f = height_function(rep.path);
  const int n = u.size();
  std::vector<Edge> edges;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y < x; ++y) {
      if (cell_below(f, x, y)) edges.emplace_back(rep.lambda_x(x), rep.lambda_x(y));
    }
  }
  return SimpleGraph(n, edges);
}

// -- TG_n ------------------------------------------------------------------------

bool is_tg_pair(const ThresholdPair& pair) {
  return pair.w.size() == pair.graph.order() && is_threshold(pair.graph) && is_degree_ordering(pair.graph, pair.w);
}

ThresholdPair tg_pair(const SignedPermutation& u) {
  return ThresholdPair{path_representation(u).lambda_x, edges_from_signed(u)};
}

namespace {

SignedPermutation some_signed_from_tg(const ThresholdPair& pair) {
  if (!is_tg_pair(pair)) throw PreconditionError("signed_from_tg: pair is not in TG_n");
  const HeightFunction f = height_from_edges(pair.graph.relabeled(pair.w.inverse()));
  return signed_from_path(path_from_height(f), pair.w);
}

}  // namespace

SignedPermutation signed_from_tg(const ThresholdPair& pair) {
  const SignedPermutation u = some_signed_from_tg(pair);
  return u.size() == 0 ? u : even_representative(u);
}

SignedPermutation smooth_signed_from_tg(const ThresholdPair& pair) {
  if (pair.w.size() < 2) throw PreconditionError("smooth_signed_from_tg: needs n >= 2");
  return smooth_representative(some_signed_from_tg(pair));
}

// -- threshold graphs and barred permutations ------------------------------------

SimplyBarredPermutation sbp_from_threshold(const SimpleGraph& g) {
  const int n = g.order();
  if (!is_threshold(g)) throw PreconditionError("sbp_from_threshold: graph is not threshold");
  if (n <= 1) return SimplyBarredPermutation(Permutation::identity(n), {});
  const Permutation w = canonical_degree_ordering(g);
  const SimplyBarredPermutation centred = psi_inverse(smooth_signed_from_tg({w, g}));
  auto parts = blocks(centred);
  const auto c = static_cast<std::size_t>(central_block_index(centred) - 1);
  std::rotate(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(c), parts.begin() + static_cast<std::ptrdiff_t>(c) + 1);
  return from_blocks(parts);
}

SimpleGraph threshold_from_sbp(const SimplyBarredPermutation& sbp) {
  const int n = sbp.size();
  if (n <= 1) {
    if (!sbp.bars().empty()) throw PreconditionError("threshold_from_sbp: for n <= 1 only (identity, {}) is an image");
    return SimpleGraph(n);
  }
  auto parts = blocks(sbp);
  if (!classify_sbp(sbp).normal) throw PreconditionError("threshold_from_sbp: barred permutation is not normal");
  if (parts.front().size() < 2) throw PreconditionError("threshold_from_sbp: first block has fewer than two letters");
  // Move the first block back to the central position ceil(m / 2) of m blocks.
  const std::size_t c = (parts.size() + 1) / 2 - 1;
  std::rotate(parts.begin(), parts.begin() + 1, parts.begin() + static_cast<std::ptrdiff_t>(c) + 1);
  return edges_from_signed(psi(from_blocks(parts)));
}

// -- enumeration and isomorphism -------------------------------------------------

std::vector<ThresholdPair> enumerate_tg(int n) {
  if (n < 0 || n > 7) throw ResourceError("enumerate_tg: n must lie in 0..7");
  std::vector<ThresholdPair> out;
  std::vector<int> word(static_cast<std::size_t>(n));
  for_each_graph(n, [&](const SimpleGraph& g) {
    if (!is_threshold(g)) return;
    for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
    do {
      Permutation w(word);
      if (is_degree_ordering(g, w)) out.push_back({std::move(w), g});
    } while (std::next_permutation(word.begin(), word.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> degree_signature(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_signature(a) != degree_signature(b)) return false;
  std::vector<int> word(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    if (a.relabeled(Permutation(word)) == b) return true;
  } while (std::next_permutation(word.begin(), word.end()));
  return false;
}

}  // namespace signedpaths
