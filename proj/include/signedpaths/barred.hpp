#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signedpaths/pathrep.hpp"
#include "signedpaths/position_set.hpp"
#include "signedpaths/sgnperm.hpp"

namespace signedpaths {

/// (w, B) with B ⊆ [n]: a bar after w_i for each i in B. The bars cut w into
/// |B| + 1 blocks; only the last one can be empty (exactly when n ∈ B).
class SimplyBarredPermutation {
 public:
  SimplyBarredPermutation() = default;
  /// PreconditionError unless bars ⊆ [n].
  SimplyBarredPermutation(Permutation w, PositionSet bars);

  int size() const { return w_.size(); }
  const Permutation& word() const { return w_; }
  PositionSet bars() const { return bars_; }

  bool operator==(const SimplyBarredPermutation&) const = default;
  auto operator<=>(const SimplyBarredPermutation&) const = default;

 private:
  Permutation w_;
  PositionSet bars_;
};

/// (w, B) with B ⊆ {0..n}. Only used to index simply barred permutations
/// by the parity of des(w) + |B|.
class LooselyBarredPermutation {
 public:
  LooselyBarredPermutation() = default;
  /// PreconditionError unless bars ⊆ {0..n}.
  LooselyBarredPermutation(Permutation w, PositionSet bars);

  int size() const { return w_.size(); }
  const Permutation& word() const { return w_; }
  PositionSet bars() const { return bars_; }

  bool operator==(const LooselyBarredPermutation&) const = default;
  auto operator<=>(const LooselyBarredPermutation&) const = default;

 private:
  Permutation w_;
  PositionSet bars_;
};

/// Upper antidiagonal of the subgrid (B ∪ {0}) × (B ∪ {0}), padded with
/// South steps before and East steps after so it runs from (0, n) to (n, 0).
LatticePath upper_antidiagonal(PositionSet bars, int n);

/// psi(w, B): the signed permutation with path representation
/// (upper_antidiagonal(B), w).
SignedPermutation psi(const SimplyBarredPermutation& sbp);

/// Every South step of the path becomes a bar after the letters read so far;
/// repeated bars collapse and a bar at position 0 is dropped.
SimplyBarredPermutation psi_inverse(const SignedPermutation& u);

/// |Desc(w) \ B| + ceil(|B| / 2), which equals des_B(psi(w, B)).
int descb_formula(const SimplyBarredPermutation& sbp);

/// The k with (w, B) ∈ SBP_n^k, i.e. the number of strictly positive type B
/// descents of psi(w, B), computed from the parity of |B|.
int positive_descent_formula(const SimplyBarredPermutation& sbp);

/// (D Δ B) \ {0}.
PositionSet xi(PositionSet d, PositionSet b);

/// The two xi_D-preimages of C: {D Δ C, (D Δ C) ∪ {0}}.
std::array<PositionSet, 2> xi_preimages(PositionSet d, PositionSet c);

/// Theta_n(w, B) = (w, xi_{Desc(w)}(B)).
SimplyBarredPermutation theta(const LooselyBarredPermutation& lbp);

/// Which restriction of Theta_n to invert: des(w) + |B| = 2k (Even) or 2k + 1 (Odd).
enum class BarParity { Even, Odd };

struct ThetaTarget {
  BarParity parity;
  int k;
};

/// The unique (w, B) with Theta_n(w, B) = sbp and des(w) + |B| = 2k or 2k + 1.
/// PreconditionError unless sbp lies in SBP_{n,k} (Even) or SBP_n^k (Odd).
LooselyBarredPermutation theta_inverse(const SimplyBarredPermutation& sbp, ThetaTarget target);

/// Blocks of letters in order; there are always |B| + 1 of them.
std::vector<std::vector<int>> blocks(const SimplyBarredPermutation& sbp);

/// 1-based index ceil((|B| + 1) / 2).
int central_block_index(const SimplyBarredPermutation& sbp);
std::vector<int> central_block(const SimplyBarredPermutation& sbp);

/// Rebuilds the bar set from consecutive block sizes.
SimplyBarredPermutation from_blocks(const std::vector<std::vector<int>>& blocks);

struct SbpClassification {
  bool normal;      // letters increase inside every block
  bool compatible;  // central block has at least two letters
};

SbpClassification classify_sbp(const SimplyBarredPermutation& sbp);

/// Calls fn on every (w, B) with B ⊆ [n], permutations in lexicographic order
/// and bar sets in increasing bit order.
template <class Fn>
void for_each_sbp(int n, Fn&& fn);

template <class Fn>
void for_each_lbp(int n, Fn&& fn);

// -- implementation ---------------------------------------------------------

template <class Fn>
void for_each_sbp(int n, Fn&& fn) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation w(word);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      fn(SimplyBarredPermutation(w, PositionSet::from_bits(mask << 1)));
    }
  } while (std::next_permutation(word.begin(), word.end()));
}

template <class Fn>
void for_each_lbp(int n, Fn&& fn) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  do {
    const Permutation w(word);
    for (std::uint32_t mask = 0; mask < (1u << (n + 1)); ++mask) {
      fn(LooselyBarredPermutation(w, PositionSet::from_bits(mask)));
    }
  } while (std::next_permutation(word.begin(), word.end()));
}

}  // namespace signedpaths
