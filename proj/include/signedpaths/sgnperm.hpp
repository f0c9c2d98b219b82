#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "signedpaths/position_set.hpp"

namespace signedpaths {

/// Coxeter type selecting which descent/inversion conventions apply.
enum class Kind { A, B, D };

const char* to_string(Kind kind);

/// Largest n accepted by the value types. Enumeration has its own, much
/// smaller, budget (see enumerate.hpp).
inline constexpr int kMaxRank = 30;

/// A permutation of [n] = {1..n}, written as the word w_1 ... w_n.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `word` contains every value of [n] once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  /// w(i), 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  /// w^{-1}(v): the position (1-based) of the letter v.
  int position_of(int v) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}

  std::vector<int> word_;

  friend class GroupCursor;
  friend Permutation unrank_permutation(int n, std::uint64_t rank);
};

/// A signed permutation of [n], stored in window notation u_1 ... u_n.
/// The prefix u_{-n} ... u_{-1} of the full notation is the reversed,
/// sign-flipped window and is computed on demand.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  /// Throws PreconditionError unless the absolute values form a permutation of [n].
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  static SignedPermutation from_permutation(const Permutation& w);

  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// u_i for i in ±[n] (u_{-i} = -u_i). u_0 is not stored; see descent_set.
  int operator()(int i) const {
    return i > 0 ? window_[static_cast<std::size_t>(i - 1)] : -window_[static_cast<std::size_t>(-i - 1)];
  }

  /// u_{-n} ... u_{-1} u_1 ... u_n.
  std::vector<int> full_notation() const;

  int negative_count() const;
  bool is_even_signed() const { return negative_count() % 2 == 0; }

  /// Lexicographic on window words, negative letters ordered by value.
  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  struct Unchecked {};
  SignedPermutation(std::vector<int> window, Unchecked) : window_(std::move(window)) {}

  std::vector<int> window_;

  friend class GroupCursor;
  friend SignedPermutation unrank_signed(int n, Kind kind, std::uint64_t rank);
};

// -- descents ---------------------------------------------------------------

/// Desc(w) ⊆ {1..n-1}.
PositionSet descent_set(const Permutation& w);

/// Kind A: positions i in {1..n-1} with u_i > u_{i+1} (the strictly positive
/// type B descents; equals Desc(w) for an all-positive window).
/// Kind B: positions {0..n-1} with sentinel u_0 = 0.
/// Kind D: positions {0..n-1} with sentinel u_0 = -u_2; throws DomainError for n < 2.
PositionSet descent_set(const SignedPermutation& u, Kind kind);

int descent_count(const Permutation& w);
int descent_count(const SignedPermutation& u, Kind kind);

/// Type D descents in the full-notation convention: positions in
/// {-1, 1, ..., n-1}, where -1 is a descent iff u_{-1} = -u_1 > u_2.
/// Defined on all of B_n for n >= 2 (DomainError otherwise).
std::vector<int> descent_set_d_full(const SignedPermutation& u);

// -- inversions -------------------------------------------------------------

/// Positive pairs (i, j), 1 <= i < j <= n, and negative pairs (i, j),
/// i < 0, 1 <= |i| <= j <= n. Both lists are sorted.
struct InversionSet {
  std::vector<std::pair<int, int>> positive;
  std::vector<std::pair<int, int>> negative;

  std::size_t size() const { return positive.size() + negative.size(); }
  bool empty() const { return positive.empty() && negative.empty(); }
  bool is_subset_of(const InversionSet& other) const;

  bool operator==(const InversionSet&) const = default;
};

/// inv(w) = {(i, j) : i < j, w^{-1}(i) > w^{-1}(j)}.
InversionSet inversion_set(const Permutation& w);

/// Kind A: the positive pairs only. Kind B: inv_B(u). Kind D: inv_B(u)
/// without the pairs (-i, i).
InversionSet inversion_set(const SignedPermutation& u, Kind kind);

// -- mates, smoothness, chi -------------------------------------------------

/// Flips the sign of the first window letter. Involution; identity on n = 0.
SignedPermutation mate(const SignedPermutation& u);

/// u_1 and u_2 share a sign. DomainError for n < 2.
bool is_smooth(const SignedPermutation& u);

struct Classification {
  bool smooth;
  bool even_signed;
};

/// DomainError for n < 2 (smoothness undefined).
Classification classify(const SignedPermutation& u);

/// The smooth member of {u, mate(u)}.
SignedPermutation smooth_representative(const SignedPermutation& u);

/// The even-signed member of {u, mate(u)} (n >= 1).
SignedPermutation even_representative(const SignedPermutation& u);

struct ChiImage {
  int x;
  SignedPermutation tail;

  bool operator==(const ChiImage&) const = default;
};

/// Sends a non-smooth u in B_n to (|u_1|, v) where v in B_{n-1} is u_2 ... u_n
/// renamed by the order-preserving bijection ±[n] \ {±x} -> ±[n-1].
/// PreconditionError for smooth input; DomainError for n < 2.
ChiImage chi(const SignedPermutation& u);

/// The unique non-smooth u with chi(u) = (x, v). Requires v of size >= 1 and
/// 1 <= x <= v.size() + 1.
SignedPermutation chi_inverse(int x, const SignedPermutation& v);

// -- window decomposition ---------------------------------------------------

/// u's window = iota ∘ w, with iota the order-preserving injection
/// [n] -> ±[n] whose image meets [n] in `positive_image`.
struct WindowDecomposition {
  Permutation w;
  PositionSet positive_image;

  bool operator==(const WindowDecomposition&) const = default;
};

WindowDecomposition window_decomposition(const SignedPermutation& u);
SignedPermutation compose_window(const WindowDecomposition& d);

}  // namespace signedpaths
