#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "signedpaths/sgnperm.hpp"
#include "signedpaths/threshold.hpp"

namespace signedpaths {

/// A finite poset on indices 0..size()-1. The order is given by a
/// comparability callback; the full relation and the covers are computed
/// once, on first use, and are safe to read from several threads.
class FinitePoset {
 public:
  using Leq = std::function<bool(std::size_t, std::size_t)>;
  using Bits = boost::dynamic_bitset<>;

  FinitePoset(std::vector<std::string> labels, Leq leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(std::size_t x, std::size_t y) const { return relation().up[x].test(y); }
  /// {y : x <= y} and {y : y <= x}.
  const Bits& up_set(std::size_t x) const { return relation().up[x]; }
  const Bits& down_set(std::size_t x) const { return relation().down[x]; }

  /// Pairs (x, y) with y covering x, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const;
  std::size_t lower_cover_count(std::size_t x) const { return cover_data().lower_count[x]; }

  /// Exhaustive check that the callback is reflexive, antisymmetric and transitive.
  bool is_partial_order() const;

 private:
  struct Relation {
    std::vector<Bits> up;
    std::vector<Bits> down;
  };
  struct CoverData {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> lower_count;
  };
  struct Cache;

  const Relation& relation() const;
  const CoverData& cover_data() const;

  std::vector<std::string> labels_;
  Leq leq_;
  std::shared_ptr<Cache> cache_;
};

/// Inversion-set containment. PreconditionError when sizes differ, when a
/// kind A input has a negative letter, or when a kind D input is odd-signed.
bool weak_leq(const SignedPermutation& a, const SignedPermutation& b, Kind kind);
bool weak_leq(const Permutation& a, const Permutation& b);

/// Weak order on S_n (all-positive windows), B_n or D_n, elements in
/// canonical enumeration order. ResourceError when |group| > max_elements.
FinitePoset weak_order_poset(int n, Kind kind, std::size_t max_elements = 4000);
std::vector<SignedPermutation> weak_order_elements(int n, Kind kind);

/// TG_n ordered coordinatewise: weak order on w, inclusion on edges.
/// Elements in the order of enumerate_tg. ResourceError for n > max_n.
FinitePoset tg_poset(int n, int max_n = 5);
bool tg_leq(const ThresholdPair& a, const ThresholdPair& b);

struct LatticeCheck {
  bool is_lattice;
  /// First pair (in index order) without a join or meet, and which one failed.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string missing;  // "join" or "meet"; empty when is_lattice
};

LatticeCheck lattice_check(const FinitePoset& p);

struct IsomorphismCheck {
  bool is_isomorphism;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // x, y in P
};

/// image[x] is the element of Q assigned to x in P. PreconditionError unless
/// the map is a bijection.
IsomorphismCheck order_isomorphism_check(const std::vector<std::size_t>& image, const FinitePoset& p,
                                         const FinitePoset& q);

/// Elements with exactly one lower cover. PreconditionError unless p is a lattice.
std::size_t join_irreducible_count(const FinitePoset& p);

/// Hasse diagram, edges pointing upwards.
std::string to_dot(const FinitePoset& p, const std::string& name = "poset");

/// {"elements": [labels], "covers": [[lower, upper], ...]}.
std::string covers_json(const FinitePoset& p);

}  // namespace signedpaths
