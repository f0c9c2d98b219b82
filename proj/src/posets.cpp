#include "signedpaths/posets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "signedpaths/enumerate.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/text.hpp"

namespace signedpaths {

struct FinitePoset::Cache {
  std::once_flag relation_once;
  Relation relation;
  std::once_flag covers_once;
  CoverData covers;
};

FinitePoset::FinitePoset(std::vector<std::string> labels, Leq leq)
    : labels_(std::move(labels)), leq_(std::move(leq)), cache_(std::make_shared<Cache>()) {}

const FinitePoset::Relation& FinitePoset::relation() const {
  std::call_once(cache_->relation_once, [this] {
    const std::size_t n = size();
    Relation& r = cache_->relation;
    r.up.assign(n, Bits(n));
    r.down.assign(n, Bits(n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (leq_(x, y)) {
          r.up[x].set(y);
          r.down[y].set(x);
        }
      }
    }
  });
  return cache_->relation;
}

const FinitePoset::CoverData& FinitePoset::cover_data() const {
  std::call_once(cache_->covers_once, [this] {
    const Relation& r = relation();
    const std::size_t n = size();
    CoverData& c = cache_->covers;
    c.lower_count.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      Bits strict = r.up[x];
      strict.reset(x);
      // y covers x iff y is minimal in the strict up-set of x.
      for (std::size_t y = strict.find_first(); y != Bits::npos; y = strict.find_next(y)) {
        Bits between = r.down[y] & strict;
        between.reset(y);
        if (between.none()) {
          c.pairs.emplace_back(x, y);
          ++c.lower_count[y];
        }
      }
    }
  });
  return cache_->covers;
}

const std::vector<std::pair<std::size_t, std::size_t>>& FinitePoset::covers() const { return cover_data().pairs; }

bool FinitePoset::is_partial_order() const {
  const Relation& r = relation();
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!r.up[x].test(x)) return false;
    for (std::size_t y = r.up[x].find_first(); y != Bits::npos; y = r.up[x].find_next(y)) {
      if (y != x && r.up[y].test(x)) return false;
      if (!r.up[y].is_subset_of(r.up[x])) return false;
    }
  }
  return true;
}

// -- weak orders ------------------------------------------------------------------

namespace {

void check_kind(const SignedPermutation& u, Kind kind) {
  if (kind == Kind::A) {
    for (int letter : u.window()) {
      if (letter < 0) throw PreconditionError("weak_leq: kind A needs all-positive windows");
    }
  }
  if (kind == Kind::D && !u.is_even_signed()) throw PreconditionError("weak_leq: kind D needs even-signed inputs");
}

// Inversion sets as bit masks over a fixed numbering of the possible pairs.
class InversionIndex {
 public:
  explicit InversionIndex(int n) {
    int next = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) index_[{i, j}] = next++;
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) index_[{-i, j}] = next++;
    if (next > 64) throw ResourceError("weak order: n too large for the inversion mask");
  }

  std::uint64_t mask(const InversionSet& inv) const {
    std::uint64_t out = 0;
    for (const auto& p : inv.positive) out |= std::uint64_t{1} << index_.at(p);
    for (const auto& p : inv.negative) out |= std::uint64_t{1} << index_.at(p);
    return out;
  }

 private:
  std::map<std::pair<int, int>, int> index_;
};

}  // namespace

bool weak_leq(const SignedPermutation& a, const SignedPermutation& b, Kind kind) {
  if (a.size() != b.size()) throw PreconditionError("weak_leq: sizes differ");
  check_kind(a, kind);
  check_kind(b, kind);
  return inversion_set(a, kind).is_subset_of(inversion_set(b, kind));
}

bool weak_leq(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw PreconditionError("weak_leq: sizes differ");
  return inversion_set(a).is_subset_of(inversion_set(b));
}

std::vector<SignedPermutation> weak_order_elements(int n, Kind kind) { return enumerate_group(n, kind); }

FinitePoset weak_order_poset(int n, Kind kind, std::size_t max_elements) {
  if (group_order(n, kind) > max_elements) throw ResourceError("weak_order_poset: group exceeds the poset size limit");
  const auto elements = weak_order_elements(n, kind);
  const InversionIndex index(n);
  auto masks = std::make_shared<std::vector<std::uint64_t>>();
  std::vector<std::string> labels;
  for (const auto& u : elements) {
    masks->push_back(index.mask(inversion_set(u, kind)));
    labels.push_back(format_signed(u));
  }
  return FinitePoset(std::move(labels), [masks](std::size_t x, std::size_t y) {
    return ((*masks)[x] & ~(*masks)[y]) == 0;
  });
}

bool tg_leq(const ThresholdPair& a, const ThresholdPair& b) {
  return weak_leq(a.w, b.w) && a.graph.is_subgraph_of(b.graph);
}

FinitePoset tg_poset(int n, int max_n) {
  if (n > max_n) throw ResourceError("tg_poset: n exceeds the configured limit");
  auto elements = std::make_shared<std::vector<ThresholdPair>>(enumerate_tg(n));
  std::vector<std::string> labels;
  for (const auto& p : *elements) labels.push_back(format_tg_pair(p));
  return FinitePoset(std::move(labels), [elements](std::size_t x, std::size_t y) {
    return tg_leq((*elements)[x], (*elements)[y]);
  });
}

// -- lattice structure --------------------------------------------------------------

namespace {

// The least element of `bounds` w.r.t. `above` (above[x] = elements >= x), if any.
bool has_least(const FinitePoset::Bits& bounds, const std::vector<FinitePoset::Bits>& above) {
  std::size_t best = FinitePoset::Bits::npos;
  std::size_t best_count = 0;
  for (std::size_t z = bounds.find_first(); z != FinitePoset::Bits::npos; z = bounds.find_next(z)) {
    const std::size_t c = above[z].count();
    if (best == FinitePoset::Bits::npos || c > best_count) {
      best = z;
      best_count = c;
    }
  }
  return best != FinitePoset::Bits::npos && bounds.is_subset_of(above[best]);
}

}  // namespace

LatticeCheck lattice_check(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<FinitePoset::Bits> up(n), down(n);
  for (std::size_t x = 0; x < n; ++x) {
    up[x] = p.up_set(x);
    down[x] = p.down_set(x);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!has_least(up[a] & up[b], up)) return {false, std::make_pair(a, b), "join"};
      if (!has_least(down[a] & down[b], down)) return {false, std::make_pair(a, b), "meet"};
    }
  }
  // A lattice needs a top and a bottom even when it has a single element.
  if (n == 0) return {false, std::nullopt, "join"};
  return {true, std::nullopt, ""};
}

IsomorphismCheck order_isomorphism_check(const std::vector<std::size_t>& image, const FinitePoset& p,
                                         const FinitePoset& q) {
  if (image.size() != p.size() || p.size() != q.size()) throw PreconditionError("order_isomorphism_check: sizes differ");
  std::vector<bool> hit(q.size(), false);
  for (std::size_t y : image) {
    if (y >= q.size() || hit[y]) throw PreconditionError("order_isomorphism_check: map is not a bijection");
    hit[y] = true;
  }
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != q.leq(image[x], image[y])) return {false, std::make_pair(x, y)};
    }
  }
  return {true, std::nullopt};
}

std::size_t join_irreducible_count(const FinitePoset& p) {
  if (!lattice_check(p).is_lattice) throw PreconditionError("join_irreducible_count: poset is not a lattice");
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x) count += p.lower_cover_count(x) == 1 ? 1 : 0;
  return count;
}

// -- export ---------------------------------------------------------------------------

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t x = 0; x < p.size(); ++x) out << "  n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  for (auto [x, y] : p.covers()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string covers_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  return nlohmann::json{{"elements", p.labels()}, {"covers", covers}}.dump();
}

}  // namespace signedpaths
