#include "signedpaths/enumerate.hpp"

#include <cstdlib>
#include <string>

#include "signedpaths/errors.hpp"

namespace signedpaths {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("group order does not fit 64 bits");
  return out;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

// Number of completions of a signed prefix when `free` letters remain.
std::uint64_t signed_block(int free) {
  if (free >= 64) throw ResourceError("group order does not fit 64 bits");
  return checked_mul(std::uint64_t{1} << free, factorial_u64(free));
}

}  // namespace

std::uint64_t group_order(int n, Kind kind) {
  if (n < 0) throw PreconditionError("group_order: n must be non-negative");
  switch (kind) {
    case Kind::A: return factorial_u64(n);
    case Kind::B: return signed_block(n);
    case Kind::D: return n == 0 ? 1 : signed_block(n) / 2;
  }
  return 0;
}

void check_budget(int n, Kind kind, const EnumerationBudget& budget) {
  if (n < 0) throw PreconditionError("enumeration: n must be non-negative");
  if (n > budget.max_n) {
    throw ResourceError("enumeration: n = " + std::to_string(n) + " exceeds the configured limit " +
                        std::to_string(budget.max_n));
  }
  const std::uint64_t order = group_order(n, kind);
  if (order > budget.max_elements) {
    throw ResourceError("enumeration: |" + std::string(to_string(kind)) + "_" + std::to_string(n) +
                        "| = " + std::to_string(order) + " exceeds the budget of " +
                        std::to_string(budget.max_elements) + " elements");
  }
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  if (rank >= group_order(n, Kind::A)) throw PreconditionError("unrank_permutation: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = factorial_u64(n - i - 1);
    const auto digit = static_cast<std::size_t>(rank / block);
    rank %= block;
    word.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(word), Permutation::Unchecked{});
}

SignedPermutation unrank_signed(int n, Kind kind, std::uint64_t rank) {
  if (rank >= group_order(n, kind)) throw PreconditionError("unrank_signed: rank out of range");
  if (kind == Kind::A) return SignedPermutation::from_permutation(unrank_permutation(n, rank));
  if (n == 0) return SignedPermutation{};

  const std::uint64_t b_rank = kind == Kind::D ? 2 * rank : rank;
  std::vector<int> abs_pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) abs_pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(n));
  std::uint64_t r = b_rank;
  for (int i = 0; i < n; ++i) {
    const int free = static_cast<int>(abs_pool.size());
    const std::uint64_t block = signed_block(free - 1);
    const auto digit = static_cast<int>(r / block);
    r %= block;
    // Available letters in increasing order: -a_max .. -a_min, a_min .. a_max.
    int value = 0;
    std::size_t erase_at = 0;
    if (digit < free) {
      erase_at = static_cast<std::size_t>(free - 1 - digit);
      value = -abs_pool[erase_at];
    } else {
      erase_at = static_cast<std::size_t>(digit - free);
      value = abs_pool[erase_at];
    }
    window.push_back(value);
    abs_pool.erase(abs_pool.begin() + static_cast<std::ptrdiff_t>(erase_at));
  }
  if (kind == Kind::D) {
    int negatives = 0;
    for (int v : window) negatives += v < 0 ? 1 : 0;
    if (negatives % 2 != 0) window.back() = -window.back();
  }
  return SignedPermutation(std::move(window), SignedPermutation::Unchecked{});
}

GroupCursor::GroupCursor(int n, Kind kind, std::uint64_t first, std::uint64_t last)
    : n_(n), kind_(kind), remaining_(last > first ? last - first : 0) {
  if (last > group_order(n, kind)) throw PreconditionError("GroupCursor: range exceeds group order");
  if (remaining_ > 0) current_ = unrank_signed(n, kind, first);
}

bool GroupCursor::step_b() {
  std::vector<int>& u = current_.window_;
  const int n = n_;
  // Rightmost position whose letter can be raised to a larger letter from
  // {±|u_j| : j >= i}; the suffix is then reset to its smallest arrangement.
  for (int i = n - 1; i >= 0; --i) {
    const int cur = u[static_cast<std::size_t>(i)];
    int best = 0;
    bool found = false;
    for (int j = i; j < n; ++j) {
      const int a = std::abs(u[static_cast<std::size_t>(j)]);
      for (int cand : {-a, a}) {
        if (cand > cur && (!found || cand < best)) {
          best = cand;
          found = true;
        }
      }
    }
    if (!found) continue;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - i));
    for (int j = i; j < n; ++j) {
      const int a = std::abs(u[static_cast<std::size_t>(j)]);
      if (a != std::abs(best)) rest.push_back(a);
    }
    std::sort(rest.begin(), rest.end(), std::greater<>());
    u[static_cast<std::size_t>(i)] = best;
    for (std::size_t k = 0; k < rest.size(); ++k) u[static_cast<std::size_t>(i) + 1 + k] = -rest[k];
    return true;
  }
  return false;
}

void GroupCursor::advance() {
  if (remaining_ == 0) return;
  if (--remaining_ == 0) return;
  switch (kind_) {
    case Kind::A:
      std::next_permutation(current_.window_.begin(), current_.window_.end());
      break;
    case Kind::B:
      step_b();
      break;
    case Kind::D:
      do {
        step_b();
      } while (!current_.is_even_signed());
      break;
  }
}

std::vector<SignedPermutation> enumerate_group(int n, Kind kind, const EnumerationBudget& budget) {
  std::vector<SignedPermutation> out;
  check_budget(n, kind, budget);
  out.reserve(static_cast<std::size_t>(group_order(n, kind)));
  for_each_element(n, kind, [&](const SignedPermutation& u) { out.push_back(u); }, budget);
  return out;
}

std::vector<Permutation> enumerate_permutations(int n, const EnumerationBudget& budget) {
  std::vector<Permutation> out;
  check_budget(n, Kind::A, budget);
  out.reserve(static_cast<std::size_t>(group_order(n, Kind::A)));
  for_each_element(n, Kind::A, [&](const SignedPermutation& u) { out.emplace_back(u.window()); }, budget);
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(std::uint64_t total, unsigned parts) {
  parts = std::max(1u, parts);
  if (total < parts) parts = static_cast<unsigned>(std::max<std::uint64_t>(1, total));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(parts);
  const std::uint64_t base = total / parts;
  const std::uint64_t extra = total % parts;
  std::uint64_t start = 0;
  for (unsigned p = 0; p < parts; ++p) {
    const std::uint64_t len = base + (p < extra ? 1 : 0);
    out.emplace_back(start, start + len);
    start += len;
  }
  return out;
}

}  // namespace signedpaths
