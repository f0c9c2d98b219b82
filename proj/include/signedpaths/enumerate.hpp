#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "signedpaths/sgnperm.hpp"

namespace signedpaths {

/// Limits checked before any exhaustive scan starts.
struct EnumerationBudget {
  int max_n = 12;
  std::uint64_t max_elements = 100'000'000;
};

/// |S_n| = n!, |B_n| = 2^n n!, |D_n| = 2^{n-1} n! (and |D_0| = 1).
/// ResourceError when the order does not fit 64 bits.
std::uint64_t group_order(int n, Kind kind);

/// ResourceError if enumerating the group would break `budget`.
void check_budget(int n, Kind kind, const EnumerationBudget& budget);

/// The element of rank `rank` in lexicographic order of window words
/// (negative letters ordered by value). Kind A yields all-positive windows.
SignedPermutation unrank_signed(int n, Kind kind, std::uint64_t rank);
Permutation unrank_permutation(int n, std::uint64_t rank);

/// Walks a contiguous rank range of S_n, B_n or D_n in canonical order,
/// updating one element in place.
///
/// For kind D the cursor walks B_n ranks [2*first, 2*last) and skips the
/// odd-signed elements: consecutive B_n ranks 2r, 2r+1 differ only in the
/// sign of the last letter, so exactly one of them lies in D_n and D_n rank r
/// is the even one.
class GroupCursor {
 public:
  GroupCursor(int n, Kind kind, std::uint64_t first, std::uint64_t last);

  bool done() const { return remaining_ == 0; }
  const SignedPermutation& current() const { return current_; }
  void advance();

 private:
  bool step_b();

  int n_;
  Kind kind_;
  std::uint64_t remaining_;
  SignedPermutation current_;
};

/// Calls fn(u) for every element of ranks [first, last) in canonical order.
template <class Fn>
void for_each_in_range(int n, Kind kind, std::uint64_t first, std::uint64_t last, Fn&& fn) {
  for (GroupCursor cursor(n, kind, first, last); !cursor.done(); cursor.advance()) fn(cursor.current());
}

template <class Fn>
void for_each_element(int n, Kind kind, Fn&& fn, const EnumerationBudget& budget = {}) {
  check_budget(n, kind, budget);
  for_each_in_range(n, kind, 0, group_order(n, kind), std::forward<Fn>(fn));
}

/// Materialized canonical stream of the group (kind A as all-positive windows).
std::vector<SignedPermutation> enumerate_group(int n, Kind kind, const EnumerationBudget& budget = {});
std::vector<Permutation> enumerate_permutations(int n, const EnumerationBudget& budget = {});

/// Splits [0, total) into `parts` contiguous ranges whose sizes differ by at
/// most one. Depends only on (total, parts).
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(std::uint64_t total, unsigned parts);

/// Exhaustive fold over the group. Each worker folds one rank range of
/// partition_ranks(order, workers) into a copy of `init`; partial results
/// are merged in range order, so the result depends only on the inputs
/// whenever `merge` is associative.
template <class Acc, class Visit, class Merge>
Acc parallel_reduce(int n, Kind kind, unsigned workers, Acc init, Visit visit, Merge merge,
                    const EnumerationBudget& budget = {}) {
  check_budget(n, kind, budget);
  const std::uint64_t total = group_order(n, kind);
  workers = std::max(1u, workers);
  const auto ranges = partition_ranks(total, workers);
  std::vector<Acc> partial(ranges.size(), init);
  auto job = [&](std::size_t r) {
    for_each_in_range(n, kind, ranges[r].first, ranges[r].second,
                      [&](const SignedPermutation& u) { visit(partial[r], u); });
  };
  if (ranges.size() == 1) {
    job(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t r = 0; r < ranges.size(); ++r) threads.emplace_back(job, r);
    for (auto& t : threads) t.join();
  }
  Acc result = init;
  for (const Acc& p : partial) merge(result, p);
  return result;
}

}  // namespace signedpaths
