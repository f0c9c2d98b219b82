#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "signedpaths/enumerate.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/sgnperm.hpp"
#include "support.hpp"

using namespace signedpaths;
using testing::example_u;
using testing::example_w;
using testing::perm;
using testing::sp;

TEST_SUITE("sgnperm") {
  TEST_CASE("value types reject malformed words") {
    CHECK_THROWS_AS(Permutation({1, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 1}), PreconditionError);
    CHECK_THROWS_AS(SignedPermutation({2, -2}), PreconditionError);
    CHECK_THROWS_AS(SignedPermutation({1, 3}), PreconditionError);
    CHECK_NOTHROW(SignedPermutation({-1}));
  }

  TEST_CASE("full notation is the reversed negated window followed by the window") {
    CHECK(sp({-2, 3, 1}).full_notation() == std::vector<int>{-1, -3, 2, -2, 3, 1});
    const auto u = example_u();
    for (int i = 1; i <= 7; ++i) CHECK(u(-i) == -u(i));
  }

  TEST_CASE("permutation inverse and positions") {
    const auto w = example_w();
    CHECK(w.position_of(7) == 1);
    CHECK(w.inverse().word() == std::vector<int>{5, 3, 4, 2, 7, 6, 1});
    CHECK(w.inverse().inverse() == w);
  }

  TEST_CASE("descent sets on the running example") {
    CHECK(descent_set(example_w()) == PositionSet{1, 2, 4, 6});
    CHECK(descent_set(Permutation::identity(6)).empty());
    CHECK(descent_set(example_u(), Kind::B) == PositionSet{0, 2, 4, 5});
    CHECK(descent_set(SignedPermutation::identity(5), Kind::B).empty());
    CHECK_THROWS_AS(descent_set(sp({1}), Kind::D), DomainError);
  }

  TEST_CASE("descent counts agree with the direct definitions on B_4") {
    for (const auto& window : oracle::signed_windows(4)) {
      const auto u = sp(window);
      CHECK(descent_count(u, Kind::A) == oracle::des_a(window));
      CHECK(descent_count(u, Kind::B) == oracle::des_b(window));
      CHECK(descent_count(u, Kind::D) == oracle::des_d(window));
    }
  }

  TEST_CASE("inversion sets agree with the definition on B_4") {
    for (const auto& window : oracle::signed_windows(4)) {
      const auto u = sp(window);
      const auto b = inversion_set(u, Kind::B);
      REQUIRE(testing::as_set(b) == oracle::inversions_b(window));
      const auto d = inversion_set(u, Kind::D);
      std::size_t diagonal = 0;
      for (const auto& [i, j] : b.negative) diagonal += -i == j ? 1 : 0;
      CHECK(d.size() + diagonal == b.size());
      CHECK(inversion_set(u, Kind::A).negative.empty());
      CHECK(inversion_set(u, Kind::A).positive == b.positive);
    }
  }

  TEST_CASE("negative inversions of the running example as unordered pairs") {
    std::multiset<std::pair<int, int>> pairs;
    for (const auto& [i, j] : inversion_set(example_u(), Kind::B).negative) pairs.emplace(std::min(-i, j), std::max(-i, j));
    const std::multiset<std::pair<int, int>> expected{{7, 7}, {4, 7}, {2, 7}, {3, 7}, {1, 7}, {6, 7},
                                                      {4, 4}, {2, 4}, {3, 4}, {1, 4}, {4, 6}, {2, 2}};
    CHECK(pairs == expected);
  }

  TEST_CASE("inversion counts in B_2") {
    CHECK(inversion_set(sp({-2, -1}), Kind::B).size() == 3);
    CHECK(inversion_set(sp({-1, -2}), Kind::B).size() == 4);
    std::size_t longest = 0;
    for (const auto& window : oracle::signed_windows(2)) longest = std::max(longest, oracle::inversions_b(window).size());
    CHECK(longest == 4);
    CHECK(inversion_set(SignedPermutation::identity(4), Kind::A).empty());
    CHECK(inversion_set(Permutation::identity(4)).empty());
  }

  TEST_CASE("mates") {
    CHECK(mate(example_u()) == sp({2, 3, 1, 6, -4, -7, 5}));
    for (const auto& u : enumerate_group(4, Kind::B)) CHECK(mate(mate(u)) == u);
    for (const auto& u : enumerate_group(5, Kind::B)) {
      CHECK(u.is_even_signed() != mate(u).is_even_signed());
      CHECK(even_representative(u).is_even_signed());
    }
    for (const auto& u : enumerate_group(4, Kind::B)) CHECK(is_smooth(u) != is_smooth(mate(u)));
  }

  TEST_CASE("classification and smooth representatives") {
    const auto c = classify(example_u());
    CHECK_FALSE(c.smooth);
    CHECK_FALSE(c.even_signed);
    const auto id = classify(SignedPermutation::identity(4));
    CHECK(id.smooth);
    CHECK(id.even_signed);
    CHECK(smooth_representative(example_u()) == sp({2, 3, 1, 6, -4, -7, 5}));
    for (const auto& u : enumerate_group(4, Kind::B)) {
      const auto s = smooth_representative(u);
      CHECK(is_smooth(s));
      CHECK(smooth_representative(s) == s);
    }
    CHECK_THROWS_AS(classify(sp({1})), DomainError);
  }

  TEST_CASE("chi on the worked examples") {
    CHECK(chi(example_u()) == ChiImage{2, sp({2, 1, 5, -3, -6, 4})});
    CHECK(chi(sp({6, -1, -2, -3, -4, -7, 5})) == ChiImage{6, sp({-1, -2, -3, -4, -6, 5})});
    CHECK(chi_inverse(3, sp({-1, 5, -4, 2, 3})) == sp({3, -1, 6, -5, 2, 4}));
    CHECK_THROWS_AS(chi(SignedPermutation::identity(3)), PreconditionError);
  }

  TEST_CASE("chi is a bijection onto [n] x B_{n-1} shifting descents by one") {
    for (int n = 2; n <= 5; ++n) {
      std::set<std::pair<int, SignedPermutation>> seen;
      for (const auto& u : enumerate_group(n, Kind::B)) {
        if (is_smooth(u)) continue;
        const auto image = chi(u);
        CHECK(chi_inverse(image.x, image.tail) == u);
        const auto tail_desc = descent_set(image.tail, Kind::B) - PositionSet{0};
        CHECK(tail_desc.size() == descent_count(u, Kind::B) - 1);
        seen.emplace(image.x, image.tail);
      }
      CHECK(seen.size() == static_cast<std::size_t>(n) * group_order(n - 1, Kind::B));
    }
  }

  TEST_CASE("window decomposition") {
    const auto d = window_decomposition(sp({3, -4, 1, -2, -5}));
    CHECK(d.w == perm({5, 2, 4, 3, 1}));
    CHECK(d.positive_image == PositionSet{1, 3});
    const auto id = window_decomposition(SignedPermutation::identity(4));
    CHECK(id.w == Permutation::identity(4));
    CHECK(id.positive_image == PositionSet{1, 2, 3, 4});
    for (const auto& u : enumerate_group(4, Kind::B)) CHECK(compose_window(window_decomposition(u)) == u);
  }

  TEST_CASE("strictly positive descents follow the decomposed permutation") {
    std::map<int, int> by_count;
    for (const auto& u : enumerate_group(3, Kind::B)) ++by_count[descent_count(u, Kind::A)];
    CHECK(by_count == std::map<int, int>{{0, 8}, {1, 32}, {2, 8}});
    for (int n = 1; n <= 6; ++n) {
      for_each_element(n, Kind::B, [](const SignedPermutation& u) {
        const auto positive = descent_set(u, Kind::B) - PositionSet{0};
        REQUIRE(positive.size() == descent_count(window_decomposition(u).w));
      });
    }
  }

  TEST_CASE("type D descents: mates, smooth elements and the two conventions") {
    for (int n = 2; n <= 6; ++n) {
      for_each_element(n, Kind::B, [](const SignedPermutation& u) {
        const auto full = descent_set_d_full(u);
        REQUIRE(full.size() == descent_set_d_full(mate(u)).size());
        if (is_smooth(u)) REQUIRE(descent_count(u, Kind::D) == descent_count(u, Kind::B));
        if (u.is_even_signed()) REQUIRE(static_cast<int>(full.size()) == descent_count(u, Kind::D));
      });
    }
  }
}

TEST_SUITE("enumerate") {
  TEST_CASE("group orders and stream sizes") {
    CHECK(enumerate_group(2, Kind::A).size() == 2);
    CHECK(enumerate_group(3, Kind::B).size() == 48);
    CHECK(enumerate_group(4, Kind::D).size() == 192);
    CHECK(group_order(0, Kind::D) == 1);
    CHECK(group_order(8, Kind::B) == 10321920);
  }

  TEST_CASE("streams are sorted, duplicate free and complete") {
    for (int n = 1; n <= 4; ++n) {
      const auto b = enumerate_group(n, Kind::B);
      CHECK(std::is_sorted(b.begin(), b.end()));
      CHECK(std::adjacent_find(b.begin(), b.end()) == b.end());
      std::set<std::vector<int>> windows;
      for (const auto& u : b) windows.insert(u.window());
      const auto all = oracle::signed_windows(n);
      CHECK(windows == std::set<std::vector<int>>(all.begin(), all.end()));
      const auto d = enumerate_group(n, Kind::D);
      CHECK(std::all_of(d.begin(), d.end(), [](const SignedPermutation& u) { return u.is_even_signed(); }));
      CHECK(d.size() == oracle::even_windows(n).size());
    }
  }

  TEST_CASE("unranking matches the stream") {
    for (const Kind kind : {Kind::A, Kind::B, Kind::D}) {
      const auto stream = enumerate_group(4, kind);
      for (std::size_t r = 0; r < stream.size(); ++r) CHECK(unrank_signed(4, kind, r) == stream[r]);
    }
    const auto perms = enumerate_permutations(5);
    for (std::size_t r = 0; r < perms.size(); ++r) CHECK(unrank_permutation(5, r) == perms[r]);
  }

  TEST_CASE("partitions cover the range evenly") {
    const auto parts = partition_ranks(10, 3);
    REQUIRE(parts.size() == 3);
    CHECK(parts.front().first == 0);
    CHECK(parts.back().second == 10);
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK(parts[i].first == parts[i - 1].second);
  }

  TEST_CASE("parallel reduction does not depend on the worker count") {
    auto visit = [](std::vector<long>& acc, const SignedPermutation& u) { ++acc[static_cast<std::size_t>(descent_count(u, Kind::B))]; };
    auto merge = [](std::vector<long>& a, const std::vector<long>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    };
    const std::vector<long> init(7, 0);
    const auto one = parallel_reduce(6, Kind::B, 1, init, visit, merge);
    const auto four = parallel_reduce(6, Kind::B, 4, init, visit, merge);
    CHECK(one == four);
  }

  TEST_CASE("budget is enforced before scanning") {
    CHECK_THROWS_AS(check_budget(9, Kind::B, EnumerationBudget{12, 1000}), ResourceError);
    CHECK_THROWS_AS(check_budget(13, Kind::A, EnumerationBudget{}), ResourceError);
    CHECK_NOTHROW(check_budget(8, Kind::B, EnumerationBudget{}));
  }
}
