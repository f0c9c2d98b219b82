#include <doctest.h>

#include <algorithm>
#include <thread>

#include <json.hpp>

#include "oracles.hpp"
#include "signedpaths/enumerate.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/posets.hpp"
#include "support.hpp"

using namespace signedpaths;
using testing::sp;

namespace {

FinitePoset chain(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(labels, [](std::size_t x, std::size_t y) { return x <= y; });
}

FinitePoset antichain2() {
  return FinitePoset({"a", "b"}, [](std::size_t x, std::size_t y) { return x == y; });
}

std::vector<std::vector<bool>> leq_matrix(const FinitePoset& p) {
  std::vector<std::vector<bool>> m(p.size(), std::vector<bool>(p.size()));
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) m[x][y] = p.leq(x, y);
  return m;
}

bool naive_is_lattice(const FinitePoset& p) {
  const auto m = leq_matrix(p);
  const int n = static_cast<int>(p.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (oracle::naive_join(m, x, y) < 0 || oracle::naive_meet(m, x, y) < 0) return false;
  return true;
}

// Elements of TG_n matched to the weak D_n stream through tg_pair.
std::vector<std::size_t> tg_image(int n) {
  const auto tg = enumerate_tg(n);
  std::vector<std::size_t> image;
  for (const auto& u : weak_order_elements(n, Kind::D)) {
    const auto it = std::lower_bound(tg.begin(), tg.end(), tg_pair(u));
    image.push_back(static_cast<std::size_t>(it - tg.begin()));
  }
  return image;
}

}  // namespace

TEST_SUITE("posets") {
  TEST_CASE("weak order comparisons") {
    for (const Kind kind : {Kind::A, Kind::B, Kind::D}) {
      const auto elements = weak_order_elements(3, kind);
      for (const auto& u : elements) CHECK(weak_leq(SignedPermutation::identity(3), u, kind));
    }
    CHECK(weak_leq(Permutation::identity(3), testing::perm({3, 2, 1})));
    CHECK_FALSE(weak_leq(testing::perm({3, 2, 1}), Permutation::identity(3)));
    CHECK_THROWS_AS(weak_leq(sp({1, 2}), sp({1, 2, 3}), Kind::B), PreconditionError);
    CHECK_THROWS_AS(weak_leq(sp({-1, 2}), sp({1, 2}), Kind::A), PreconditionError);
    CHECK_THROWS_AS(weak_leq(sp({-1, 2}), sp({1, 2}), Kind::D), PreconditionError);
  }

  TEST_CASE("weak order on S_3") {
    const auto p = weak_order_poset(3, Kind::A);
    CHECK(p.size() == 6);
    CHECK(p.is_partial_order());
    int minima = 0;
    int maxima = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      minima += p.down_set(x).count() == 1 ? 1 : 0;
      maxima += p.up_set(x).count() == 1 ? 1 : 0;
    }
    CHECK(minima == 1);
    CHECK(maxima == 1);
    CHECK(lattice_check(p).is_lattice);
  }

  TEST_CASE("small hand-made posets") {
    const auto c = chain(3);
    CHECK(c.covers().size() == 2);
    for (std::size_t m = 1; m <= 6; ++m) CHECK(join_irreducible_count(chain(m + 1)) == m);
    const auto a = antichain2();
    const auto check = lattice_check(a);
    CHECK_FALSE(check.is_lattice);
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(check.missing == "join");
    CHECK_THROWS_AS(join_irreducible_count(a), PreconditionError);
    CHECK(order_isomorphism_check({0, 1}, a, a).is_isomorphism);
    CHECK_FALSE(order_isomorphism_check({0, 1, 2}, c, chain(3)).witness.has_value());
    CHECK_FALSE(order_isomorphism_check({1, 0}, chain(2), chain(2)).is_isomorphism);
    CHECK_THROWS_AS(order_isomorphism_check({0, 0, 1}, c, c), PreconditionError);
    CHECK_THROWS_AS(order_isomorphism_check({0, 1}, c, c), PreconditionError);
  }

  TEST_CASE("lattice check agrees with naive joins and meets") {
    for (const Kind kind : {Kind::A, Kind::B, Kind::D}) {
      for (int n = (kind == Kind::D ? 2 : 1); n <= 3; ++n) {
        const auto p = weak_order_poset(n, kind);
        CHECK(lattice_check(p).is_lattice == naive_is_lattice(p));
        CHECK(lattice_check(p).is_lattice);
      }
    }
    for (int n = 1; n <= 3; ++n) CHECK(naive_is_lattice(tg_poset(n)));
    const auto broken = FinitePoset({"0", "a", "b", "c", "d"}, [](std::size_t x, std::size_t y) {
      // Bottom below a, b; a and b both below c and d: no join of a and b.
      return x == y || x == 0 || ((x == 1 || x == 2) && (y == 3 || y == 4));
    });
    CHECK_FALSE(lattice_check(broken).is_lattice);
    CHECK_FALSE(naive_is_lattice(broken));
  }

  TEST_CASE("lower covers count descents") {
    for (const auto& [n, kind] : std::vector<std::pair<int, Kind>>{{4, Kind::A}, {3, Kind::B}, {4, Kind::B}, {4, Kind::D}}) {
      const auto p = weak_order_poset(n, kind);
      const auto elements = weak_order_elements(n, kind);
      REQUIRE(elements.size() == p.size());
      for (std::size_t x = 0; x < p.size(); ++x) CHECK(static_cast<int>(p.lower_cover_count(x)) == descent_count(elements[x], kind));
    }
  }

  TEST_CASE("join-irreducibles") {
    for (int n = 3; n <= 6; ++n) CHECK(join_irreducible_count(weak_order_poset(n, Kind::A)) == (std::size_t{1} << n) - n - 1);
    for (int n = 2; n <= 4; ++n) {
      CHECK(static_cast<Count>(join_irreducible_count(weak_order_poset(n, Kind::B))) == power(3, n) - n - 1);
      CHECK(static_cast<Count>(join_irreducible_count(weak_order_poset(n, Kind::D))) == eulerian(n, 1, Kind::D, Method::Formula));
    }
    CHECK(join_irreducible_count(weak_order_poset(4, Kind::D)) == 44);
  }

  TEST_CASE("TG_n order") {
    const auto two = tg_poset(2);
    CHECK(two.size() == 4);
    CHECK(lattice_check(two).is_lattice);
    const auto three = tg_poset(3);
    CHECK(lattice_check(three).is_lattice);
    const auto four = tg_poset(4);
    CHECK(four.size() == 192);
    const auto tg = enumerate_tg(4);
    const auto bottom = std::find(tg.begin(), tg.end(), ThresholdPair{Permutation::identity(4), SimpleGraph(4)});
    REQUIRE(bottom != tg.end());
    CHECK(four.up_set(static_cast<std::size_t>(bottom - tg.begin())).count() == 192);
    CHECK_THROWS_AS(tg_poset(6), ResourceError);
  }

  TEST_CASE("tg_pair is an order isomorphism from weak D_n") {
    for (int n = 2; n <= 4; ++n) {
      const auto check = order_isomorphism_check(tg_image(n), weak_order_poset(n, Kind::D), tg_poset(n));
      CHECK(check.is_isomorphism);
      CHECK_FALSE(check.witness.has_value());
    }
  }

  TEST_CASE("concurrent readers see the same covers") {
    const auto p = weak_order_poset(4, Kind::B);
    std::vector<std::size_t> counts(4, 0);
    std::vector<std::thread> readers;
    for (std::size_t t = 0; t < counts.size(); ++t) readers.emplace_back([&, t] { counts[t] = p.covers().size(); });
    for (auto& r : readers) r.join();
    CHECK(std::all_of(counts.begin(), counts.end(), [&](std::size_t c) { return c == counts.front(); }));
    CHECK(counts.front() > 0);
  }

  TEST_CASE("exports") {
    const auto p = chain(3);
    const auto dot = to_dot(p, "chain");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    const auto j = nlohmann::json::parse(covers_json(p));
    CHECK(j.at("elements").size() == 3);
    CHECK(j.at("covers").size() == 2);
    CHECK(j.at("covers")[0] == nlohmann::json::array({0, 1}));
  }
}
