#include <doctest.h>

#include <json.hpp>

#include "signedpaths/enumerate.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/text.hpp"
#include "support.hpp"

using namespace signedpaths;
using testing::example_u;
using testing::example_w;
using testing::perm;
using testing::sp;

TEST_SUITE("text") {
  TEST_CASE("signed permutations") {
    CHECK(format_signed(example_u()) == "-2,3,1,6,-4,-7,5");
    CHECK(parse_signed("-2,3,1,6,-4,-7,5") == example_u());
    CHECK(parse_signed("-231") == sp({-2, 3, 1}));
    CHECK(parse_signed(" -2, 3 ,1 ") == sp({-2, 3, 1}));
    const auto big = parse_signed("10,-9,8,7,6,5,4,3,2,1");
    CHECK(big.size() == 10);
    CHECK(big(2) == -9);
    CHECK(parse_signed(format_signed(big)) == big);
    for (const auto& u : enumerate_group(4, Kind::B)) REQUIRE(parse_signed(format_signed(u)) == u);
    CHECK_THROWS_AS(parse_signed("1,1"), ParseError);
    CHECK_THROWS_AS(parse_signed("1,x"), ParseError);
    CHECK_THROWS_AS(parse_signed("1,,2"), ParseError);
  }

  TEST_CASE("permutations") {
    CHECK(format_permutation(example_w()) == "7423165");
    CHECK(parse_permutation("7423165") == example_w());
    CHECK(parse_permutation("3,1,2") == perm({3, 1, 2}));
    CHECK_THROWS_AS(parse_permutation("-12"), ParseError);
  }

  TEST_CASE("barred permutations") {
    const SimplyBarredPermutation sbp(example_w(), PositionSet{2, 3, 6});
    CHECK(format_sbp(sbp) == "74|2|316|5");
    CHECK(parse_sbp("74|2|316|5") == sbp);
    const SimplyBarredPermutation trailing(perm({1, 2}), PositionSet{2});
    CHECK(format_sbp(trailing) == "12|");
    CHECK(parse_sbp("12|") == trailing);
    CHECK_THROWS_AS(parse_sbp("|12"), ParseError);
    CHECK_THROWS_AS(parse_sbp("1||2"), ParseError);
    CHECK_THROWS_AS(parse_sbp("1|1"), ParseError);
    CHECK(format_lbp(LooselyBarredPermutation(perm({2, 1}), PositionSet{0, 1})) == "|2|1");
    for_each_sbp(3, [](const SimplyBarredPermutation& s) { REQUIRE(parse_sbp(format_sbp(s)) == s); });
  }

  TEST_CASE("graphs") {
    const SimpleGraph g(3, {{1, 3}, {2, 1}});
    CHECK(format_graph(g) == "3; 1-2, 1-3");
    CHECK(parse_graph("3; 1-2, 1-3") == g);
    CHECK(format_graph(SimpleGraph(4)) == "4;");
    CHECK(parse_graph("4;") == SimpleGraph(4));
    CHECK_THROWS_AS(parse_graph("3; 1-4"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1-2"), ParseError);
    CHECK(format_tg_pair(tg_pair(sp({-2, 1}))).find(" : ") != std::string::npos);
  }

  TEST_CASE("JSON round trips") {
    const SimpleGraph g(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(to_json(g) == nlohmann::json::parse(R"({"n": 4, "edges": [[1, 2], [1, 3], [1, 4]]})"));
    CHECK(graph_from_json(to_json(g)) == g);
    const CoefficientVector c{1, 44, 102, 44, 1};
    CHECK(coefficients_from_json(to_json(c)) == c);
    for (const Identity id : all_identities()) {
      const auto report = verify_identity(id, 4);
      CHECK(identity_report_from_json(nlohmann::json::parse(to_json(report).dump())) == report);
    }
    const auto counts = threshold_counts(5);
    CHECK(threshold_counts_from_json(to_json(counts)) == counts);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2})")), ParseError);
    CHECK_THROWS_AS(identity_report_from_json(nlohmann::json::parse(R"({"identity": "nope", "n": 1, "rows": []})")), ParseError);
    CHECK_THROWS_AS(coefficients_from_json(nlohmann::json::parse(R"(["a"])")), ParseError);
  }
}
