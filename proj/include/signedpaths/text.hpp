#pragma once

// Text and JSON forms of the value types.
//
// Words are written without separators while every letter is a single
// digit ("7423165", "-231"), and with commas otherwise ("10,-2,3,...").
// Parsers switch to the comma form when the text contains a comma or more
// than nine digits, so both spellings are accepted for small n.

#include <string>
#include <string_view>

#include <json.hpp>

#include "signedpaths/barred.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/pathrep.hpp"
#include "signedpaths/sgnperm.hpp"
#include "signedpaths/threshold.hpp"

namespace signedpaths {

/// Always the comma form, e.g. "-2,3,1,6,-4,-7,5".
std::string format_signed(const SignedPermutation& u);
SignedPermutation parse_signed(std::string_view text);

std::string format_permutation(const Permutation& w);
Permutation parse_permutation(std::string_view text);

/// "74|2|316|5"; a trailing '|' marks a bar after the last letter.
std::string format_sbp(const SimplyBarredPermutation& sbp);
/// ParseError on leading or doubled bars and malformed letters.
SimplyBarredPermutation parse_sbp(std::string_view text);

/// Bars may also sit before the first letter: "|74|2".
std::string format_lbp(const LooselyBarredPermutation& lbp);

/// "3; 1-2, 1-3" (edges sorted); "3;" for the empty graph.
std::string format_graph(const SimpleGraph& g);
SimpleGraph parse_graph(std::string_view text);

/// "7423165 : 4-7, 2-7, ..." (edges sorted).
std::string format_tg_pair(const ThresholdPair& pair);

// -- JSON --------------------------------------------------------------------

nlohmann::json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoefficientVector& c);
CoefficientVector coefficients_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IdentityReport& r);
IdentityReport identity_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ThresholdCounts& c);
ThresholdCounts threshold_counts_from_json(const nlohmann::json& j);

}  // namespace signedpaths
