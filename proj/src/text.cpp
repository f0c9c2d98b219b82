#include "signedpaths/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "signedpaths/errors.hpp"

namespace signedpaths {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool comma_form(std::string_view text) {
  const auto digits = std::count_if(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  return text.find(',') != std::string_view::npos || digits > 9;
}

int parse_int(std::string_view token, std::string_view what) {
  token = trim(token);
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError(std::string(what) + ": bad letter '" + std::string(token) + "'");
  }
  return value;
}

// Letters of a word without bars, in either spelling.
std::vector<int> parse_letters(std::string_view text, bool commas, std::string_view what) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  if (commas) {
    std::size_t start = 0;
    while (true) {
      const std::size_t end = text.find(',', start);
      out.push_back(parse_int(text.substr(start, end == std::string_view::npos ? end : end - start), what));
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    return out;
  }
  bool negative = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '-' && !negative) {
      negative = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      out.push_back(negative ? -(c - '0') : c - '0');
      negative = false;
    } else {
      throw ParseError(std::string(what) + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  if (negative) throw ParseError(std::string(what) + ": dangling sign");
  return out;
}

std::string join_letters(const std::vector<int>& letters, bool commas) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

template <class T, class Fn>
T rethrow_as_parse(Fn&& fn) {
  try {
    return fn();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

// Splits "a|b|c" into words and bar positions; `allow_leading` admits a bar at 0.
std::pair<std::vector<int>, PositionSet> parse_barred(std::string_view text, bool allow_leading, std::string_view what) {
  text = trim(text);
  const bool commas = comma_form(text);
  std::vector<int> word;
  PositionSet bars;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    const std::size_t end = text.find('|', start);
    const std::string_view part = trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    const bool last = end == std::string_view::npos;
    if (part.empty() && !last && !(first && allow_leading)) {
      throw ParseError(std::string(what) + ": empty block before a bar");
    }
    const auto letters = parse_letters(part, commas, what);
    word.insert(word.end(), letters.begin(), letters.end());
    if (last) break;
    bars.insert(static_cast<int>(word.size()));
    start = end + 1;
    first = false;
  }
  return {word, bars};
}

std::string format_barred(const Permutation& w, PositionSet bars) {
  const bool commas = w.size() > 9;
  std::string out;
  if (bars.contains(0)) out += '|';
  for (int i = 1; i <= w.size(); ++i) {
    if (commas && i > 1 && !bars.contains(i - 1)) out += ',';
    out += std::to_string(w(i));
    if (bars.contains(i)) out += '|';
  }
  return out;
}

std::string format_edges(const SimpleGraph& g) {
  std::string out;
  for (auto [a, b] : g.edges()) {
    if (!out.empty()) out += ", ";
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

}  // namespace

std::string format_signed(const SignedPermutation& u) { return join_letters(u.window(), true); }

SignedPermutation parse_signed(std::string_view text) {
  auto letters = parse_letters(text, comma_form(text), "signed permutation");
  return rethrow_as_parse<SignedPermutation>([&] { return SignedPermutation(std::move(letters)); });
}

std::string format_permutation(const Permutation& w) { return join_letters(w.word(), w.size() > 9); }

Permutation parse_permutation(std::string_view text) {
  auto letters = parse_letters(text, comma_form(text), "permutation");
  return rethrow_as_parse<Permutation>([&] { return Permutation(std::move(letters)); });
}

std::string format_sbp(const SimplyBarredPermutation& sbp) { return format_barred(sbp.word(), sbp.bars()); }

SimplyBarredPermutation parse_sbp(std::string_view text) {
  auto [word, bars] = parse_barred(text, false, "barred permutation");
  return rethrow_as_parse<SimplyBarredPermutation>([&] { return SimplyBarredPermutation(Permutation(std::move(word)), bars); });
}

std::string format_lbp(const LooselyBarredPermutation& lbp) { return format_barred(lbp.word(), lbp.bars()); }

std::string format_graph(const SimpleGraph& g) {
  const std::string edges = format_edges(g);
  return std::to_string(g.order()) + ";" + (edges.empty() ? "" : " " + edges);
}

SimpleGraph parse_graph(std::string_view text) {
  text = trim(text);
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("graph: expected 'n; i-j, ...'");
  const int n = parse_int(text.substr(0, semi), "graph");
  std::vector<Edge> edges;
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const std::size_t dash = item.find('-', 1);
    if (dash == std::string_view::npos) throw ParseError("graph: bad edge '" + std::string(item) + "'");
    edges.emplace_back(parse_int(item.substr(0, dash), "graph"), parse_int(item.substr(dash + 1), "graph"));
    if (comma == std::string_view::npos) break;
    rest = trim(rest.substr(comma + 1));
    if (rest.empty()) throw ParseError("graph: trailing comma");
  }
  return rethrow_as_parse<SimpleGraph>([&] { return SimpleGraph(n, edges); });
}

std::string format_tg_pair(const ThresholdPair& pair) {
  return format_permutation(pair.w) + " : " + format_edges(pair.graph);
}

// -- JSON ----------------------------------------------------------------------

nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.order()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const nlohmann::json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return SimpleGraph(j.at("n").get<int>(), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const CoefficientVector& c) { return nlohmann::json(c); }

CoefficientVector coefficients_from_json(const nlohmann::json& j) {
  try {
    return j.get<CoefficientVector>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coefficient JSON: ") + e.what());
  }
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json item{{"k", row.k}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"holds", row.holds()}};
    if (row.cross) item["cross"] = *row.cross;
    rows.push_back(std::move(item));
  }
  return {{"identity", std::string(identity_name(r.identity))}, {"n", r.n}, {"holds", r.holds()}, {"rows", rows}};
}

IdentityReport identity_report_from_json(const nlohmann::json& j) {
  try {
    IdentityReport r{parse_identity(j.at("identity").get<std::string>()), j.at("n").get<int>(), {}};
    for (const auto& item : j.at("rows")) {
      IdentityRow row{item.at("k").get<int>(), item.at("lhs").get<Count>(), item.at("rhs").get<Count>(), std::nullopt};
      if (item.contains("cross")) row.cross = item.at("cross").get<Count>();
      r.rows.push_back(row);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("identity report JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ThresholdCounts& c) {
  return {{"n", c.n},
          {"total", c.total},
          {"by_degrees", c.by_degrees},
          {"by_descents", c.by_descents},
          {"unlabeled", c.unlabeled}};
}

ThresholdCounts threshold_counts_from_json(const nlohmann::json& j) {
  try {
    return ThresholdCounts{j.at("n").get<int>(), j.at("total").get<Count>(), j.at("by_degrees").get<std::vector<Count>>(),
                           j.at("by_descents").get<std::vector<Count>>(), j.at("unlabeled").get<Count>()};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("threshold counts JSON: ") + e.what());
  }
}

}  // namespace signedpaths
