#include "cli_app.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "signedpaths/audit.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/pathrep.hpp"
#include "signedpaths/posets.hpp"
#include "signedpaths/text.hpp"
#include "signedpaths/threshold.hpp"

namespace signedpaths::cli {

namespace {

using nlohmann::json;

enum class Format { Table, Json, Csv };

struct Globals {
  Format format = Format::Table;
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;

  EnumerationBudget enumeration() const { return EnumerationBudget{12, budget}; }
  EulerianOptions eulerian() const { return EulerianOptions{workers, enumeration()}; }
};

const std::map<std::string, Format> kFormats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
const std::map<std::string, Kind> kKinds{{"A", Kind::A}, {"B", Kind::B}, {"D", Kind::D}};
const std::map<std::string, Method> kMethods{{"bruteforce", Method::BruteForce}, {"formula", Method::Formula}};

std::string join(const std::vector<Count>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// -- eulerian --------------------------------------------------------------------

struct EulerianArgs {
  Kind kind = Kind::A;
  int n = 0;
  Method method = Method::Formula;
};

int run_eulerian(const Globals& g, const EulerianArgs& a, std::ostream& out) {
  const int first = a.kind == Kind::D ? 2 : 1;
  if (a.n < first) throw PreconditionError("eulerian: --n must be at least " + std::to_string(first));
  json rows = json::array();
  if (g.format == Format::Csv) out << "n,k,value\n";
  for (int m = first; m <= a.n; ++m) {
    const CoefficientVector row = eulerian_polynomial(m, a.kind, a.method, g.eulerian());
    switch (g.format) {
      case Format::Table: out << join(row, " ") << '\n'; break;
      case Format::Csv:
        for (std::size_t k = 0; k < row.size(); ++k) out << m << ',' << k << ',' << row[k] << '\n';
        break;
      case Format::Json: rows.push_back({{"n", m}, {"coefficients", to_json(row)}}); break;
    }
  }
  if (g.format == Format::Json) {
    out << json{{"kind", to_string(a.kind)}, {"method", a.method == Method::Formula ? "formula" : "bruteforce"}, {"rows", rows}}.dump(2)
        << '\n';
  }
  return kExitOk;
}

// -- verify ----------------------------------------------------------------------

struct VerifyArgs {
  std::string identity;
  int max_n = 0;
  int min_n = 1;
};

int run_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  std::vector<Identity> ids;
  if (a.identity == "all") {
    ids = all_identities();
  } else {
    ids.push_back(parse_identity(a.identity));
  }
  bool all_hold = true;
  json reports = json::array();
  if (g.format == Format::Csv) out << "identity,n,k,lhs,rhs,cross,holds\n";
  for (Identity id : ids) {
    const int first = std::max(a.min_n, identity_minimum_n(id));
    if (a.max_n < first) throw PreconditionError("verify: --max-n must be at least " + std::to_string(first));
    bool holds = true;
    for (int n = first; n <= a.max_n; ++n) {
      const IdentityReport r = verify_identity(id, n, g.eulerian());
      holds = holds && r.holds();
      for (const auto& row : r.rows) {
        const std::string cross = row.cross ? std::to_string(*row.cross) : "";
        if (g.format == Format::Table) {
          out << identity_name(id) << " n=" << n << " k=" << row.k << " lhs=" << row.lhs << " rhs=" << row.rhs;
          if (row.cross) out << " cross=" << cross;
          out << (row.holds() ? " ok" : " MISMATCH") << '\n';
        } else if (g.format == Format::Csv) {
          out << identity_name(id) << ',' << n << ',' << row.k << ',' << row.lhs << ',' << row.rhs << ',' << cross << ','
              << (row.holds() ? "true" : "false") << '\n';
        }
      }
      if (g.format == Format::Json) reports.push_back(to_json(r));
    }
    if (g.format == Format::Table) {
      out << identity_name(id) << ": " << (holds ? "holds" : "FAILS") << " for n = " << first << ".." << a.max_n << '\n';
    }
    all_hold = all_hold && holds;
  }
  if (g.format == Format::Json) out << reports.dump(2) << '\n';
  return all_hold ? kExitOk : kExitFailed;
}

// -- bijection -------------------------------------------------------------------

int run_bijection(const Globals& g, const std::string& check, int n, std::ostream& out) {
  const AuditResult r = run_audit(check, n, g.enumeration());
  switch (g.format) {
    case Format::Table:
      out << r.name << " n=" << r.n << ": " << r.checked << " checks, " << r.failures << " failures\n";
      if (!r.passed()) out << "first failure: " << r.first_failure << '\n';
      break;
    case Format::Csv:
      out << "name,n,checked,failures\n" << r.name << ',' << r.n << ',' << r.checked << ',' << r.failures << '\n';
      break;
    case Format::Json:
      out << json{{"name", r.name}, {"n", r.n}, {"checked", r.checked}, {"failures", r.failures}, {"first_failure", r.first_failure}}
                 .dump(2)
          << '\n';
      break;
  }
  return r.passed() ? kExitOk : kExitFailed;
}

// -- threshold -------------------------------------------------------------------

struct BruteThreshold {
  Count total = 0;
  Count unlabeled = 0;
  std::vector<SimpleGraph> graphs;
};

BruteThreshold brute_threshold(int n, bool keep) {
  BruteThreshold b;
  std::set<std::vector<int>> classes;
  for_each_graph(n, [&](const SimpleGraph& graph) {
    if (!is_threshold(graph)) return;
    ++b.total;
    classes.insert(degree_signature(graph));
    if (keep) b.graphs.push_back(graph);
  });
  b.unlabeled = static_cast<Count>(classes.size());
  return b;
}

int run_threshold(const Globals& g, int n, bool counts, bool list, std::ostream& out) {
  if (!counts && !list) counts = true;
  constexpr int kBruteLimit = 7;
  const ThresholdCounts c = threshold_counts(n);
  const bool brute = n <= kBruteLimit;
  const BruteThreshold b = brute ? brute_threshold(n, list) : BruteThreshold{};
  if (list && !brute) throw ResourceError("threshold: --list needs n <= " + std::to_string(kBruteLimit));
  Count by_degrees = 0;
  for (Count v : c.by_degrees) by_degrees = checked_add(by_degrees, v);
  const bool consistent = by_degrees == c.total && (!brute || (b.total == c.total && b.unlabeled == c.unlabeled));

  switch (g.format) {
    case Format::Table:
      if (counts) {
        out << "T_" << n << " = " << c.total;
        if (brute) out << " (brute force " << b.total << ")";
        out << "\nT_{n,i}, i = 1.." << n << ": " << join(c.by_degrees, " ") << " (sum " << by_degrees << ")\n";
        out << "tau_{n,k}, k = 0.." << n - 1 << ": " << join(c.by_descents, " ") << '\n';
        out << "unlabeled = " << c.unlabeled;
        if (brute) out << " (brute force " << b.unlabeled << ")";
        out << '\n';
      }
      if (list) {
        for (const auto& graph : b.graphs) out << format_graph(graph) << "    " << format_sbp(sbp_from_threshold(graph)) << '\n';
      }
      break;
    case Format::Csv:
      if (counts) {
        out << "quantity,index,value\n";
        out << "T_n,," << c.total << '\n';
        for (std::size_t i = 0; i < c.by_degrees.size(); ++i) out << "T_n_i," << i + 1 << ',' << c.by_degrees[i] << '\n';
        for (std::size_t k = 0; k < c.by_descents.size(); ++k) out << "tau_n_k," << k << ',' << c.by_descents[k] << '\n';
        out << "unlabeled,," << c.unlabeled << '\n';
      }
      if (list) {
        out << "graph,barred\n";
        for (const auto& graph : b.graphs) out << '"' << format_graph(graph) << "\"," << format_sbp(sbp_from_threshold(graph)) << '\n';
      }
      break;
    case Format::Json: {
      json j = to_json(c);
      if (brute) j["brute_force"] = {{"total", b.total}, {"unlabeled", b.unlabeled}};
      if (list) {
        json graphs = json::array();
        for (const auto& graph : b.graphs) {
          json item = to_json(graph);
          item["barred"] = format_sbp(sbp_from_threshold(graph));
          graphs.push_back(std::move(item));
        }
        j["graphs"] = std::move(graphs);
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
  return consistent ? kExitOk : kExitFailed;
}

// -- render ----------------------------------------------------------------------

int run_render(const std::string& perm, const std::string& svg_path, std::ostream& out) {
  const PathRepresentation rep = path_representation(parse_signed(perm));
  if (svg_path.empty()) {
    out << render_ascii(rep);
    return kExitOk;
  }
  std::ofstream file(svg_path);
  if (!file) throw PreconditionError("render: cannot write " + svg_path);
  file << render_svg(rep);
  out << "wrote " << svg_path << '\n';
  return kExitOk;
}

// -- poset -----------------------------------------------------------------------

struct PosetArgs {
  std::string kind;
  int n = 0;
  std::string check;
  std::string dot;
};

Count expected_join_irreducibles(const std::string& kind, int n) {
  if (kind == "A") return eulerian(n, 1, Kind::A, Method::Formula);
  if (kind == "B") return eulerian(n, 1, Kind::B, Method::Formula);
  return eulerian(n, 1, Kind::D, Method::Formula);  // D and TG
}

int run_poset(const Globals& g, const PosetArgs& a, std::ostream& out) {
  const bool is_tg = a.kind == "TG";
  const std::string title = is_tg ? "TG_" + std::to_string(a.n) : "weak " + a.kind + "_" + std::to_string(a.n);
  if (a.kind == "D" && a.n < 2) throw PreconditionError("poset: type D needs n >= 2");
  const FinitePoset p = is_tg ? tg_poset(a.n) : weak_order_poset(a.n, kKinds.at(a.kind));
  json j{{"poset", title}, {"elements", p.size()}, {"check", a.check}};
  std::ostringstream text;
  bool ok = true;

  if (a.check == "lattice") {
    const LatticeCheck c = lattice_check(p);
    ok = c.is_lattice;
    j["lattice"] = c.is_lattice;
    text << title << ": " << p.size() << " elements, " << (c.is_lattice ? "lattice" : "not a lattice");
    if (c.witness) {
      j["witness"] = {p.label(c.witness->first), p.label(c.witness->second)};
      j["missing"] = c.missing;
      text << " (no " << c.missing << " for " << p.label(c.witness->first) << " and " << p.label(c.witness->second) << ")";
    }
    text << '\n';
  } else if (a.check == "iso") {
    if (a.kind != "D" && a.kind != "TG") throw PreconditionError("poset: --check iso compares weak D_n with TG_n; use --kind D or TG");
    const auto elements = weak_order_elements(a.n, Kind::D);
    const FinitePoset weak = weak_order_poset(a.n, Kind::D);
    const FinitePoset tg = is_tg ? p : tg_poset(a.n);
    const auto tg_elements = enumerate_tg(a.n);
    std::vector<std::size_t> image;
    for (const auto& u : elements) {
      const auto it = std::lower_bound(tg_elements.begin(), tg_elements.end(), tg_pair(u));
      if (it == tg_elements.end() || *it != tg_pair(u)) throw std::logic_error("tg_pair leaves TG_n");
      image.push_back(static_cast<std::size_t>(it - tg_elements.begin()));
    }
    const IsomorphismCheck c = order_isomorphism_check(image, weak, tg);
    ok = c.is_isomorphism;
    j["isomorphism"] = ok;
    text << "tg_pair: weak D_" << a.n << " -> TG_" << a.n << ": " << (ok ? "order isomorphism" : "NOT an order isomorphism");
    if (c.witness) text << " (fails at " << weak.label(c.witness->first) << ", " << weak.label(c.witness->second) << ")";
    text << " over " << p.size() * p.size() << " pairs\n";
  } else if (a.check == "covers") {
    j["covers"] = p.covers().size();
    text << title << ": " << p.covers().size() << " cover pairs\n";
    if (!is_tg) {
      const Kind kind = kKinds.at(a.kind);
      const auto elements = weak_order_elements(a.n, kind);
      std::size_t mismatches = 0;
      for (std::size_t x = 0; x < p.size(); ++x) {
        mismatches += static_cast<int>(p.lower_cover_count(x)) == descent_count(elements[x], kind) ? 0 : 1;
      }
      ok = mismatches == 0;
      j["cover_count_equals_descents"] = ok;
      text << "lower cover count = descent count: " << (ok ? "yes" : "NO") << " (" << mismatches << " mismatches)\n";
    }
  } else if (a.check == "joinirr") {
    const std::size_t count = join_irreducible_count(p);
    const Count expected = expected_join_irreducibles(a.kind, a.n);
    ok = static_cast<Count>(count) == expected;
    j["join_irreducibles"] = count;
    j["expected"] = expected;
    text << title << ": " << count << " join-irreducibles (Eulerian number " << expected << ")\n";
  }
  j["ok"] = ok;

  switch (g.format) {
    case Format::Table: out << text.str(); break;
    case Format::Json: out << j.dump(2) << '\n'; break;
    case Format::Csv: {
      out << "key,value\n";
      for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ',' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
      break;
    }
  }
  if (!a.dot.empty()) {
    if (a.dot == "-") {
      out << to_dot(p, title);
    } else {
      std::ofstream file(a.dot);
      if (!file) throw PreconditionError("poset: cannot write " + a.dot);
      file << to_dot(p, title);
    }
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed permutations, lattice paths, barred permutations and threshold graphs", "signedpaths"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(kFormats))->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads for exhaustive scans")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--budget", g.budget, "Largest group size an exhaustive scan may visit")->capture_default_str();

  EulerianArgs ea;
  auto* eul = app.add_subcommand("eulerian", "Rows of the Eulerian triangle of one type, for n = 1..N");
  eul->add_option("--kind", ea.kind, "A, B or D")->required()->transform(CLI::CheckedTransformer(kKinds));
  eul->add_option("--n", ea.n, "Last row")->required();
  eul->add_option("--method", ea.method, "bruteforce or formula")->transform(CLI::CheckedTransformer(kMethods));

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Check an Eulerian identity coefficient by coefficient");
  std::vector<std::string> identity_choices{"all"};
  for (Identity id : all_identities()) identity_choices.emplace_back(identity_name(id));
  ver->add_option("--identity", va.identity, "Identity name or 'all'")->required()->check(CLI::IsMember(identity_choices));
  ver->add_option("--max-n", va.max_n, "Largest n")->required();
  ver->add_option("--min-n", va.min_n, "Smallest n (raised to the identity's domain)");

  std::string check;
  int bij_n = 0;
  auto* bij = app.add_subcommand("bijection", "Exhaustive round-trip audit of one bijection");
  const auto names = audit_names();
  std::vector<std::string> audit_choices(names.begin(), names.end());
  bij->add_option("--check", check, "Bijection to audit")->required()->check(CLI::IsMember(audit_choices));
  bij->add_option("--n", bij_n, "Size")->required();

  int thr_n = 0;
  bool counts = false;
  bool list = false;
  auto* thr = app.add_subcommand("threshold", "Threshold graph counts, with a brute-force cross-check for n <= 7");
  thr->add_option("--n", thr_n, "Number of vertices")->required();
  thr->add_flag("--counts", counts, "Print counts (default)");
  thr->add_flag("--list", list, "List every threshold graph with its barred permutation");

  std::string perm;
  std::string svg;
  auto* ren = app.add_subcommand("render", "Draw the path representation of a signed permutation");
  ren->add_option("--perm", perm, "Window, e.g. \"-2,3,1,6,-4,-7,5\"")->required();
  ren->add_option("--svg", svg, "Write an SVG file instead of ASCII");

  PosetArgs pa;
  auto* pos = app.add_subcommand("poset", "Weak orders and the TG_n order");
  pos->add_option("--kind", pa.kind, "A, B, D or TG")->required()->check(CLI::IsMember({"A", "B", "D", "TG"}));
  pos->add_option("--n", pa.n, "Size")->required();
  pos->add_option("--check", pa.check, "lattice, iso, covers or joinirr")->required()->check(CLI::IsMember({"lattice", "iso", "covers", "joinirr"}));
  pos->add_option("--dot", pa.dot, "Write the Hasse diagram as DOT to this file ('-' for standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eul->parsed()) return run_eulerian(g, ea, out);
    if (ver->parsed()) return run_verify(g, va, out);
    if (bij->parsed()) return run_bijection(g, check, bij_n, out);
    if (thr->parsed()) return run_threshold(g, thr_n, counts, list, out);
    if (ren->parsed()) return run_render(perm, svg, out);
    if (pos->parsed()) return run_poset(g, pa, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace signedpaths::cli
