#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "signedpaths/audit.hpp"
#include "signedpaths/barred.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/pathrep.hpp"
#include "signedpaths/posets.hpp"
#include "signedpaths/sgnperm.hpp"
#include "signedpaths/text.hpp"
#include "signedpaths/threshold.hpp"

namespace py = pybind11;
using namespace signedpaths;

namespace {

Kind kind_from(const std::string& name) {
  if (name == "A") return Kind::A;
  if (name == "B") return Kind::B;
  if (name == "D") return Kind::D;
  throw ParseError("kind must be A, B or D, got '" + name + "'");
}

Method method_from(const std::string& name) {
  if (name == "formula") return Method::Formula;
  if (name == "bruteforce") return Method::BruteForce;
  throw ParseError("method must be formula or bruteforce, got '" + name + "'");
}

std::vector<int> positions(PositionSet s) { return s.elements(); }

PositionSet position_set(const std::vector<int>& v) {
  PositionSet s;
  for (int p : v) {
    if (p < 0 || p >= PositionSet::kCapacity) throw PreconditionError("position out of range");
    s.insert(p);
  }
  return s;
}

SimpleGraph graph_from(int n, const std::vector<Edge>& edges) { return SimpleGraph(n, edges); }

py::dict report_dict(const IdentityReport& r) {
  py::list rows;
  for (const auto& row : r.rows) {
    py::dict d;
    d["k"] = row.k;
    d["lhs"] = row.lhs;
    d["rhs"] = row.rhs;
    d["cross"] = row.cross ? py::cast(*row.cross) : py::none();
    d["holds"] = row.holds();
    rows.append(d);
  }
  py::dict out;
  out["identity"] = std::string(identity_name(r.identity));
  out["n"] = r.n;
  out["holds"] = r.holds();
  out["rows"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Signed permutations, lattice paths, barred permutations and threshold graphs";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<SignedPermutation>(m, "SignedPermutation")
      .def(py::init<std::vector<int>>(), py::arg("window"))
      .def_static("parse", [](const std::string& text) { return parse_signed(text); })
      .def_static("identity", &SignedPermutation::identity)
      .def_property_readonly("window", &SignedPermutation::window)
      .def("full_notation", &SignedPermutation::full_notation)
      .def("is_even_signed", &SignedPermutation::is_even_signed)
      .def("__len__", &SignedPermutation::size)
      .def("__eq__", [](const SignedPermutation& a, const SignedPermutation& b) { return a == b; })
      .def("__hash__", [](const SignedPermutation& u) { return py::hash(py::tuple(py::cast(u.window()))); })
      .def("__str__", &format_signed)
      .def("__repr__", [](const SignedPermutation& u) { return "SignedPermutation(" + format_signed(u) + ")"; });

  m.def("descent_set", [](const SignedPermutation& u, const std::string& kind) { return positions(descent_set(u, kind_from(kind))); },
        py::arg("u"), py::arg("kind") = "B");
  m.def("descent_count", [](const SignedPermutation& u, const std::string& kind) { return descent_count(u, kind_from(kind)); },
        py::arg("u"), py::arg("kind") = "B");
  m.def(
      "inversion_set",
      [](const SignedPermutation& u, const std::string& kind) {
        const auto inv = inversion_set(u, kind_from(kind));
        return py::make_tuple(inv.positive, inv.negative);
      },
      py::arg("u"), py::arg("kind") = "B", "(positive pairs, negative pairs)");
  m.def("mate", &mate);
  m.def("is_smooth", &is_smooth);
  m.def("smooth_representative", &smooth_representative);
  m.def("even_representative", &even_representative);
  m.def("chi", [](const SignedPermutation& u) {
    const auto c = chi(u);
    return py::make_tuple(c.x, c.tail);
  });
  m.def("chi_inverse", &chi_inverse, py::arg("x"), py::arg("tail"));

  m.def(
      "path_representation",
      [](const SignedPermutation& u) {
        const auto rep = path_representation(u);
        return py::make_tuple(rep.path.to_string(), rep.lambda_x.word());
      },
      "(step word, lambda_x)");
  m.def("signed_from_path", [](const std::string& path, const std::vector<int>& w) {
    return signed_from_path(LatticePath::parse(path), Permutation(w));
  });
  m.def("height_function", [](const std::string& path) { return height_function(LatticePath::parse(path)).values(); });
  m.def("render_ascii", [](const SignedPermutation& u) { return render_ascii(path_representation(u)); });
  m.def("render_svg", [](const SignedPermutation& u) { return render_svg(path_representation(u)); });

  m.def(
      "psi",
      [](const std::vector<int>& w, const std::vector<int>& bars) {
        return psi(SimplyBarredPermutation(Permutation(w), position_set(bars)));
      },
      py::arg("w"), py::arg("bars"));
  m.def(
      "psi_inverse",
      [](const SignedPermutation& u) {
        const auto sbp = psi_inverse(u);
        return py::make_tuple(sbp.word().word(), positions(sbp.bars()));
      },
      "(w, bars)");
  m.def("format_sbp", [](const std::vector<int>& w, const std::vector<int>& bars) {
    return format_sbp(SimplyBarredPermutation(Permutation(w), position_set(bars)));
  });

  m.def("is_threshold", [](int n, const std::vector<Edge>& edges, const std::string& method) {
    if (method != "vicinal" && method != "forbidden") throw ParseError("method must be vicinal or forbidden");
    return is_threshold(graph_from(n, edges), method == "vicinal" ? ThresholdMethod::Vicinal : ThresholdMethod::ForbiddenSubgraph);
  }, py::arg("n"), py::arg("edges"), py::arg("method") = "vicinal");
  m.def("canonical_degree_ordering", [](int n, const std::vector<Edge>& edges) {
    return canonical_degree_ordering(graph_from(n, edges)).word();
  });
  m.def(
      "tg_pair",
      [](const SignedPermutation& u) {
        const auto pair = tg_pair(u);
        return py::make_tuple(pair.w.word(), pair.graph.edges());
      },
      "(w, edges)");
  m.def("signed_from_tg", [](const std::vector<int>& w, const std::vector<Edge>& edges) {
    return signed_from_tg(ThresholdPair{Permutation(w), graph_from(static_cast<int>(w.size()), edges)});
  });
  m.def(
      "sbp_from_threshold",
      [](int n, const std::vector<Edge>& edges) {
        const auto sbp = sbp_from_threshold(graph_from(n, edges));
        return py::make_tuple(sbp.word().word(), positions(sbp.bars()));
      },
      "(w, bars)");
  m.def("threshold_from_sbp", [](const std::vector<int>& w, const std::vector<int>& bars) {
    return threshold_from_sbp(SimplyBarredPermutation(Permutation(w), position_set(bars))).edges();
  });

  m.def(
      "eulerian",
      [](int n, int k, const std::string& kind, const std::string& method) {
        return eulerian(n, k, kind_from(kind), method_from(method));
      },
      py::arg("n"), py::arg("k"), py::arg("kind") = "A", py::arg("method") = "formula");
  m.def(
      "eulerian_polynomial",
      [](int n, const std::string& kind, const std::string& method) {
        return eulerian_polynomial(n, kind_from(kind), method_from(method));
      },
      py::arg("n"), py::arg("kind") = "A", py::arg("method") = "formula");
  m.def("identity_names", [] {
    std::vector<std::string> out;
    for (const Identity id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def("verify_identity", [](const std::string& name, int n) { return report_dict(verify_identity(parse_identity(name), n)); },
        py::arg("name"), py::arg("n"));
  m.def("threshold_counts", [](int n) {
    const auto c = threshold_counts(n);
    py::dict d;
    d["n"] = c.n;
    d["total"] = c.total;
    d["by_degrees"] = c.by_degrees;
    d["by_descents"] = c.by_descents;
    d["unlabeled"] = c.unlabeled;
    return d;
  });

  m.def("audit_names", [] {
    std::vector<std::string> out;
    for (const auto name : audit_names()) out.emplace_back(name);
    return out;
  });
  m.def(
      "run_audit",
      [](const std::string& name, int n) {
        const auto r = run_audit(name, n);
        py::dict d;
        d["name"] = r.name;
        d["n"] = r.n;
        d["checked"] = r.checked;
        d["failures"] = r.failures;
        d["first_failure"] = r.first_failure;
        return d;
      },
      py::arg("name"), py::arg("n"));

  m.def(
      "weak_order_join_irreducibles",
      [](int n, const std::string& kind) {
        py::gil_scoped_release release;
        return join_irreducible_count(weak_order_poset(n, kind_from(kind)));
      },
      py::arg("n"), py::arg("kind") = "A");
  m.def("tg_is_lattice", [](int n) {
    py::gil_scoped_release release;
    return lattice_check(tg_poset(n)).is_lattice;
  });
}
