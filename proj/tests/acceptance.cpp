// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "signedpaths/audit.hpp"
#include "signedpaths/enumerate.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/posets.hpp"
#include "signedpaths/threshold.hpp"

using namespace signedpaths;

namespace {

// Collects the first mismatch of a criterion; later ones are only counted.
class Outcome {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  void expect(const AuditResult& r) {
    checks_ += r.checked;
    if (r.passed()) return;
    if (failures_ == 0) first_ = r.name + " n=" + std::to_string(r.n) + ": " + r.first_failure;
    failures_ += r.failures;
  }
  void expect(const IdentityReport& r) {
    for (const auto& row : r.rows) {
      std::ostringstream what;
      what << identity_name(r.identity) << " n=" << r.n << " k=" << row.k << " lhs=" << row.lhs << " rhs=" << row.rhs;
      expect(row.holds(), what.str());
    }
  }

  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

struct Criterion {
  int number;
  std::string summary;
  double limit_seconds;  // 0: no time limit
  std::function<void(Outcome&)> body;
};

EulerianOptions options() {
  EulerianOptions o;
  o.workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  return o;
}

void eulerian_a_alternating(Outcome& out) {
  for (int n = 1; n <= 9; ++n) {
    const auto brute = descent_distribution(n, Kind::A, options());
    for (int k = 0; k < n; ++k) {
      out.expect(brute[static_cast<std::size_t>(k)] == alternating_sum(n, k),
                 "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
}

void identity_range(Outcome& out, Identity id, int first, int last) {
  for (int n = std::max(first, identity_minimum_n(id)); n <= last; ++n) {
    const auto report = verify_identity(id, n, options());
    out.expect(!report.rows.empty(), "empty report");
    out.expect(report);
  }
}

void bijection_audits(Outcome& out) {
  for (int n = 1; n <= 6; ++n) out.expect(audit_psi(n));
  for (int n = 1; n <= 5; ++n) out.expect(audit_theta(n));
  for (int n = 2; n <= 6; ++n) out.expect(audit_chi(n));
  for (int n = 1; n <= 6; ++n) out.expect(audit_path(n));
}

void threshold_graphs(Outcome& out) {
  const std::vector<Count> expected{1, 2, 8, 46, 332, 2874};
  for (int n = 1; n <= 6; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    Count brute = 0;
    std::vector<SimpleGraph> found;
    for_each_graph(n, [&](const SimpleGraph& g) {
      const bool vicinal = is_threshold(g, ThresholdMethod::Vicinal);
      out.expect(vicinal == is_threshold(g, ThresholdMethod::ForbiddenSubgraph), tag + " recognizers disagree");
      if (!vicinal) return;
      ++brute;
      found.push_back(g);
    });
    const auto counts = threshold_counts(n);
    Count by_degrees = 0;
    for (Count c : counts.by_degrees) by_degrees += c;
    Count by_descents = 0;
    for (Count c : counts.by_descents) by_descents += c;
    out.expect(brute == expected[static_cast<std::size_t>(n - 1)], tag + " brute-force count");
    out.expect(by_degrees == brute, tag + " sum of T_{n,i}");
    out.expect(by_descents == brute, tag + " sum of tau_{n,k}");
    out.expect(counts.total == brute, tag + " T_n");

    std::set<std::vector<int>> signatures;
    for (const auto& g : found) signatures.insert(degree_signature(g));
    const auto classes = static_cast<Count>(signatures.size());
    out.expect(classes == power(2, n - 1), tag + " unlabeled by signature");
    out.expect(classes == counts.unlabeled, tag + " unlabeled formula");
    if (n <= 5) {
      std::vector<SimpleGraph> representatives;
      for (const auto& g : found) {
        const bool known = std::any_of(representatives.begin(), representatives.end(),
                                       [&](const SimpleGraph& r) { return are_isomorphic(g, r); });
        if (!known) representatives.push_back(g);
      }
      out.expect(static_cast<Count>(representatives.size()) == classes, tag + " unlabeled by isomorphism");
    }
  }
}

void tg_bijection(Outcome& out) {
  for (int n = 1; n <= 5; ++n) out.expect(audit_tgdo(n));
  out.expect(enumerate_tg(5).size() == 1920, "|TG_5|");
}

std::vector<std::size_t> tg_image(int n) {
  const auto tg = enumerate_tg(n);
  std::vector<std::size_t> image;
  for (const auto& u : weak_order_elements(n, Kind::D)) {
    const auto it = std::lower_bound(tg.begin(), tg.end(), tg_pair(u));
    image.push_back(static_cast<std::size_t>(it - tg.begin()));
  }
  return image;
}

void tg_lattice(Outcome& out) {
  for (int n = 2; n <= 4; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const auto weak = weak_order_poset(n, Kind::D);
    const auto tg = tg_poset(n);
    out.expect(order_isomorphism_check(tg_image(n), weak, tg).is_isomorphism, tag + " order isomorphism");
    out.expect(lattice_check(weak).is_lattice, tag + " weak D_n lattice");
    out.expect(lattice_check(tg).is_lattice, tag + " TG_n lattice");
    const Count d1 = eulerian(n, 1, Kind::D, Method::Formula);
    out.expect(static_cast<Count>(join_irreducible_count(tg)) == d1, tag + " TG_n join-irreducibles");
    out.expect(static_cast<Count>(join_irreducible_count(weak)) == d1, tag + " weak D_n join-irreducibles");
  }
  for (int n = 2; n <= 5; ++n) {
    out.expect(static_cast<Count>(join_irreducible_count(weak_order_poset(n, Kind::A))) == eulerian(n, 1, Kind::A, Method::Formula),
               "weak A join-irreducibles n=" + std::to_string(n));
  }
  for (int n = 2; n <= 4; ++n) {
    out.expect(static_cast<Count>(join_irreducible_count(weak_order_poset(n, Kind::B))) == eulerian(n, 1, Kind::B, Method::Formula),
               "weak B join-irreducibles n=" + std::to_string(n));
  }
}

void threshold_sbp(Outcome& out) {
  for (int n = 1; n <= 5; ++n) out.expect(audit_bijtgsbps(n));
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "type A brute force equals the alternating sum, n <= 9", 60, eulerian_a_alternating},
      {2, "type B brute force equals the even binomial sum, n <= 8", 180,
       [](Outcome& o) { identity_range(o, Identity::TypeBEven, 1, 8); }},
      {3, "2^n Eul_A equals the odd binomial sum and the positive-descent count, n <= 8", 0,
       [](Outcome& o) { identity_range(o, Identity::TypeBOdd, 1, 8); }},
      {4, "polynomial identity, exact coefficients, n <= 10", 1,
       [](Outcome& o) { identity_range(o, Identity::Polynomial, 1, 10); }},
      {5, "type D brute force equals Eul_B - n 2^{n-1} Eul_A(n-1, k-1), n <= 7", 0,
       [](Outcome& o) { identity_range(o, Identity::TypeDFromB, 2, 7); }},
      {6, "closed forms for Eul_B(n,1) and Eul_D(n,1), n = 2..8", 0,
       [](Outcome& o) {
         identity_range(o, Identity::TypeBFirst, 2, 8);
         identity_range(o, Identity::TypeDFirst, 2, 8);
       }},
      {7, "psi, theta, chi and path round trips", 0, bijection_audits},
      {8, "threshold recognizers, counts and unlabeled classes, n <= 6", 120, threshold_graphs},
      {9, "u -> (lambda_x, E^u) is a bijection D_n -> TG_n and mate-invariant, n <= 5", 0, tg_bijection},
      {10, "weak D_n and TG_n: isomorphism, lattices, join-irreducibles, n <= 4", 120, tg_lattice},
      {11, "threshold graphs <-> normal barred permutations, n <= 5", 0, threshold_sbp},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome outcome;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(outcome);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
    const bool pass = error.empty() && outcome.failures() == 0 && outcome.checks() > 0 && in_time;
    failed += pass ? 0 : 1;

    std::cout << "criterion " << std::setw(2) << c.number << ": " << (pass ? "PASS" : "FAIL") << "  " << c.summary << "  ["
              << outcome.checks() << " checks, " << std::fixed << std::setprecision(2) << seconds << " s";
    if (c.limit_seconds > 0) std::cout << " of " << std::setprecision(0) << c.limit_seconds << " s allowed";
    std::cout << "]\n";
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    if (outcome.failures() > 0) std::cout << "    " << outcome.failures() << " failures, first: " << outcome.first() << '\n';
    if (!in_time) std::cout << "    over the time limit\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
