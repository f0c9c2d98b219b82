#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "signedpaths/enumerate.hpp"

namespace signedpaths {

/// Outcome of an exhaustive round-trip audit of one bijection at one n.
struct AuditResult {
  std::string name;
  int n = 0;
  std::uint64_t checked = 0;   // individual assertions evaluated
  std::uint64_t failures = 0;
  std::string first_failure;   // human-readable, empty when failures == 0

  bool passed() const { return failures == 0; }
};

/// psi and psi_inverse on all of SBP_n and B_n, with the descent formula.
AuditResult audit_psi(int n, const EnumerationBudget& budget = {});
/// path_representation and signed_from_path on all of B_n.
AuditResult audit_path(int n, const EnumerationBudget& budget = {});
/// Both restrictions of Theta_n, for every k: cardinalities and round trips.
AuditResult audit_theta(int n, const EnumerationBudget& budget = {});
/// chi on the non-smooth elements of B_n (n >= 2): round trip, image size
/// n |B_{n-1}|, and |Desc_B(v) \ {0}| = des_B(u) - 1.
AuditResult audit_chi(int n, const EnumerationBudget& budget = {});
/// u -> (lambda_x, E^u) from D_n onto TG_n, and E^u = E^{mate(u)} on B_n.
AuditResult audit_tgdo(int n, const EnumerationBudget& budget = {});
/// Threshold graphs <-> normal barred permutations with first block >= 2:
/// round trips both ways, and equal degree <=> same block.
AuditResult audit_bijtgsbps(int n, const EnumerationBudget& budget = {});

/// Names accepted by run_audit: psi, path, theta, chi, tgdo, bijtgsbps.
std::vector<std::string_view> audit_names();
/// ParseError for unknown names.
AuditResult run_audit(std::string_view name, int n, const EnumerationBudget& budget = {});

}  // namespace signedpaths
