#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signedpaths/enumerate.hpp"
#include "signedpaths/sgnperm.hpp"

namespace signedpaths {

// All counts are exact 64-bit integers; every operation checks for overflow
// and throws ResourceError instead of wrapping.
using Count = std::int64_t;

/// Index = power of t.
using CoefficientVector = std::vector<Count>;

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count power(Count base, int exponent);

Count binomial(int n, int k);  // 0 outside 0 <= k <= n
Count factorial(int n);
Count stirling2(int n, int k);  // S(n, k) by S(n, k) = k S(n-1, k) + S(n-1, k-1)

/// Σ_{j=0}^{k} (-1)^j C(n+1, j) (k+1-j)^n.
Count alternating_sum(int n, int k);

enum class Method { BruteForce, Formula };

struct EulerianOptions {
  unsigned workers = 1;
  EnumerationBudget budget{};
};

/// Number of elements of S_n, B_n or D_n with k descents of that type.
/// PreconditionError unless 0 <= k <= n - 1 (A; k = 0 allowed for n = 0)
/// or 0 <= k <= n (B, D; D needs n >= 2).
/// Formula: A by the alternating sum, B from A and binomials, D from B and A.
Count eulerian(int n, int k, Kind kind, Method method, const EulerianOptions& options = {});

/// The whole row (degree n - 1 for A, n for B and D).
CoefficientVector eulerian_polynomial(int n, Kind kind, Method method = Method::Formula,
                                      const EulerianOptions& options = {});

/// Brute-force descent distribution over the group, one scan.
CoefficientVector descent_distribution(int n, Kind kind, const EulerianOptions& options = {});

/// Distribution over B_n of the strictly positive descents (positions 1..n-1).
CoefficientVector positive_descent_distribution(int n, const EulerianOptions& options = {});

/// Rows from the classical recurrences, never touching the group or the
/// alternating sum:
///   A(n, k) = (k+1) A(n-1, k) + (n-k) A(n-1, k-1)
///   B(n, k) = (2k+1) B(n-1, k) + (2n-2k+1) B(n-1, k-1)
CoefficientVector eulerian_a_recurrence(int n);
CoefficientVector eulerian_b_recurrence(int n);

// -- polynomial arithmetic ---------------------------------------------------

CoefficientVector poly_add(const CoefficientVector& a, const CoefficientVector& b);
CoefficientVector poly_sub(const CoefficientVector& a, const CoefficientVector& b);
CoefficientVector poly_mul(const CoefficientVector& a, const CoefficientVector& b);
CoefficientVector poly_scale(const CoefficientVector& a, Count c);
/// p(t) -> t^k p(t).
CoefficientVector poly_shift(const CoefficientVector& a, int k);
/// p(t) -> p(t^2).
CoefficientVector poly_square_argument(const CoefficientVector& a);
/// (1 + t)^e.
CoefficientVector one_plus_t_power(int e);
/// Drops trailing zeros (keeps at least one coefficient).
CoefficientVector poly_trim(CoefficientVector a);

// -- identities --------------------------------------------------------------

enum class Identity {
  TypeBEven,        // Eul_B(n,k) = Σ_i Eul_A(n,i) C(n+1, 2k-i)
  TypeBOdd,         // 2^n Eul_A(n,k) = Σ_i Eul_A(n,i) C(n+1, 2k+1-i)
  Polynomial,       // (1+t)^{n+1} S_n(t) = B_n(t^2) + 2^n t S_n(t^2)
  TypeDFromB,       // Eul_D(n,k) = Eul_B(n,k) - n 2^{n-1} Eul_A(n-1,k-1)
  AlternatingSum,   // Eul_A(n,k) = alternating sum
  TypeBFirst,       // Eul_B(n,1) = 3^n - n - 1
  TypeDFirst,       // Eul_D(n,1) = 3^n - n - 1 - n 2^{n-1}
};

/// Names used on the command line and in reports.
std::string_view identity_name(Identity id);
/// ParseError on unknown names.
Identity parse_identity(std::string_view name);
std::vector<Identity> all_identities();
/// Smallest n the identity is stated for (1, or 2 for the type D ones).
int identity_minimum_n(Identity id);

struct IdentityRow {
  int k;
  Count lhs;
  Count rhs;
  std::optional<Count> cross;  // third, independent value when available

  bool holds() const { return lhs == rhs && (!cross || *cross == lhs); }
  bool operator==(const IdentityRow&) const = default;
};

struct IdentityReport {
  Identity identity;
  int n;
  std::vector<IdentityRow> rows;

  bool holds() const;
  bool operator==(const IdentityReport&) const = default;
};

/// Both sides by independent routes (brute force against formula, or two
/// different formulas for the polynomial identity, which never enumerates).
/// PreconditionError when n is outside the identity's domain
/// (see identity_minimum_n).
IdentityReport verify_identity(Identity id, int n, const EulerianOptions& options = {});

// -- threshold graph counts --------------------------------------------------

struct ThresholdCounts {
  int n;
  Count total;                    // T_n = Σ_k tau_{n,k}
  std::vector<Count> by_degrees;  // index i - 1 holds T_{n,i}, i = 1..n
  std::vector<Count> by_descents; // index k holds tau_{n,k}, k = 0..n-1
  Count unlabeled;                // 2^{n-1}

  bool operator==(const ThresholdCounts&) const = default;
};

/// T_{n,i} = 2 (i! S(n,i) - n (i-1)! S(n-1,i-1)), with T_{1,1} = 1.
Count threshold_count_by_degrees(int n, int i);
/// P(n,k) = (k+1) Eul_A(n-1,k).
Count first_block_permutations(int n, int k);
/// tau_{n,k} = P(n,k) 2^{n-1-k}.
Count threshold_count_by_descents(int n, int k);
/// tau_{n,k} = 2 P(n,k) 2^{n-2-k}; needs k <= n - 2 (PreconditionError otherwise).
Count threshold_count_by_descents_doubled(int n, int k);

/// PreconditionError for n < 1.
ThresholdCounts threshold_counts(int n);

}  // namespace signedpaths
