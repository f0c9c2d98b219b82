#include "signedpaths/eulerian.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "signedpaths/errors.hpp"

namespace signedpaths {

// -- exact arithmetic ----------------------------------------------------------

Count checked_add(Count a, Count b) {
  Count out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceError("integer overflow in addition");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceError("integer overflow in multiplication");
  return out;
}

namespace {

Count checked_sub(Count a, Count b) {
  Count out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw ResourceError("integer overflow in subtraction");
  return out;
}

Count at(const CoefficientVector& v, int i) {
  return i < 0 || i >= static_cast<int>(v.size()) ? 0 : v[static_cast<std::size_t>(i)];
}

}  // namespace

Count power(Count base, int exponent) {
  if (exponent < 0) throw PreconditionError("power: negative exponent");
  Count out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

Count binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count out = 1;
  // Each partial product C(n - k + i, i) is an integer.
  for (int i = 1; i <= k; ++i) out = checked_mul(out, n - k + i) / i;
  return out;
}

Count factorial(int n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  Count out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

Count stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Count> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = checked_add(checked_mul(j, row[static_cast<std::size_t>(j)]), row[static_cast<std::size_t>(j) - 1]);
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

Count alternating_sum(int n, int k) {
  if (n < 0 || k < 0 || (n > 0 && k > n - 1) || (n == 0 && k > 0)) {
    throw PreconditionError("alternating_sum: needs 0 <= k <= n - 1");
  }
  Count out = 0;
  for (int j = 0; j <= k; ++j) {
    const Count term = checked_mul(binomial(n + 1, j), power(k + 1 - j, n));
    out = j % 2 == 0 ? checked_add(out, term) : checked_sub(out, term);
  }
  return out;
}

// -- Eulerian numbers ------------------------------------------------------------

namespace {

int row_length(int n, Kind kind) { return kind == Kind::A ? std::max(n, 1) : n + 1; }

void check_row(int n, Kind kind, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be non-negative");
  if (kind == Kind::D && n < 2) throw PreconditionError(std::string(what) + ": type D needs n >= 2");
}

// Eul_A(n, i), zero outside the row.
Count eul_a_formula(int n, int i) {
  if (n < 0 || i < 0 || i >= row_length(n, Kind::A)) return 0;
  return alternating_sum(n, i);
}

Count eul_b_formula(int n, int k) {
  Count out = 0;
  for (int i = 0; i <= 2 * k; ++i) out = checked_add(out, checked_mul(eul_a_formula(n, i), binomial(n + 1, 2 * k - i)));
  return out;
}

Count eul_d_formula(int n, int k) {
  return checked_sub(eul_b_formula(n, k), checked_mul(checked_mul(n, power(2, n - 1)), eul_a_formula(n - 1, k - 1)));
}

CoefficientVector merge_rows(CoefficientVector a, const CoefficientVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], b[i]);
  return a;
}

}  // namespace

CoefficientVector descent_distribution(int n, Kind kind, const EulerianOptions& options) {
  check_row(n, kind, "descent_distribution");
  const CoefficientVector zero(static_cast<std::size_t>(row_length(n, kind)), 0);
  return parallel_reduce(
      n, kind, options.workers, zero,
      [kind](CoefficientVector& acc, const SignedPermutation& u) { ++acc[static_cast<std::size_t>(descent_count(u, kind))]; },
      [](CoefficientVector& acc, const CoefficientVector& part) { acc = merge_rows(std::move(acc), part); }, options.budget);
}

CoefficientVector positive_descent_distribution(int n, const EulerianOptions& options) {
  if (n < 0) throw PreconditionError("positive_descent_distribution: n must be non-negative");
  const CoefficientVector zero(static_cast<std::size_t>(row_length(n, Kind::A)), 0);
  return parallel_reduce(
      n, Kind::B, options.workers, zero,
      [](CoefficientVector& acc, const SignedPermutation& u) { ++acc[static_cast<std::size_t>(descent_count(u, Kind::A))]; },
      [](CoefficientVector& acc, const CoefficientVector& part) { acc = merge_rows(std::move(acc), part); }, options.budget);
}

Count eulerian(int n, int k, Kind kind, Method method, const EulerianOptions& options) {
  check_row(n, kind, "eulerian");
  if (k < 0 || k >= row_length(n, kind)) throw PreconditionError("eulerian: k outside the row");
  if (method == Method::BruteForce) return descent_distribution(n, kind, options)[static_cast<std::size_t>(k)];
  switch (kind) {
    case Kind::A: return eul_a_formula(n, k);
    case Kind::B: return eul_b_formula(n, k);
    case Kind::D: return eul_d_formula(n, k);
  }
  return 0;
}

CoefficientVector eulerian_polynomial(int n, Kind kind, Method method, const EulerianOptions& options) {
  check_row(n, kind, "eulerian_polynomial");
  if (method == Method::BruteForce) return descent_distribution(n, kind, options);
  CoefficientVector out(static_cast<std::size_t>(row_length(n, kind)));
  for (int k = 0; k < static_cast<int>(out.size()); ++k) out[static_cast<std::size_t>(k)] = eulerian(n, k, kind, method, options);
  return out;
}

CoefficientVector eulerian_a_recurrence(int n) {
  if (n < 0) throw PreconditionError("eulerian_a_recurrence: n must be non-negative");
  CoefficientVector row{1};
  for (int m = 1; m <= n; ++m) {
    CoefficientVector next(static_cast<std::size_t>(m), 0);
    for (int k = 0; k < m; ++k) {
      next[static_cast<std::size_t>(k)] = checked_add(checked_mul(k + 1, at(row, k)), checked_mul(m - k, at(row, k - 1)));
    }
    row = std::move(next);
  }
  return row;
}

CoefficientVector eulerian_b_recurrence(int n) {
  if (n < 0) throw PreconditionError("eulerian_b_recurrence: n must be non-negative");
  CoefficientVector row{1};
  for (int m = 1; m <= n; ++m) {
    CoefficientVector next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      next[static_cast<std::size_t>(k)] =
          checked_add(checked_mul(2 * k + 1, at(row, k)), checked_mul(2 * m - 2 * k + 1, at(row, k - 1)));
    }
    row = std::move(next);
  }
  return row;
}

// -- polynomials -----------------------------------------------------------------

CoefficientVector poly_add(const CoefficientVector& a, const CoefficientVector& b) {
  CoefficientVector out(std::max(a.size(), b.size()), 0);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[static_cast<std::size_t>(i)] = checked_add(at(a, i), at(b, i));
  return out;
}

CoefficientVector poly_sub(const CoefficientVector& a, const CoefficientVector& b) {
  CoefficientVector out(std::max(a.size(), b.size()), 0);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[static_cast<std::size_t>(i)] = checked_sub(at(a, i), at(b, i));
  return out;
}

CoefficientVector poly_mul(const CoefficientVector& a, const CoefficientVector& b) {
  if (a.empty() || b.empty()) return {};
  CoefficientVector out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  }
  return out;
}

CoefficientVector poly_scale(const CoefficientVector& a, Count c) {
  CoefficientVector out(a);
  for (Count& x : out) x = checked_mul(x, c);
  return out;
}

CoefficientVector poly_shift(const CoefficientVector& a, int k) {
  CoefficientVector out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

CoefficientVector poly_square_argument(const CoefficientVector& a) {
  if (a.empty()) return {};
  CoefficientVector out(2 * a.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[2 * i] = a[i];
  return out;
}

CoefficientVector one_plus_t_power(int e) {
  CoefficientVector out(static_cast<std::size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) out[static_cast<std::size_t>(i)] = binomial(e, i);
  return out;
}

CoefficientVector poly_trim(CoefficientVector a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
  return a;
}

// -- identities --------------------------------------------------------------------

namespace {

struct NamedIdentity {
  Identity id;
  std::string_view name;
};

constexpr std::array<NamedIdentity, 7> kIdentityNames{{
    {Identity::TypeBEven, "eulBeven"},
    {Identity::TypeBOdd, "eulBodd"},
    {Identity::Polynomial, "main"},
    {Identity::TypeDFromB, "stembridge"},
    {Identity::AlternatingSum, "alternating"},
    {Identity::TypeBFirst, "B_n1"},
    {Identity::TypeDFirst, "D_n1"},
}};

}  // namespace

int identity_minimum_n(Identity id) {
  switch (id) {
    case Identity::TypeDFromB:
    case Identity::TypeDFirst: return 2;
    default: return 1;
  }
}

std::string_view identity_name(Identity id) {
  for (const auto& entry : kIdentityNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

Identity parse_identity(std::string_view name) {
  for (const auto& entry : kIdentityNames) {
    if (entry.name == name) return entry.id;
  }
  throw ParseError("unknown identity '" + std::string(name) + "'");
}

std::vector<Identity> all_identities() {
  std::vector<Identity> out;
  for (const auto& entry : kIdentityNames) out.push_back(entry.id);
  return out;
}

bool IdentityReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityRow& r) { return r.holds(); });
}

IdentityReport verify_identity(Identity id, int n, const EulerianOptions& options) {
  if (n < identity_minimum_n(id)) {
    throw PreconditionError("verify_identity: " + std::string(identity_name(id)) + " needs n >= " + std::to_string(identity_minimum_n(id)));
  }
  IdentityReport report{id, n, {}};
  auto& rows = report.rows;
  switch (id) {
    case Identity::TypeBEven: {
      const CoefficientVector brute = descent_distribution(n, Kind::B, options);
      const CoefficientVector recurrence = eulerian_b_recurrence(n);
      for (int k = 0; k <= n; ++k) rows.push_back({k, at(brute, k), eul_b_formula(n, k), at(recurrence, k)});
      break;
    }
    case Identity::TypeBOdd: {
      const CoefficientVector positive = positive_descent_distribution(n, options);
      const CoefficientVector brute_a = descent_distribution(n, Kind::A, options);
      const Count scale = power(2, n);
      for (int k = 0; k < n; ++k) {
        Count rhs = 0;
        for (int i = 0; i <= 2 * k + 1; ++i) rhs = checked_add(rhs, checked_mul(eul_a_formula(n, i), binomial(n + 1, 2 * k + 1 - i)));
        rows.push_back({k, at(positive, k), rhs, checked_mul(scale, at(brute_a, k))});
      }
      break;
    }
    case Identity::Polynomial: {
      CoefficientVector s_alt(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) s_alt[static_cast<std::size_t>(k)] = eul_a_formula(n, k);
      const CoefficientVector lhs = poly_mul(one_plus_t_power(n + 1), s_alt);
      const CoefficientVector rhs =
          poly_add(poly_square_argument(eulerian_b_recurrence(n)),
                   poly_shift(poly_scale(poly_square_argument(eulerian_a_recurrence(n)), power(2, n)), 1));
      const int degree = static_cast<int>(std::max(lhs.size(), rhs.size())) - 1;
      for (int k = 0; k <= degree; ++k) rows.push_back({k, at(lhs, k), at(rhs, k), std::nullopt});
      break;
    }
    case Identity::TypeDFromB: {
      const CoefficientVector d = descent_distribution(n, Kind::D, options);
      const CoefficientVector b = descent_distribution(n, Kind::B, options);
      const CoefficientVector a = descent_distribution(n - 1, Kind::A, options);
      const Count scale = checked_mul(n, power(2, n - 1));
      for (int k = 0; k <= n; ++k) {
        rows.push_back({k, at(d, k), checked_sub(at(b, k), checked_mul(scale, at(a, k - 1))), std::nullopt});
      }
      break;
    }
    case Identity::AlternatingSum: {
      const CoefficientVector brute = descent_distribution(n, Kind::A, options);
      const CoefficientVector recurrence = eulerian_a_recurrence(n);
      for (int k = 0; k < n; ++k) rows.push_back({k, at(brute, k), alternating_sum(n, k), at(recurrence, k)});
      break;
    }
    case Identity::TypeBFirst: {
      const Count brute = at(descent_distribution(n, Kind::B, options), 1);
      rows.push_back({1, brute, checked_sub(checked_sub(power(3, n), n), 1), eul_b_formula(n, 1)});
      break;
    }
    case Identity::TypeDFirst: {
      const Count brute = at(descent_distribution(n, Kind::D, options), 1);
      const Count closed = checked_sub(checked_sub(checked_sub(power(3, n), n), 1), checked_mul(n, power(2, n - 1)));
      rows.push_back({1, brute, closed, eul_d_formula(n, 1)});
      break;
    }
  }
  return report;
}

// -- threshold graph counts --------------------------------------------------------

Count threshold_count_by_degrees(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw PreconditionError("threshold_count_by_degrees: needs 1 <= i <= n");
  if (n == 1) return 1;
  const Count all = checked_mul(factorial(i), stirling2(n, i));
  const Count singleton_first = checked_mul(checked_mul(n, factorial(i - 1)), stirling2(n - 1, i - 1));
  return checked_mul(2, checked_sub(all, singleton_first));
}

Count first_block_permutations(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw PreconditionError("first_block_permutations: needs 0 <= k <= n - 1");
  return checked_mul(k + 1, eul_a_formula(n - 1, k));
}

Count threshold_count_by_descents(int n, int k) {
  return checked_mul(first_block_permutations(n, k), power(2, n - 1 - k));
}

Count threshold_count_by_descents_doubled(int n, int k) {
  if (k > n - 2) throw PreconditionError("threshold_count_by_descents_doubled: needs k <= n - 2");
  return checked_mul(checked_mul(2, first_block_permutations(n, k)), power(2, n - 2 - k));
}

ThresholdCounts threshold_counts(int n) {
  if (n < 1) throw PreconditionError("threshold_counts: needs n >= 1");
  ThresholdCounts c{n, 0, {}, {}, power(2, n - 1)};
  for (int i = 1; i <= n; ++i) c.by_degrees.push_back(threshold_count_by_degrees(n, i));
  for (int k = 0; k < n; ++k) {
    c.by_descents.push_back(threshold_count_by_descents(n, k));
    c.total = checked_add(c.total, c.by_descents.back());
  }
  return c;
}

}  // namespace signedpaths
