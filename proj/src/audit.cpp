#include "signedpaths/audit.hpp"

#include <map>
#include <set>

#include "signedpaths/barred.hpp"
#include "signedpaths/errors.hpp"
#include "signedpaths/eulerian.hpp"
#include "signedpaths/pathrep.hpp"
#include "signedpaths/text.hpp"
#include "signedpaths/threshold.hpp"

namespace signedpaths {

namespace {

class Recorder {
 public:
  Recorder(std::string name, int n) {
    result_.name = std::move(name);
    result_.n = n;
  }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  AuditResult done() { return std::move(result_); }

 private:
  AuditResult result_;
};

void check_sbp_budget(int n, const EnumerationBudget& budget) {
  check_budget(n, Kind::B, budget);  // |SBP_n| = |B_n|
}

}  // namespace

AuditResult audit_psi(int n, const EnumerationBudget& budget) {
  check_sbp_budget(n, budget);
  Recorder rec("psi", n);
  for_each_sbp(n, [&](const SimplyBarredPermutation& s) {
    const SignedPermutation u = psi(s);
    const std::string where = format_sbp(s);
    rec.expect(psi_inverse(u) == s, [&] { return "psi_inverse(psi(" + where + ")) differs"; });
    rec.expect(descent_count(u, Kind::B) == descb_formula(s), [&] { return "descent formula fails at " + where; });
    rec.expect(descent_set(u, Kind::B).contains(0) == (s.bars().size() % 2 == 1),
               [&] { return "zero descent parity fails at " + where; });
    rec.expect(static_cast<int>(east_south_turns(path_representation(u).path).size()) == s.bars().size(),
               [&] { return "turn count differs from bar count at " + where; });
  });
  for_each_element(
      n, Kind::B,
      [&](const SignedPermutation& u) {
        rec.expect(psi(psi_inverse(u)) == u, [&] { return "psi(psi_inverse(" + format_signed(u) + ")) differs"; });
      },
      budget);
  return rec.done();
}

AuditResult audit_path(int n, const EnumerationBudget& budget) {
  Recorder rec("path", n);
  for_each_element(
      n, Kind::B,
      [&](const SignedPermutation& u) {
        const PathRepresentation rep = path_representation(u);
        rec.expect(rep.path.is_diagonal_symmetric(), [&] { return "asymmetric path for " + format_signed(u); });
        rec.expect(signed_from_path(rep.path, rep.lambda_x) == u, [&] { return "round trip fails for " + format_signed(u); });
        rec.expect(inversions_via_path(u) == inversion_set(u, Kind::B),
                   [&] { return "inversions read off the path differ for " + format_signed(u); });
      },
      budget);
  return rec.done();
}

AuditResult audit_theta(int n, const EnumerationBudget& budget) {
  if (n < 1) throw PreconditionError("audit_theta: needs n >= 1");
  check_budget(n, Kind::B, budget);
  Recorder rec("theta", n);
  const auto slots = static_cast<std::size_t>(n) + 2;
  std::vector<Count> lbp_even(slots), lbp_odd(slots), sbp_even(slots), sbp_odd(slots);

  for_each_lbp(n, [&](const LooselyBarredPermutation& l) {
    const SimplyBarredPermutation s = theta(l);
    const int sum = descent_count(l.word()) + l.bars().size();
    const int k = sum / 2;
    const ThetaTarget target{sum % 2 == 0 ? BarParity::Even : BarParity::Odd, k};
    const int weight = target.parity == BarParity::Even ? descb_formula(s) : positive_descent_formula(s);
    rec.expect(weight == k, [&] { return "theta(" + format_lbp(l) + ") lands in the wrong class"; });
    if (weight != k) return;
    rec.expect(theta_inverse(s, target) == l, [&] { return "theta_inverse(theta(" + format_lbp(l) + ")) differs"; });
    ++(target.parity == BarParity::Even ? lbp_even : lbp_odd)[static_cast<std::size_t>(k)];
  });

  for_each_sbp(n, [&](const SimplyBarredPermutation& s) {
    const int even_k = descb_formula(s);
    const int odd_k = positive_descent_formula(s);
    ++sbp_even[static_cast<std::size_t>(even_k)];
    ++sbp_odd[static_cast<std::size_t>(odd_k)];
    rec.expect(theta(theta_inverse(s, {BarParity::Even, even_k})) == s,
               [&] { return "even round trip fails at " + format_sbp(s); });
    rec.expect(theta(theta_inverse(s, {BarParity::Odd, odd_k})) == s,
               [&] { return "odd round trip fails at " + format_sbp(s); });
  });

  for (int k = 0; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    rec.expect(lbp_even[i] == sbp_even[i], [&] { return "even class sizes differ at k = " + std::to_string(k); });
    rec.expect(lbp_odd[i] == sbp_odd[i], [&] { return "odd class sizes differ at k = " + std::to_string(k); });
    rec.expect(sbp_even[i] == eulerian(n, k, Kind::B, Method::Formula),
               [&] { return "|SBP_{n,k}| differs from Eul_B at k = " + std::to_string(k); });
    const Count odd_expected = k < n ? checked_mul(power(2, n), eulerian(n, k, Kind::A, Method::Formula)) : 0;
    rec.expect(sbp_odd[i] == odd_expected, [&] { return "|SBP_n^k| differs from 2^n Eul_A at k = " + std::to_string(k); });
  }
  return rec.done();
}

AuditResult audit_chi(int n, const EnumerationBudget& budget) {
  if (n < 2) throw PreconditionError("audit_chi: needs n >= 2");
  Recorder rec("chi", n);
  std::set<std::pair<int, std::vector<int>>> images;
  std::uint64_t non_smooth = 0;
  for_each_element(
      n, Kind::B,
      [&](const SignedPermutation& u) {
        if (is_smooth(u)) return;
        ++non_smooth;
        const ChiImage c = chi(u);
        images.emplace(c.x, c.tail.window());
        rec.expect(chi_inverse(c.x, c.tail) == u, [&] { return "chi_inverse(chi(" + format_signed(u) + ")) differs"; });
        PositionSet tail_desc = descent_set(c.tail, Kind::B);
        tail_desc.erase(0);
        rec.expect(tail_desc.size() == descent_count(u, Kind::B) - 1,
                   [&] { return "descent shift fails at " + format_signed(u); });
      },
      budget);
  rec.expect(images.size() == non_smooth, [] { return std::string("chi is not injective"); });
  rec.expect(images.size() == static_cast<std::size_t>(n) * group_order(n - 1, Kind::B),
             [] { return std::string("chi image is not all of [n] x B_{n-1}"); });
  return rec.done();
}

AuditResult audit_tgdo(int n, const EnumerationBudget& budget) {
  Recorder rec("tgdo", n);
  std::set<ThresholdPair> images;
  std::uint64_t elements = 0;
  for_each_element(
      n, Kind::D,
      [&](const SignedPermutation& u) {
        ++elements;
        const ThresholdPair p = tg_pair(u);
        images.insert(p);
        rec.expect(is_tg_pair(p), [&] { return "tg_pair(" + format_signed(u) + ") is not in TG_n"; });
        rec.expect(signed_from_tg(p) == u, [&] { return "signed_from_tg(tg_pair(" + format_signed(u) + ")) differs"; });
      },
      budget);
  const auto tg = enumerate_tg(n);
  rec.expect(images.size() == elements, [] { return std::string("tg_pair is not injective on D_n"); });
  rec.expect(std::equal(images.begin(), images.end(), tg.begin(), tg.end()),
             [] { return std::string("tg_pair image differs from TG_n"); });
  for_each_element(
      n, Kind::B,
      [&](const SignedPermutation& u) {
        rec.expect(edges_from_signed(u) == edges_from_signed(mate(u)),
                   [&] { return "edge set is not mate-invariant at " + format_signed(u); });
        if (n >= 2 && is_smooth(u)) {
          rec.expect(smooth_signed_from_tg(tg_pair(u)) == u,
                     [&] { return "smooth inverse fails at " + format_signed(u); });
        }
      },
      budget);
  return rec.done();
}

AuditResult audit_bijtgsbps(int n, const EnumerationBudget& budget) {
  if (n > 7) throw ResourceError("audit_bijtgsbps: n must be at most 7");
  check_budget(n, Kind::B, budget);
  Recorder rec("bijtgsbps", n);
  std::set<SimplyBarredPermutation> images;
  std::uint64_t graphs = 0;
  for_each_graph(n, [&](const SimpleGraph& g) {
    if (!is_threshold(g)) return;
    ++graphs;
    const SimplyBarredPermutation s = sbp_from_threshold(g);
    images.insert(s);
    const std::string where = format_graph(g);
    rec.expect(threshold_from_sbp(s) == g, [&] { return "round trip fails for " + where; });
    if (n < 2) return;
    const auto parts = blocks(s);
    rec.expect(classify_sbp(s).normal && parts.front().size() >= 2,
               [&] { return "image of " + where + " is not normal with first block >= 2"; });
    std::map<int, std::size_t> block_of_degree;
    for (std::size_t b = 0; b < parts.size(); ++b) {
      for (int v : parts[b]) {
        auto [it, fresh] = block_of_degree.emplace(g.degree(v), b);
        rec.expect(it->second == b, [&] { return "equal degrees in different blocks for " + where; });
        (void)fresh;
      }
    }
    std::set<std::size_t> distinct;
    for (auto [d, b] : block_of_degree) distinct.insert(b);
    rec.expect(distinct.size() == block_of_degree.size(), [&] { return "one block holds two degrees for " + where; });
  });
  rec.expect(images.size() == graphs, [] { return std::string("sbp_from_threshold is not injective"); });
  if (n >= 2) {
    std::uint64_t targets = 0;
    for_each_sbp(n, [&](const SimplyBarredPermutation& s) {
      if (!classify_sbp(s).normal || blocks(s).front().size() < 2) return;
      ++targets;
      rec.expect(images.count(s) == 1, [&] { return format_sbp(s) + " is not reached"; });
    });
    rec.expect(targets == graphs, [] { return std::string("target class size differs from the number of graphs"); });
  }
  return rec.done();
}

std::vector<std::string_view> audit_names() { return {"psi", "path", "theta", "chi", "tgdo", "bijtgsbps"}; }

AuditResult run_audit(std::string_view name, int n, const EnumerationBudget& budget) {
  if (name == "psi") return audit_psi(n, budget);
  if (name == "path") return audit_path(n, budget);
  if (name == "theta") return audit_theta(n, budget);
  if (name == "chi") return audit_chi(n, budget);
  if (name == "tgdo") return audit_tgdo(n, budget);
  if (name == "bijtgsbps") return audit_bijtgsbps(n, budget);
  throw ParseError("unknown bijection '" + std::string(name) + "'");
}

}  // namespace signedpaths
