#include "signedpaths/barred.hpp"

#include <stdexcept>

#include "signedpaths/errors.hpp"

namespace signedpaths {

SimplyBarredPermutation::SimplyBarredPermutation(Permutation w, PositionSet bars) : w_(std::move(w)), bars_(bars) {
  if (!bars_.is_subset_of(PositionSet::interval(1, w_.size()))) {
    throw PreconditionError("simply barred permutation: bars must lie in [n]");
  }
}

LooselyBarredPermutation::LooselyBarredPermutation(Permutation w, PositionSet bars) : w_(std::move(w)), bars_(bars) {
  if (!bars_.is_subset_of(PositionSet::interval(0, w_.size()))) {
    throw PreconditionError("loosely barred permutation: bars must lie in {0..n}");
  }
}

LatticePath upper_antidiagonal(PositionSet bars, int n) {
  if (!bars.is_subset_of(PositionSet::interval(1, n))) throw PreconditionError("upper_antidiagonal: bars must lie in [n]");
  std::vector<int> b{0};
  for (int p : bars.elements()) b.push_back(p);
  const std::size_t m = b.size() - 1;

  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  auto emit = [&](Step s, int count) { steps.insert(steps.end(), static_cast<std::size_t>(count), s); };
  emit(Step::South, n - b[m]);
  for (std::size_t k = 1; k <= m; ++k) {
    emit(Step::East, b[k] - b[k - 1]);
    emit(Step::South, b[m - k + 1] - b[m - k]);
  }
  emit(Step::East, n - b[m]);
  return LatticePath(std::move(steps));
}

SignedPermutation psi(const SimplyBarredPermutation& sbp) {
  return signed_from_path(upper_antidiagonal(sbp.bars(), sbp.size()), sbp.word());
}

SimplyBarredPermutation psi_inverse(const SignedPermutation& u) {
  const PathRepresentation rep = path_representation(u);
  PositionSet bars;
  int east = 0;
  for (Step s : rep.path.steps()) {
    if (s == Step::East) {
      ++east;
    } else if (east > 0) {
      bars.insert(east);
    }
  }
  return SimplyBarredPermutation(rep.lambda_x, bars);
}

int descb_formula(const SimplyBarredPermutation& sbp) {
  const PositionSet b = sbp.bars();
  return (descent_set(sbp.word()) - b).size() + (b.size() + 1) / 2;
}

int positive_descent_formula(const SimplyBarredPermutation& sbp) {
  // 0 is a type B descent of psi(w, B) exactly when |B| is odd.
  return descb_formula(sbp) - (sbp.bars().size() % 2);
}

PositionSet xi(PositionSet d, PositionSet b) {
  PositionSet out = d ^ b;
  out.erase(0);
  return out;
}

std::array<PositionSet, 2> xi_preimages(PositionSet d, PositionSet c) {
  PositionSet b1 = d ^ c;
  b1.erase(0);
  PositionSet b2 = b1;
  b2.insert(0);
  return {b1, b2};
}

SimplyBarredPermutation theta(const LooselyBarredPermutation& lbp) {
  return SimplyBarredPermutation(lbp.word(), xi(descent_set(lbp.word()), lbp.bars()));
}

LooselyBarredPermutation theta_inverse(const SimplyBarredPermutation& sbp, ThetaTarget target) {
  const PositionSet c = sbp.bars();
  const PositionSet d = descent_set(sbp.word());
  const bool c_even = c.size() % 2 == 0;
  const auto [b1, b2] = xi_preimages(d, c);
  PositionSet chosen;
  int expected = 0;
  if (target.parity == BarParity::Even) {
    if (descb_formula(sbp) != target.k) throw PreconditionError("theta_inverse: input is not in SBP_{n,k}");
    chosen = c_even ? b1 : b2;
    expected = 2 * target.k;
  } else {
    if (positive_descent_formula(sbp) != target.k) throw PreconditionError("theta_inverse: input is not in SBP_n^k");
    chosen = c_even ? b2 : b1;
    expected = 2 * target.k + 1;
  }
  if (d.size() + chosen.size() != expected) throw std::logic_error("theta_inverse: preimage has the wrong weight");
  return LooselyBarredPermutation(sbp.word(), chosen);
}

std::vector<std::vector<int>> blocks(const SimplyBarredPermutation& sbp) {
  std::vector<std::vector<int>> out(1);
  const auto& word = sbp.word().word();
  for (int i = 1; i <= sbp.size(); ++i) {
    out.back().push_back(word[static_cast<std::size_t>(i - 1)]);
    if (sbp.bars().contains(i)) out.emplace_back();
  }
  return out;
}

int central_block_index(const SimplyBarredPermutation& sbp) {
  return (sbp.bars().size() + 2) / 2;
}

std::vector<int> central_block(const SimplyBarredPermutation& sbp) {
  return blocks(sbp)[static_cast<std::size_t>(central_block_index(sbp) - 1)];
}

SimplyBarredPermutation from_blocks(const std::vector<std::vector<int>>& parts) {
  if (parts.empty()) throw PreconditionError("from_blocks: needs at least one block");
  std::vector<int> word;
  PositionSet bars;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty() && i + 1 != parts.size()) throw PreconditionError("from_blocks: only the last block may be empty");
    word.insert(word.end(), parts[i].begin(), parts[i].end());
    if (i + 1 != parts.size()) bars.insert(static_cast<int>(word.size()));
  }
  return SimplyBarredPermutation(Permutation(std::move(word)), bars);
}

SbpClassification classify_sbp(const SimplyBarredPermutation& sbp) {
  SbpClassification c{true, central_block(sbp).size() >= 2};
  for (const auto& block : blocks(sbp)) {
    if (!std::is_sorted(block.begin(), block.end())) c.normal = false;
  }
  return c;
}

}  // namespace signedpaths
