#include "signedpaths/sgnperm.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "signedpaths/errors.hpp"

namespace signedpaths {

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::A: return "A";
    case Kind::B: return "B";
    case Kind::D: return "D";
  }
  return "?";
}

namespace {

void check_absolute_values(const std::vector<int>& word, const char* what) {
  const int n = static_cast<int>(word.size());
  if (n > kMaxRank) throw PreconditionError(std::string(what) + ": size exceeds " + std::to_string(kMaxRank));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int letter : word) {
    const int a = std::abs(letter);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw PreconditionError(std::string(what) + ": letters must have distinct absolute values in [n]");
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

}  // namespace

// -- Permutation ------------------------------------------------------------

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  for (int v : word_) {
    if (v < 1) throw PreconditionError("Permutation: letters must be positive");
  }
  check_absolute_values(word_, "Permutation");
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(word), Unchecked{});
}

int Permutation::position_of(int v) const {
  const auto it = std::find(word_.begin(), word_.end(), v);
  if (it == word_.end()) throw PreconditionError("Permutation::position_of: letter not present");
  return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (std::size_t i = 0; i < word_.size(); ++i) inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv), Unchecked{});
}

// -- SignedPermutation ------------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  check_absolute_values(window_, "SignedPermutation");
}

SignedPermutation SignedPermutation::identity(int n) {
  return from_permutation(Permutation::identity(n));
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& w) {
  return SignedPermutation(w.word(), Unchecked{});
}

std::vector<int> SignedPermutation::full_notation() const {
  std::vector<int> full;
  full.reserve(2 * window_.size());
  for (auto it = window_.rbegin(); it != window_.rend(); ++it) full.push_back(-*it);
  full.insert(full.end(), window_.begin(), window_.end());
  return full;
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

// -- descents ---------------------------------------------------------------

PositionSet descent_set(const Permutation& w) {
  PositionSet d;
  const auto& word = w.word();
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] > word[i + 1]) d.insert(static_cast<int>(i) + 1);
  }
  return d;
}

PositionSet descent_set(const SignedPermutation& u, Kind kind) {
  const auto& win = u.window();
  const int n = u.size();
  PositionSet d;
  for (int i = 1; i < n; ++i) {
    if (win[static_cast<std::size_t>(i - 1)] > win[static_cast<std::size_t>(i)]) d.insert(i);
  }
  switch (kind) {
    case Kind::A:
      break;
    case Kind::B:
      if (n >= 1 && win[0] < 0) d.insert(0);
      break;
    case Kind::D:
      if (n < 2) throw DomainError("type D descents need n >= 2 (sentinel u_0 = -u_2)");
      if (-win[1] > win[0]) d.insert(0);
      break;
  }
  return d;
}

int descent_count(const Permutation& w) { return descent_set(w).size(); }

int descent_count(const SignedPermutation& u, Kind kind) { return descent_set(u, kind).size(); }

std::vector<int> descent_set_d_full(const SignedPermutation& u) {
  const int n = u.size();
  if (n < 2) throw DomainError("type D descents need n >= 2");
  std::vector<int> out;
  if (u(-1) > u(2)) out.push_back(-1);
  for (int i = 1; i < n; ++i) {
    if (u(i) > u(i + 1)) out.push_back(i);
  }
  return out;
}

// -- inversions -------------------------------------------------------------

bool InversionSet::is_subset_of(const InversionSet& other) const {
  return std::includes(other.positive.begin(), other.positive.end(), positive.begin(), positive.end()) &&
         std::includes(other.negative.begin(), other.negative.end(), negative.begin(), negative.end());
}

InversionSet inversion_set(const Permutation& w) {
  InversionSet inv;
  const Permutation pos = w.inverse();
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pos(i) > pos(j)) inv.positive.emplace_back(i, j);
    }
  }
  return inv;
}

InversionSet inversion_set(const SignedPermutation& u, Kind kind) {
  const int n = u.size();
  // position[v + n] = u^{-1}(v) for v in ±[n]
  std::vector<int> position(static_cast<std::size_t>(2 * n + 1), 0);
  for (int p = 1; p <= n; ++p) {
    position[static_cast<std::size_t>(u(p) + n)] = p;
    position[static_cast<std::size_t>(-u(p) + n)] = -p;
  }
  auto at = [&](int v) { return position[static_cast<std::size_t>(v + n)]; };

  InversionSet inv;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (at(i) > at(j)) inv.positive.emplace_back(i, j);
    }
  }
  if (kind == Kind::A) return inv;
  for (int i = -n; i <= -1; ++i) {
    for (int j = -i; j <= n; ++j) {
      if (kind == Kind::D && j == -i) continue;
      if (at(i) > at(j)) inv.negative.emplace_back(i, j);
    }
  }
  return inv;
}

// -- mates, smoothness, chi -------------------------------------------------

SignedPermutation mate(const SignedPermutation& u) {
  std::vector<int> win = u.window();
  if (!win.empty()) win[0] = -win[0];
  return SignedPermutation(std::move(win));
}

bool is_smooth(const SignedPermutation& u) {
  if (u.size() < 2) throw DomainError("smoothness needs n >= 2");
  return (u(1) > 0) == (u(2) > 0);
}

Classification classify(const SignedPermutation& u) {
  return Classification{is_smooth(u), u.is_even_signed()};
}

SignedPermutation smooth_representative(const SignedPermutation& u) {
  return is_smooth(u) ? u : mate(u);
}

SignedPermutation even_representative(const SignedPermutation& u) {
  if (u.size() < 1) throw DomainError("mates need n >= 1");
  return u.is_even_signed() ? u : mate(u);
}

ChiImage chi(const SignedPermutation& u) {
  if (is_smooth(u)) throw PreconditionError("chi: input must be non-smooth");
  const int x = std::abs(u(1));
  std::vector<int> tail;
  tail.reserve(static_cast<std::size_t>(u.size() - 1));
  for (int i = 2; i <= u.size(); ++i) {
    const int v = u(i);
    const int a = std::abs(v);
    const int renamed = a > x ? a - 1 : a;
    tail.push_back(v < 0 ? -renamed : renamed);
  }
  return ChiImage{x, SignedPermutation(std::move(tail))};
}

SignedPermutation chi_inverse(int x, const SignedPermutation& v) {
  const int n = v.size() + 1;
  if (v.size() < 1) throw PreconditionError("chi_inverse: tail must be non-empty");
  if (x < 1 || x > n) throw PreconditionError("chi_inverse: x must lie in [n]");
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(n));
  window.push_back(0);
  for (int letter : v.window()) {
    const int a = std::abs(letter);
    const int renamed = a >= x ? a + 1 : a;
    window.push_back(letter < 0 ? -renamed : renamed);
  }
  // Opposite sign to the renamed tail's first letter makes the result non-smooth.
  window[0] = window[1] > 0 ? -x : x;
  return SignedPermutation(std::move(window));
}

// -- window decomposition ---------------------------------------------------

namespace {

// Sorted image of iota: the positive values in `positive_image` together
// with -a for every a in [n] outside it.
std::vector<int> iota_image(int n, PositionSet positive_image) {
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(n));
  for (int a = n; a >= 1; --a) {
    if (!positive_image.contains(a)) image.push_back(-a);
  }
  for (int a = 1; a <= n; ++a) {
    if (positive_image.contains(a)) image.push_back(a);
  }
  return image;
}

}  // namespace

WindowDecomposition window_decomposition(const SignedPermutation& u) {
  const int n = u.size();
  PositionSet positive;
  for (int v : u.window()) {
    if (v > 0) positive.insert(v);
  }
  const std::vector<int> image = iota_image(n, positive);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int v : u.window()) {
    word.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()) + 1);
  }
  return WindowDecomposition{Permutation(std::move(word)), positive};
}

SignedPermutation compose_window(const WindowDecomposition& d) {
  const int n = d.w.size();
  if (!d.positive_image.is_subset_of(PositionSet::interval(1, n))) {
    throw PreconditionError("compose_window: positive image must lie in [n]");
  }
  const std::vector<int> image = iota_image(n, d.positive_image);
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(n));
  for (int v : d.w.word()) window.push_back(image[static_cast<std::size_t>(v - 1)]);
  return SignedPermutation(std::move(window));
}

}  // namespace signedpaths
