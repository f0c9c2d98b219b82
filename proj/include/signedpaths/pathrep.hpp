#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signedpaths/sgnperm.hpp"

namespace signedpaths {

enum class Step : char { East = 'E', South = 'S' };

/// An East/South lattice path from (0, n) to (n, 0), stored as its step word.
class LatticePath {
 public:
  LatticePath() = default;
  /// PreconditionError unless the word has as many East as South steps.
  explicit LatticePath(std::vector<Step> steps);

  /// Parses a word over {E, S}; ParseError on other characters.
  static LatticePath parse(std::string_view text);

  int size() const { return static_cast<int>(steps_.size() / 2); }
  const std::vector<Step>& steps() const { return steps_; }

  /// Mirror image along the diagonal y = x (reverse the word, swap E and S).
  LatticePath reflected() const;
  bool is_diagonal_symmetric() const { return reflected() == *this; }

  std::string to_string() const;

  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
};

/// An antitone map f: {0..n} -> {0..n} with f(0) = n.
class HeightFunction {
 public:
  HeightFunction() : values_{0} {}
  /// PreconditionError unless values = (f(0), ..., f(n)) is antitone,
  /// within [0, n] and starts with n.
  explicit HeightFunction(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()) - 1; }
  int operator()(int x) const { return values_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const HeightFunction&) const = default;

 private:
  std::vector<int> values_;
};

/// f(x) is the ordinate of the path right after its x-th East step; f(0) = n.
HeightFunction height_function(const LatticePath& path);
LatticePath path_from_height(const HeightFunction& f);

/// y <= f(x) iff x <= f(y), for all x, y in {0..n}.
bool is_self_adjoint(const HeightFunction& f);

/// gamma_f = max {x : x <= f(x)}.
int center(const HeightFunction& f);

struct HeightClassification {
  bool self_adjoint;
  bool fixed_point_free;
  int center;
  std::optional<int> fixed_point;
};

HeightClassification classify_height(const HeightFunction& f);

/// Unit cell (x, y), 1 <= x, y <= n, lies below the path with height f.
inline bool cell_below(const HeightFunction& f, int x, int y) { return y <= f(x); }

struct GridPoint {
  int x;
  int y;
  bool operator==(const GridPoint&) const = default;
  auto operator<=>(const GridPoint&) const = default;
};

/// Corner points where an East step is immediately followed by a South step.
std::vector<GridPoint> east_south_turns(const LatticePath& path);

/// Lattice points (t, t) visited by the path.
std::vector<GridPoint> diagonal_points(const LatticePath& path);

/// The path plus the x-axis labelling; the y-axis labelling is -lambda_x.
struct PathRepresentation {
  LatticePath path;
  Permutation lambda_x;

  int lambda_y(int x) const { return -lambda_x(x); }
  bool operator==(const PathRepresentation&) const = default;
};

/// Scans the full notation: positive letters give East steps (and, in order,
/// lambda_x), negative letters give South steps.
PathRepresentation path_representation(const SignedPermutation& u);

/// Inverse of path_representation. PreconditionError when the path is not
/// symmetric along the diagonal or the sizes disagree.
SignedPermutation signed_from_path(const LatticePath& path, const Permutation& w);

/// inv_B(u) read off the path: positive part from inv(lambda_x), negative
/// part from the cells lying below the path.
InversionSet inversions_via_path(const SignedPermutation& u);

/// Grid drawing with lambda_x under the columns and lambda_y beside the rows.
std::string render_ascii(const PathRepresentation& rep);
std::string render_svg(const PathRepresentation& rep);

}  // namespace signedpaths
