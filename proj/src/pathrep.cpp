#include "signedpaths/pathrep.hpp"

#include <algorithm>
#include <sstream>

#include "signedpaths/errors.hpp"

namespace signedpaths {

// -- LatticePath ------------------------------------------------------------

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  const auto east = std::count(steps_.begin(), steps_.end(), Step::East);
  if (2 * static_cast<std::size_t>(east) != steps_.size()) {
    throw PreconditionError("LatticePath: needs equally many East and South steps");
  }
  if (size() > kMaxRank) throw PreconditionError("LatticePath: path too long");
}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'E' || c == 'e') {
      steps.push_back(Step::East);
    } else if (c == 'S' || c == 's') {
      steps.push_back(Step::South);
    } else {
      throw ParseError("path text: unexpected character '" + std::string(1, c) + "'");
    }
  }
  try {
    return LatticePath(std::move(steps));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

LatticePath LatticePath::reflected() const {
  std::vector<Step> out(steps_.rbegin(), steps_.rend());
  for (Step& s : out) s = s == Step::East ? Step::South : Step::East;
  return LatticePath(std::move(out));
}

std::string LatticePath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

// -- HeightFunction ---------------------------------------------------------

HeightFunction::HeightFunction(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw PreconditionError("HeightFunction: needs f(0)");
  const int n = size();
  if (n > kMaxRank) throw PreconditionError("HeightFunction: too large");
  if (values_[0] != n) throw PreconditionError("HeightFunction: f(0) must equal n");
  for (std::size_t x = 0; x < values_.size(); ++x) {
    if (values_[x] < 0 || values_[x] > n) throw PreconditionError("HeightFunction: values must lie in [0, n]");
    if (x > 0 && values_[x] > values_[x - 1]) throw PreconditionError("HeightFunction: must be antitone");
  }
}

HeightFunction height_function(const LatticePath& path) {
  const int n = path.size();
  std::vector<int> f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = n;
  int x = 0;
  int y = n;
  for (Step s : path.steps()) {
    if (s == Step::South) {
      --y;
    } else {
      ++x;
      f[static_cast<std::size_t>(x)] = y;
    }
  }
  return HeightFunction(std::move(f));
}

LatticePath path_from_height(const HeightFunction& f) {
  const int n = f.size();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n));
  int y = n;
  for (int x = 1; x <= n; ++x) {
    for (; y > f(x); --y) steps.push_back(Step::South);
    steps.push_back(Step::East);
  }
  for (; y > 0; --y) steps.push_back(Step::South);
  return LatticePath(std::move(steps));
}

bool is_self_adjoint(const HeightFunction& f) {
  const int n = f.size();
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) {
      if ((y <= f(x)) != (x <= f(y))) return false;
    }
  }
  return true;
}

int center(const HeightFunction& f) {
  int gamma = 0;  // 0 <= f(0) = n always
  for (int x = 0; x <= f.size(); ++x) {
    if (x <= f(x)) gamma = x;
  }
  return gamma;
}

HeightClassification classify_height(const HeightFunction& f) {
  HeightClassification c{is_self_adjoint(f), true, center(f), std::nullopt};
  for (int x = 0; x <= f.size(); ++x) {
    if (f(x) == x) {
      c.fixed_point_free = false;
      c.fixed_point = x;
    }
  }
  return c;
}

std::vector<GridPoint> east_south_turns(const LatticePath& path) {
  std::vector<GridPoint> turns;
  int x = 0;
  int y = path.size();
  const auto& steps = path.steps();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::East) {
      ++x;
      if (i + 1 < steps.size() && steps[i + 1] == Step::South) turns.push_back({x, y});
    } else {
      --y;
    }
  }
  return turns;
}

std::vector<GridPoint> diagonal_points(const LatticePath& path) {
  std::vector<GridPoint> out;
  int x = 0;
  int y = path.size();
  if (x == y) out.push_back({x, y});
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++x;
    } else {
      --y;
    }
    if (x == y) out.push_back({x, y});
  }
  return out;
}

// -- path representation ----------------------------------------------------

PathRepresentation path_representation(const SignedPermutation& u) {
  std::vector<Step> steps;
  std::vector<int> lambda_x;
  const std::vector<int> full = u.full_notation();
  steps.reserve(full.size());
  lambda_x.reserve(static_cast<std::size_t>(u.size()));
  for (int letter : full) {
    if (letter > 0) {
      steps.push_back(Step::East);
      lambda_x.push_back(letter);
    } else {
      steps.push_back(Step::South);
    }
  }
  return PathRepresentation{LatticePath(std::move(steps)), Permutation(std::move(lambda_x))};
}

SignedPermutation signed_from_path(const LatticePath& path, const Permutation& w) {
  const int n = path.size();
  if (w.size() != n) throw PreconditionError("signed_from_path: path and permutation sizes differ");
  if (!path.is_diagonal_symmetric()) throw PreconditionError("signed_from_path: path must be symmetric along the diagonal");
  std::vector<int> full;
  full.reserve(static_cast<std::size_t>(2 * n));
  int x = 0;
  int y = n;
  for (Step s : path.steps()) {
    if (s == Step::East) {
      full.push_back(w(++x));
    } else {
      // The South step from ordinate y to y - 1 carries lambda_y(y) = -w(y).
      full.push_back(-w(y--));
    }
  }
  return SignedPermutation(std::vector<int>(full.begin() + n, full.end()));
}

InversionSet inversions_via_path(const SignedPermutation& u) {
  const PathRepresentation rep = path_representation(u);
  const HeightFunction f = height_function(rep.path);
  InversionSet inv = inversion_set(rep.lambda_x);
  const int n = u.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= x; ++y) {
      if (!cell_below(f, x, y)) continue;
      // (x, y) and (y, x) are identified; both name the pair {w_x, w_y}.
      const int a = rep.lambda_x(x);
      const int b = rep.lambda_x(y);
      inv.negative.emplace_back(-std::min(a, b), std::max(a, b));
    }
  }
  std::sort(inv.negative.begin(), inv.negative.end());
  return inv;
}

// -- rendering --------------------------------------------------------------

std::string render_ascii(const PathRepresentation& rep) {
  const int n = rep.path.size();
  constexpr int kCell = 4;
  int label_width = 1;
  for (int x = 1; x <= n; ++x) label_width = std::max<int>(label_width, static_cast<int>(std::to_string(rep.lambda_y(x)).size()));
  const int margin = label_width + 2;
  const int width = margin + kCell * n + 1;
  std::vector<std::string> canvas(static_cast<std::size_t>(2 * n + 1), std::string(static_cast<std::size_t>(width), ' '));
  auto put = [&](int row, int col, char c) { canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c; };
  auto row_of = [&](int y) { return 2 * (n - y); };
  auto col_of = [&](int x) { return margin + kCell * x; };

  for (int y = 0; y <= n; ++y) {
    for (int x = 0; x <= n; ++x) put(row_of(y), col_of(x), x == y ? '/' : '.');
  }
  int x = 0;
  int y = n;
  put(row_of(y), col_of(x), '+');
  for (Step s : rep.path.steps()) {
    if (s == Step::East) {
      for (int c = col_of(x) + 1; c < col_of(x + 1); ++c) put(row_of(y), c, '-');
      ++x;
    } else {
      put(row_of(y) + 1, col_of(x), '|');
      --y;
    }
    put(row_of(y), col_of(x), '+');
  }
  for (int yy = n; yy >= 1; --yy) {
    const std::string label = std::to_string(rep.lambda_y(yy));
    canvas[static_cast<std::size_t>(row_of(yy) + 1)].replace(static_cast<std::size_t>(label_width) - label.size(), label.size(), label);
  }
  std::string axis(static_cast<std::size_t>(width), ' ');
  for (int xx = 1; xx <= n; ++xx) {
    const std::string label = std::to_string(rep.lambda_x(xx));
    const int mid = col_of(xx) - kCell / 2;
    axis.replace(static_cast<std::size_t>(mid), label.size(), label);
  }

  std::ostringstream out;
  out << "path: " << rep.path.to_string() << '\n';
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  while (!axis.empty() && axis.back() == ' ') axis.pop_back();
  out << axis << '\n';
  return out.str();
}

std::string render_svg(const PathRepresentation& rep) {
  const int n = rep.path.size();
  constexpr int kCell = 40;
  constexpr int kMargin = 50;
  const int side = 2 * kMargin + kCell * n;
  auto px = [&](int x) { return kMargin + kCell * x; };
  auto py = [&](int y) { return kMargin + kCell * (n - y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int i = 0; i <= n; ++i) {
    out << "    <line x1=\"" << px(i) << "\" y1=\"" << py(0) << "\" x2=\"" << px(i) << "\" y2=\"" << py(n) << "\"/>\n";
    out << "    <line x1=\"" << px(0) << "\" y1=\"" << py(i) << "\" x2=\"" << px(n) << "\" y2=\"" << py(i) << "\"/>\n";
  }
  out << "  </g>\n"
      << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(n) << "\" y2=\"" << py(n)
      << "\" stroke=\"#999999\" stroke-dasharray=\"2,4\"/>\n"
      << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" stroke-dasharray=\"8,4\" points=\"";
  int x = 0;
  int y = n;
  out << px(x) << ',' << py(y);
  for (Step s : rep.path.steps()) {
    if (s == Step::East) {
      ++x;
    } else {
      --y;
    }
    out << ' ' << px(x) << ',' << py(y);
  }
  out << "\"/>\n  <g font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">\n";
  for (int i = 1; i <= n; ++i) {
    out << "    <text x=\"" << px(i) - kCell / 2 << "\" y=\"" << py(0) + 25 << "\">" << rep.lambda_x(i) << "</text>\n";
    out << "    <text x=\"" << kMargin - 22 << "\" y=\"" << py(i) + kCell / 2 + 5 << "\">" << rep.lambda_y(i) << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace signedpaths
