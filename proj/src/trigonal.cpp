#include "scrollar/trigonal.hpp"

#include <algorithm>

#include "scrollar/errors.hpp"

namespace scrollar {

long floor_div(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

long ceil_div(long num, long den) { return -floor_div(-num, den); }

TrigonalParams TrigonalParams::make(int genus, int a, int b) {
  if (!(1 <= a && a < b && b <= genus)) {
    throw InputError("trigonal parameters need 1 <= a < b <= g");
  }
  TrigonalParams p{genus, a, b, 0, 0};
  p.ell = static_cast<int>(ceil_div(b - a + 4, 2));
  p.n = 1;
  while (genus > floor_div(3L * p.n + p.ell - 1, 2)) ++p.n;
  return p;
}

int trigonal_rank(const TrigonalParams& p, int c) {
  if (c < 0) throw InputError("multiple c must be non-negative");
  if (c < p.ell && c < p.n) return c;
  if (c < p.n) return static_cast<int>(ceil_div(3L * c - p.ell + 1, 2));
  return 3 * c - p.genus;
}

int trigonal_sigma1(const TrigonalParams& p) {
  return static_cast<int>(floor_div(p.n + p.ell, 2));
}

bool nonconvexity_pattern(const TrigonalParams& p) {
  for (int i = 0; i <= p.n - p.ell; ++i) {
    const int c = p.ell + i;
    const int step = trigonal_rank(p, c) - trigonal_rank(p, c - 1);
    if (step != (i % 2 == 1 ? 1 : 2)) return false;
  }
  return true;
}

long trigonal_residue(const TrigonalParams& p, int i, int c) {
  return i < p.b ? i - 1 : i - 1 - 3L * c;
}

ExplicitTableau explicit_tableau(const TrigonalParams& p, int c) {
  if (c < 1) throw InputError("multiple c must be positive");
  const int g = p.genus;
  const int a = p.a;
  const int b = p.b;
  const int r = trigonal_rank(p, c);
  const RectShape shape{g - 3 * c + r, r + 1};

  ExplicitTableau out{Tableau(shape), {}, {}, {}};
  out.regions.assign(static_cast<std::size_t>(shape.size()), 0);
  if (shape.empty()) return out;

  // alpha(y) in {-1, 0, 1} with alpha = y - a mod 3.
  auto alpha = [a](long y) {
    long v = (y - a) % 3;
    if (v < 0) v += 3;
    return v == 2 ? -1L : v;
  };
  // gamma(c) in {0, 1} with gamma = c - floor((a - b) / 2) mod 2.
  long gamma = (c - floor_div(a - b, 2)) % 2;
  if (gamma < 0) gamma += 2;

  // Box holding g in the sixth region, if the formula places one.
  std::optional<Box> g_box;
  if (c < p.ell) {
    g_box = Box{c, g - 2 * c - 1};
  } else if (c < p.n) {
    g_box = Box{static_cast<int>(ceil_div(3L * c - (p.ell - 1), 2)),
                g - 1 - static_cast<int>(floor_div(3L * c + (p.ell - 1), 2))};
  }

  for (int y = 0; y < shape.rows; ++y) {
    for (int x = 0; x < shape.cols; ++x) {
      const long knight = 2L * x + y + 1;
      const long region3 = 2L * x + 2L * y - (a - 4) - alpha(y);
      std::vector<std::pair<int, long>> hits;
      if (x + y + 1 < a) hits.emplace_back(1, x + y + 1);
      if (y >= std::max(a - 4, a - x - 1) && knight < b) hits.emplace_back(2, knight);
      if (y < a - 4 && a < region3 && region3 < b) hits.emplace_back(3, region3);
      if (knight >= b && x <= c && c < p.ell) hits.emplace_back(4, x + y + c + 1);
      if (c >= p.ell && b <= std::min(knight, region3)) {
        hits.emplace_back(5, x + y + p.ell + 1 + gamma);
      }
      const std::size_t idx = static_cast<std::size_t>(y * shape.cols + x);
      if (g_box && *g_box == Box{x, y}) {
        // The single g box is placed last and overrides the diagonal fill.
        out.tableau.set(x, y, g);
        out.regions[idx] = 6;
        continue;
      }
      if (hits.empty()) {
        out.uncovered.push_back({x, y});
        continue;
      }
      const bool agree = std::all_of(hits.begin(), hits.end(),
                                     [&](const auto& h) { return h.second == hits.front().second; });
      if (!agree) {
        out.conflicting.push_back({x, y});
        continue;
      }
      out.tableau.set(x, y, static_cast<int>(hits.front().second));
      out.regions[idx] = hits.front().first;
    }
  }
  return out;
}

int generic_sigma(int genus, int degree, int j) {
  if (degree < 3 || j < 0 || j > degree - 1) throw InputError("generic sigma index out of range");
  return static_cast<int>(ceil_div(static_cast<long>(j) * (genus + degree - 1), degree - 1));
}

}  // namespace scrollar
