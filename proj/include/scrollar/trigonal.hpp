#pragma once

#include <vector>

#include "scrollar/deletion.hpp"
#include "scrollar/model.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

/// Floor and ceiling of num / den for den > 0, correct for negative num.
long floor_div(long num, long den);
long ceil_div(long num, long den);

/// Trigonal chain with interior torsion-0 loops at a < b and the divisor
/// D_{a,b} whose tableau is lambda_{a,b}.
struct TrigonalParams {
  int genus = 0;
  int a = 0;
  int b = 0;
  int ell = 0;  ///< ceil((b - a + 4) / 2)
  int n = 0;    ///< smallest n >= 1 with g <= floor((3n + ell - 1) / 2)

  /// Throws InputError unless 1 <= a < b <= g.
  static TrigonalParams make(int genus, int a, int b);
  DeletionSpec spec() const { return trigonal_spec(genus, a, b); }
};

/// Closed-form rank: c below ell, ceil((3c - ell + 1) / 2) up to n, then 3c - g.
int trigonal_rank(const TrigonalParams& params, int c);

/// floor((n + ell) / 2).
int trigonal_sigma1(const TrigonalParams& params);

/// Do the closed-form increments at c = ell + i alternate 2, 1, 2, ... for
/// 0 <= i <= n - ell?
bool nonconvexity_pattern(const TrigonalParams& params);

/// Right-hand side of the trigonal congruence for symbol i in a tableau for
/// cD_{a,b}: i - 1 for i < b, and i - 1 - 3c for i >= b.
long trigonal_residue(const TrigonalParams& params, int i, int c);

/// The region-by-region formula for lambda_{a,b}^c evaluated on the
/// (g - 3c + r(c)) x (r(c) + 1) rectangle.
struct ExplicitTableau {
  Tableau tableau;              ///< uncovered and conflicting boxes hold 0
  std::vector<Box> uncovered;   ///< no region applies
  std::vector<Box> conflicting; ///< regions disagree on the value
  std::vector<int> regions;     ///< region (1..6) that set each box, row-major; 0 if none

  bool complete() const { return uncovered.empty() && conflicting.empty(); }
};

ExplicitTableau explicit_tableau(const TrigonalParams& params, int c);

/// ceil(j (g + k - 1) / (k - 1)) for 0 <= j <= k - 1.
int generic_sigma(int genus, int degree, int j);

}  // namespace scrollar
