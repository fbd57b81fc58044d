#pragma once

#include <vector>

#include "scrollar/deletion.hpp"
#include "scrollar/profile.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

/// A degree-k, rank-1 divisor class D on the chain of loops whose tableau is
/// lambda_D, together with the nondegenerate torsion profile it forces and
/// the break-divisor coordinates xi_i of D.
class DivisorModel {
 public:
  const DeletionSpec& spec() const { return spec_; }
  const TorsionProfile& profile() const { return profile_; }
  const Tableau& lambda_D() const { return lambda_D_; }
  int genus() const { return spec_.genus; }
  int degree() const { return spec_.degree; }

  /// xi_i of D itself. Exact when m_i = 0, a residue representative otherwise.
  long xi_base(int i) const;

  /// xi_i of cD: c * xi_i - (c - 1)(i - 1). Not reduced modulo m_i.
  long xi_power(int i, int c) const;

  /// May symbol s occupy a box with y - x = delta in a tableau for cD?
  bool congruence_ok(int s, long delta, int c) const;

  friend DivisorModel derive_model(const DeletionSpec& spec);

 private:
  DeletionSpec spec_;
  TorsionProfile profile_;
  Tableau lambda_D_;
  std::vector<long> xi_;
};

/// Builds lambda_D and reads off m_i (0 for symbols appearing once, the
/// diagonal gap 2 + d1(i) - d0(i) for symbols appearing twice) and xi_i (the
/// diagonal index of the column-0 box of i, else its column-1 box).
DivisorModel derive_model(const DeletionSpec& spec);

/// m_i = 2 + #{a in col1_deleted : a < i} - #{b in col0_deleted : b < i}.
int nondegenerate_order(const DeletionSpec& spec, int i);

}  // namespace scrollar
