#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scrollar/model.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

/// Outcome of a greedy fill. On failure, `tableau` holds the boxes filled
/// before the first unfillable box and `failure` names that box.
struct FillResult {
  Tableau tableau;
  std::optional<Box> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Fills `shape` diagonal by diagonal, giving each box the smallest symbol
/// exceeding its upper and left neighbours that satisfies the congruence for cD.
FillResult greedy_fill(const DivisorModel& model, RectShape shape, int c);

/// rk(cD) for c = 0..c_stop, where c_stop is the first c with rk(cD) = kc - g.
struct RankSequence {
  int genus = 0;
  int degree = 0;
  std::vector<int> ranks;
  int c_stop = 0;

  int at(int c) const { return ranks.at(static_cast<std::size_t>(c)); }
  /// Ranks carried by a tableau, i.e. c < c_stop.
  std::vector<int> special_ranks() const;
};

/// One attempted rank for a given c.
struct RankAttempt {
  int j = 0;          ///< rank increment tried is k - j
  int rank_try = 0;
  RectShape shape;    ///< empty when the nonspecial shortcut applies
  std::optional<FillResult> fill;
};

struct RankTrace {
  RankSequence sequence;
  /// attempts[c] for c = 1..c_stop (index 0 unused).
  std::vector<std::vector<RankAttempt>> attempts;
  /// tableaux[c] = lambda_D^c for 1 <= c < c_stop (index 0 unused).
  std::vector<Tableau> tableaux;
  std::vector<std::string> warnings;
};

/// Runs the j = 1, 2, ... search for every c up to the nonspecial threshold.
/// Throws ConsistencyError if no rank is found for some c or the iteration
/// cap is exceeded.
RankTrace trace_rank_sequence(const DivisorModel& model);

RankSequence rank_sequence(const DivisorModel& model);

struct ScrollarReport {
  std::vector<int> sigma;     ///< sigma_0 .. sigma_{k-1}
  std::vector<int> scrollar;  ///< a_j = sigma_j - sigma_{j-1}, j = 1..k-1
  std::optional<int> first_jump;
  int nonspecial = 0;
};

/// sigma_j = max over 0 <= c <= c_stop of (c + 1)(j + 1) - rk(cD) - 1.
ScrollarReport scrollar_invariants(const RankSequence& seq);

/// Smallest c >= 1 with rk(cD) > c, if it occurs by c_stop.
std::optional<int> first_jump(const RankSequence& seq);

}  // namespace scrollar
