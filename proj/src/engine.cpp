#include "scrollar/engine.hpp"

#include <algorithm>

#include "scrollar/errors.hpp"

namespace scrollar {

FillResult greedy_fill(const DivisorModel& model, RectShape shape, int c) {
  if (shape.empty()) throw InputError("greedy fill needs a nonempty shape");
  FillResult result{Tableau(shape), std::nullopt};
  Tableau& t = result.tableau;
  const int g = model.genus();
  for (const Box box : diagonal_order(shape)) {
    const int above = box.y > 0 ? t.at(box.x, box.y - 1) : 0;
    const int left = box.x > 0 ? t.at(box.x - 1, box.y) : 0;
    int s = std::max(above, left) + 1;
    while (s <= g && !model.congruence_ok(s, box.diagonal_index(), c)) ++s;
    if (s > g) {
      result.failure = box;
      return result;
    }
    t.set(box, s);
  }
  return result;
}

std::vector<int> RankSequence::special_ranks() const {
  return {ranks.begin(), ranks.begin() + c_stop};
}

RankTrace trace_rank_sequence(const DivisorModel& model) {
  const int g = model.genus();
  const int k = model.degree();
  const int cap = (2 * g - 1 + k - 1) / k + 1;

  RankTrace trace;
  trace.sequence = RankSequence{g, k, {0}, 0};
  trace.attempts.emplace_back();
  trace.tableaux.emplace_back();

  for (int c = 1;; ++c) {
    if (c > cap) throw ConsistencyError("rank iteration exceeded cap " + std::to_string(cap));
    const int previous = trace.sequence.ranks.back();
    const int nonspecial_rank = k * c - g;
    std::vector<RankAttempt> attempts;
    std::optional<int> rank;
    Tableau found;
    for (int j = 1; j <= k - 1 && !rank; ++j) {
      RankAttempt attempt{j, previous + k - j, {}, std::nullopt};
      const int rows = g - k * c + attempt.rank_try;
      if (rows <= 0) {
        rank = nonspecial_rank;
      } else {
        attempt.shape = RectShape{rows, attempt.rank_try + 1};
        attempt.fill = greedy_fill(model, attempt.shape, c);
        if (attempt.fill->ok()) {
          rank = attempt.rank_try;
          found = attempt.fill->tableau;
        }
      }
      attempts.push_back(std::move(attempt));
    }
    if (!rank) {
      throw ConsistencyError("no rank found for c = " + std::to_string(c) +
                             "; model lies outside the algorithm's hypotheses");
    }
    if (c == 1 && *rank != 1) {
      trace.warnings.push_back("rk(D) = " + std::to_string(*rank) + ", expected 1");
    }
    trace.sequence.ranks.push_back(*rank);
    trace.attempts.push_back(std::move(attempts));
    if (*rank == nonspecial_rank) {
      trace.sequence.c_stop = c;
      break;
    }
    trace.tableaux.push_back(std::move(found));
  }
  return trace;
}

RankSequence rank_sequence(const DivisorModel& model) {
  return trace_rank_sequence(model).sequence;
}

ScrollarReport scrollar_invariants(const RankSequence& seq) {
  ScrollarReport report;
  for (int j = 0; j < seq.degree; ++j) {
    int sigma = 0;
    for (int c = 0; c <= seq.c_stop; ++c) {
      sigma = std::max(sigma, (c + 1) * (j + 1) - seq.at(c) - 1);
    }
    report.sigma.push_back(sigma);
    if (j > 0) report.scrollar.push_back(sigma - report.sigma[static_cast<std::size_t>(j - 1)]);
  }
  report.first_jump = first_jump(seq);
  report.nonspecial = seq.c_stop;
  return report;
}

std::optional<int> first_jump(const RankSequence& seq) {
  for (int c = 1; c <= seq.c_stop; ++c) {
    if (seq.at(c) > c) return c;
  }
  return std::nullopt;
}

}  // namespace scrollar
