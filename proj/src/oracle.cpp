#include "scrollar/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "scrollar/engine.hpp"
#include "scrollar/errors.hpp"

namespace scrollar {

namespace {

// Depth-first search over the boxes of `shape` in diagonal order. `admissible`
// decides whether symbol s may occupy a box given the partial filling; `place`
// and `unplace` let a policy track per-symbol state.
class Backtracker {
 public:
  using Admissible = std::function<bool(int s, Box box)>;
  using Hook = std::function<void(int s, Box box)>;

  Backtracker(RectShape shape, int genus, EnumerationBudget budget,
              std::optional<std::size_t> limit, Admissible admissible, Hook place, Hook unplace)
      : order_(diagonal_order(shape)),
        partial_(shape),
        genus_(genus),
        budget_(budget),
        limit_(limit),
        admissible_(std::move(admissible)),
        place_(std::move(place)),
        unplace_(std::move(unplace)) {}

  Enumeration run() {
    if (order_.empty()) throw InputError("enumeration needs a nonempty shape");
    descend(0);
    if (result_.exhausted && budget_.on_exhaustion == EnumerationBudget::OnExhaustion::Error) {
      throw BudgetExhausted("enumeration budget of " + std::to_string(budget_.max_nodes) +
                            " nodes exhausted");
    }
    return std::move(result_);
  }

 private:
  bool done() const {
    return result_.exhausted || (limit_ && result_.tableaux.size() >= *limit_);
  }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      result_.tableaux.push_back(partial_);
      return;
    }
    const Box box = order_[depth];
    const int above = box.y > 0 ? partial_.at(box.x, box.y - 1) : 0;
    const int left = box.x > 0 ? partial_.at(box.x - 1, box.y) : 0;
    // Boxes still to fill to the right and below need strictly larger symbols.
    const int room = (partial_.cols() - 1 - box.x) + (partial_.rows() - 1 - box.y);
    for (int s = std::max(above, left) + 1; s + room <= genus_; ++s) {
      if (done()) return;
      if (++result_.nodes > budget_.max_nodes) {
        result_.exhausted = true;
        return;
      }
      if (!admissible_(s, box)) continue;
      partial_.set(box, s);
      place_(s, box);
      descend(depth + 1);
      unplace_(s, box);
      partial_.set(box, 0);
    }
  }

  std::vector<Box> order_;
  Tableau partial_;
  int genus_;
  EnumerationBudget budget_;
  std::optional<std::size_t> limit_;
  Admissible admissible_;
  Hook place_;
  Hook unplace_;
  Enumeration result_;
};

bool has_tableau(const DivisorModel& model, RectShape shape, int c, EnumerationBudget budget) {
  return !enumerate_tableaux(model, shape, c, budget, 1).tableaux.empty();
}

}  // namespace

Enumeration enumerate_tableaux(const DivisorModel& model, RectShape shape, int c,
                               EnumerationBudget budget, std::optional<std::size_t> limit) {
  if (c < 1) throw InputError("multiple c must be positive");
  auto noop = [](int, Box) {};
  Backtracker search(
      shape, model.genus(), budget, limit,
      [&](int s, Box box) { return model.congruence_ok(s, box.diagonal_index(), c); }, noop, noop);
  return search.run();
}

Enumeration enumerate_tableaux(const TorsionProfile& profile, RectShape shape,
                               EnumerationBudget budget, std::optional<std::size_t> limit) {
  // Diagonal of the first occurrence of each symbol, with its multiplicity.
  std::vector<int> anchor(static_cast<std::size_t>(profile.genus() + 1), 0);
  std::vector<int> count(static_cast<std::size_t>(profile.genus() + 1), 0);
  Backtracker search(
      shape, profile.genus(), budget, limit,
      [&](int s, Box box) {
        const auto i = static_cast<std::size_t>(s);
        return count[i] == 0 || congruent(box.diagonal_index(), anchor[i], profile.order(s));
      },
      [&](int s, Box box) {
        const auto i = static_cast<std::size_t>(s);
        if (count[i]++ == 0) anchor[i] = box.diagonal_index();
      },
      [&](int s, Box) { --count[static_cast<std::size_t>(s)]; });
  return search.run();
}

int max_rank(const DivisorModel& model, int c, EnumerationBudget budget) {
  const int g = model.genus();
  const int degree = model.degree() * c;
  // The first row and last column of a rank-r rectangle carry g - d + 2r
  // distinct symbols, so r <= d / 2.
  for (int r = degree / 2; r > degree - g && r >= 0; --r) {
    if (has_tableau(model, RectShape{g - degree + r, r + 1}, c, budget)) return r;
  }
  return std::max(degree - g, -1);
}

int torus_dimension(const Tableau& t, int genus) {
  std::set<int> symbols(t.entries().begin(), t.entries().end());
  symbols.erase(0);
  return genus - static_cast<int>(symbols.size());
}

WrdAnswer wrd_nonempty(const TorsionProfile& profile, int degree, int rank,
                       EnumerationBudget budget) {
  const int g = profile.genus();
  if (rank <= degree - g) return {true, true};
  const RectShape shape{g - degree + rank, rank + 1};
  return {!enumerate_tableaux(profile, shape, budget, 1).tableaux.empty(), false};
}

int oracle_gonality(const TorsionProfile& profile, EnumerationBudget budget) {
  for (int k = 1;; ++k) {
    if (wrd_nonempty(profile, k, 1, budget).nonempty) return k;
  }
}


Certification& Certification::operator+=(const Certification& other) {
  checks += other.checks;
  rank_mismatches += other.rank_mismatches;
  emptiness_mismatches += other.emptiness_mismatches;
  dominance_violations += other.dominance_violations;
  tableaux_seen += other.tableaux_seen;
  return *this;
}

Certification certify(const DivisorModel& model, EnumerationBudget budget) {
  Certification out;
  const RankTrace trace = trace_rank_sequence(model);
  for (int c = 1; c <= trace.sequence.c_stop; ++c) {
    ++out.checks;
    if (max_rank(model, c, budget) != trace.sequence.at(c)) ++out.rank_mismatches;
    for (const RankAttempt& attempt : trace.attempts[static_cast<std::size_t>(c)]) {
      if (!attempt.fill) continue;
      ++out.checks;
      const Tableau& greedy = attempt.fill->tableau;
      if (!attempt.fill->ok()) {
        if (!enumerate_tableaux(model, attempt.shape, c, budget, 1).tableaux.empty()) {
          ++out.emptiness_mismatches;
        }
        continue;
      }
      const Enumeration all = enumerate_tableaux(model, attempt.shape, c, budget);
      out.tableaux_seen += all.tableaux.size();
      if (all.tableaux.empty()) ++out.emptiness_mismatches;
      for (const Tableau& t : all.tableaux) {
        for (std::size_t i = 0; i < t.entries().size(); ++i) {
          if (t.entries()[i] < greedy.entries()[i]) {
            ++out.dominance_violations;
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace scrollar
