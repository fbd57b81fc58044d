#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scrollar/model.hpp"
#include "scrollar/profile.hpp"
#include "scrollar/tableau.hpp"

namespace scrollar {

struct EnumerationBudget {
  enum class OnExhaustion { ReportPartial, Error };

  std::uint64_t max_nodes = 10'000'000;
  OnExhaustion on_exhaustion = OnExhaustion::Error;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Enumeration {
  std::vector<Tableau> tableaux;
  std::uint64_t nodes = 0;
  bool exhausted = false;  ///< budget ran out; `tableaux` is a prefix
};

/// All tableaux on `shape` for cD: strict increase, and every box (x, y)
/// holding s satisfies y - x = xi_s(cD) mod m_s. Results come in the order of
/// a depth-first search over diagonal_order(shape) with increasing symbols.
/// `limit` stops after that many tableaux.
Enumeration enumerate_tableaux(const DivisorModel& model, RectShape shape, int c,
                               EnumerationBudget budget = {},
                               std::optional<std::size_t> limit = std::nullopt);

/// Profile mode: strict increase, and repeated symbols sit on diagonals
/// congruent modulo their torsion order. No divisor data.
Enumeration enumerate_tableaux(const TorsionProfile& profile, RectShape shape,
                               EnumerationBudget budget = {},
                               std::optional<std::size_t> limit = std::nullopt);

/// Largest r with rk(cD) >= r by exhaustive search over rectangles.
int max_rank(const DivisorModel& model, int c, EnumerationBudget budget = {});

/// g minus the number of distinct symbols in t.
int torus_dimension(const Tableau& t, int genus);

struct WrdAnswer {
  bool nonempty = false;
  bool by_riemann_roch = false;  ///< r <= d - g, no tableau needed
};

/// Is W^r_d nonempty on the chain with this profile?
WrdAnswer wrd_nonempty(const TorsionProfile& profile, int degree, int rank,
                       EnumerationBudget budget = {});

/// Smallest k with W^1_k nonempty, via profile-mode enumeration.
int oracle_gonality(const TorsionProfile& profile, EnumerationBudget budget = {});


/// Engine-versus-oracle comparison for one divisor model, over every c up to
/// the nonspecial threshold and every shape the engine attempted.
struct Certification {
  int checks = 0;
  int rank_mismatches = 0;       ///< greedy rank != exhaustive max_rank
  int emptiness_mismatches = 0;  ///< greedy failed but a tableau exists (or vice versa)
  int dominance_violations = 0;  ///< some enumerated tableau is below greedy somewhere
  std::uint64_t tableaux_seen = 0;

  bool ok() const {
    return rank_mismatches == 0 && emptiness_mismatches == 0 && dominance_violations == 0;
  }
  Certification& operator+=(const Certification& other);
};

Certification certify(const DivisorModel& model, EnumerationBudget budget = {});

}  // namespace scrollar
