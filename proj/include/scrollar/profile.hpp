#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scrollar {

/// Residue comparison where modulus 0 means exact equality (infinite torsion).
bool congruent(long lhs, long rhs, int modulus);

/// Does `divisor` divide `value`? Every integer divides 0; 0 divides only 0.
bool divides(int divisor, int value);

/// Torsion orders (m_1, ..., m_g) of a chain of loops. Index is 1-based;
/// m_i = 0 encodes an irrational edge-length ratio.
class TorsionProfile {
 public:
  TorsionProfile() = default;
  explicit TorsionProfile(std::vector<int> orders);

  int genus() const { return static_cast<int>(orders_.size()); }
  int order(int i) const;
  const std::vector<int>& orders() const { return orders_; }

  std::string to_string() const;

  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;

 private:
  std::vector<int> orders_;
};

/// True iff the profile divides (0, 2, ..., 2, 0) termwise.
bool is_hyperelliptic(const TorsionProfile& profile);

/// The termwise pattern (0, 2..2, 0, 3..3, 0, 2..2, 0) with interior zeros at
/// positions a and b (a <= b).
std::vector<int> trigonal_pattern(int genus, int a, int b);

/// Lexicographically smallest (a, b) whose trigonal pattern the profile
/// divides, provided the profile is not hyperelliptic.
std::optional<std::pair<int, int>> classify_trigonal(const TorsionProfile& profile);

/// Can the profile carry a displacement tableau on a rows x 2 rectangle?
/// Dynamic program over symbols with state (boxes used in column 0, column 1).
bool two_column_tableau_exists(const TorsionProfile& profile, int rows);

/// Smallest k with a profile-mode tableau on the (g - k + 1) x 2 rectangle.
int gonality(const TorsionProfile& profile);

/// Inclusive index range [first, last].
struct IndexRange {
  int first;
  int last;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Maximal runs of loops j with m_j | i, flanked by loops (or the virtual
/// endpoints 0 and g + 1) whose order does not divide i.
std::vector<IndexRange> i_blocks(const TorsionProfile& profile, int i);

}  // namespace scrollar
