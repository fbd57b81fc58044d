#include "scrollar/profile.hpp"

#include <sstream>

#include "scrollar/errors.hpp"

namespace scrollar {

bool congruent(long lhs, long rhs, int modulus) {
  if (modulus == 0) return lhs == rhs;
  long diff = (lhs - rhs) % modulus;
  return diff == 0;
}

bool divides(int divisor, int value) {
  if (divisor == 0) return value == 0;
  return value % divisor == 0;
}

TorsionProfile::TorsionProfile(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InputError("torsion profile must have genus >= 1");
  for (int m : orders_) {
    if (m < 0) throw InputError("torsion orders must be non-negative");
  }
}

int TorsionProfile::order(int i) const {
  if (i < 1 || i > genus()) {
    throw InputError("loop index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(genus()));
  }
  return orders_[static_cast<std::size_t>(i - 1)];
}

std::string TorsionProfile::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << ", ";
    os << orders_[i];
  }
  os << ']';
  return os.str();
}

bool is_hyperelliptic(const TorsionProfile& profile) {
  const int g = profile.genus();
  for (int i = 2; i < g; ++i) {
    if (!divides(profile.order(i), 2)) return false;
  }
  return true;
}

std::vector<int> trigonal_pattern(int genus, int a, int b) {
  std::vector<int> pattern(static_cast<std::size_t>(genus), 0);
  for (int i = 2; i < genus; ++i) {
    int value = 2;
    if (i == a || i == b) {
      value = 0;
    } else if (a < i && i < b) {
      value = 3;
    }
    pattern[static_cast<std::size_t>(i - 1)] = value;
  }
  return pattern;
}

std::optional<std::pair<int, int>> classify_trigonal(const TorsionProfile& profile) {
  if (is_hyperelliptic(profile)) return std::nullopt;
  const int g = profile.genus();
  for (int a = 1; a <= g; ++a) {
    for (int b = a; b <= g; ++b) {
      const auto pattern = trigonal_pattern(g, a, b);
      bool fits = true;
      for (int i = 1; i <= g && fits; ++i) {
        fits = divides(profile.order(i), pattern[static_cast<std::size_t>(i - 1)]);
      }
      if (fits) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool two_column_tableau_exists(const TorsionProfile& profile, int rows) {
  if (rows <= 0) return true;
  const int side = rows + 1;
  // reachable[n0 * side + n1]: n0 boxes of column 0 and n1 boxes of column 1
  // are filled with the symbols placed so far. Column 1 never overtakes column 0.
  std::vector<char> reachable(static_cast<std::size_t>(side * side), 0);
  reachable[0] = 1;
  for (int s = 1; s <= profile.genus(); ++s) {
    std::vector<char> next = reachable;
    for (int n0 = 0; n0 <= rows; ++n0) {
      for (int n1 = 0; n1 <= n0; ++n1) {
        if (!reachable[static_cast<std::size_t>(n0 * side + n1)]) continue;
        auto mark = [&](int a, int b) { next[static_cast<std::size_t>(a * side + b)] = 1; };
        if (n0 < rows) mark(n0 + 1, n1);
        if (n1 < rows && n0 > n1) {
          mark(n0, n1 + 1);
          // s in both columns: boxes (0, n0) and (1, n1) have diagonals n0 and n1 - 1.
          if (n0 < rows && congruent(n0, n1 - 1, profile.order(s))) mark(n0 + 1, n1 + 1);
        }
      }
    }
    reachable = std::move(next);
  }
  return reachable[static_cast<std::size_t>(rows * side + rows)] != 0;
}

int gonality(const TorsionProfile& profile) {
  const int g = profile.genus();
  if (g == 1) return 1;
  for (int k = 2; k < g; ++k) {
    if (two_column_tableau_exists(profile, g - k + 1)) return k;
  }
  return g;
}

std::vector<IndexRange> i_blocks(const TorsionProfile& profile, int i) {
  if (i < 2) throw InputError("i-blocks are defined for i >= 2");
  std::vector<IndexRange> blocks;
  const int g = profile.genus();
  int start = 0;
  for (int j = 1; j <= g + 1; ++j) {
    const bool inside = j <= g && divides(profile.order(j), i);
    if (inside && start == 0) start = j;
    if (!inside && start != 0) {
      blocks.push_back({start, j - 1});
      start = 0;
    }
  }
  return blocks;
}

}  // namespace scrollar
