#pragma once

#include <string>
#include <vector>

#include "scrollar/profile.hpp"

namespace scrollar {

/// Rectangle of `rows` x `cols` boxes. Zero rows is the nonspecial regime.
struct RectShape {
  int rows = 0;
  int cols = 0;

  bool empty() const { return rows <= 0 || cols <= 0; }
  int size() const { return empty() ? 0 : rows * cols; }
  friend bool operator==(const RectShape&, const RectShape&) = default;
};

/// Box coordinates: x is the column, y the row, both 0-based from the top left.
struct Box {
  int x = 0;
  int y = 0;
  int diagonal_index() const { return y - x; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Boxes of `shape` ordered by anti-diagonal x + y, and by increasing x within
/// each anti-diagonal. Both the greedy engine and the oracle fill in this order.
std::vector<Box> diagonal_order(RectShape shape);

/// Rectangular filling by symbols 1..g. Entry 0 marks an unfilled box, which
/// only occurs in partial fills.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(RectShape shape);
  Tableau(RectShape shape, std::vector<int> row_major);

  /// Builds from explicit rows; all rows must share one length.
  static Tableau from_rows(const std::vector<std::vector<int>>& rows);

  RectShape shape() const { return shape_; }
  int rows() const { return shape_.rows; }
  int cols() const { return shape_.cols; }

  int at(int x, int y) const { return entries_[index(x, y)]; }
  int at(Box b) const { return at(b.x, b.y); }
  void set(int x, int y, int symbol) { entries_[index(x, y)] = symbol; }
  void set(Box b, int symbol) { set(b.x, b.y, symbol); }

  const std::vector<int>& entries() const { return entries_; }
  std::vector<int> column(int x) const;
  bool complete() const;

  /// The top-left sub-rectangle of the given shape.
  Tableau restrict_to(RectShape shape) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::size_t index(int x, int y) const;

  RectShape shape_;
  std::vector<int> entries_;
};

/// The unique (g - 1) x 2 tableau: column 0 holds 1..g-1, column 1 holds 2..g.
Tableau build_Lambda(int genus);

/// Entries strictly increase along every row and down every column.
bool strictly_increasing(const Tableau& t);

/// Full displacement-tableau check: strict increase, entries in 1..g, and
/// equal symbols on diagonals congruent modulo their torsion order.
bool validate(const Tableau& t, const TorsionProfile& profile);

/// Rows top to bottom, entries right-aligned in width-3 fields; unfilled
/// boxes print as blanks. Empty shape renders as an empty string.
std::string render_text(const Tableau& t);

}  // namespace scrollar
