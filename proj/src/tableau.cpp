#include "scrollar/tableau.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "scrollar/errors.hpp"

namespace scrollar {

std::vector<Box> diagonal_order(RectShape shape) {
  std::vector<Box> order;
  if (shape.empty()) return order;
  order.reserve(static_cast<std::size_t>(shape.size()));
  for (int d = 0; d <= shape.rows + shape.cols - 2; ++d) {
    const int x_lo = std::max(0, d - (shape.rows - 1));
    const int x_hi = std::min(d, shape.cols - 1);
    for (int x = x_lo; x <= x_hi; ++x) order.push_back({x, d - x});
  }
  return order;
}

Tableau::Tableau(RectShape shape)
    : shape_(shape), entries_(static_cast<std::size_t>(shape.size()), 0) {
  if (shape.rows < 0 || shape.cols < 0) throw InputError("negative tableau dimensions");
  if (shape.empty()) shape_ = RectShape{0, 0};
}

Tableau::Tableau(RectShape shape, std::vector<int> row_major) : Tableau(shape) {
  if (row_major.size() != entries_.size()) {
    throw InputError("entry count does not match tableau shape");
  }
  entries_ = std::move(row_major);
}

Tableau Tableau::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) return Tableau{};
  const int cols = static_cast<int>(rows.front().size());
  std::vector<int> flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw InputError("ragged tableau rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Tableau(RectShape{static_cast<int>(rows.size()), cols}, std::move(flat));
}

std::size_t Tableau::index(int x, int y) const {
  return static_cast<std::size_t>(y * shape_.cols + x);
}

std::vector<int> Tableau::column(int x) const {
  std::vector<int> out;
  for (int y = 0; y < rows(); ++y) out.push_back(at(x, y));
  return out;
}

bool Tableau::complete() const {
  return std::none_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

Tableau Tableau::restrict_to(RectShape shape) const {
  if (shape.rows > rows() || shape.cols > cols()) {
    throw InputError("restriction shape exceeds tableau");
  }
  Tableau out(shape);
  for (int y = 0; y < out.rows(); ++y)
    for (int x = 0; x < out.cols(); ++x) out.set(x, y, at(x, y));
  return out;
}

Tableau build_Lambda(int genus) {
  if (genus < 2) throw InputError("Lambda needs genus >= 2");
  Tableau t(RectShape{genus - 1, 2});
  for (int y = 0; y < genus - 1; ++y) {
    t.set(0, y, y + 1);
    t.set(1, y, y + 2);
  }
  return t;
}

bool strictly_increasing(const Tableau& t) {
  for (int y = 0; y < t.rows(); ++y) {
    for (int x = 0; x < t.cols(); ++x) {
      if (x > 0 && t.at(x - 1, y) >= t.at(x, y)) return false;
      if (y > 0 && t.at(x, y - 1) >= t.at(x, y)) return false;
    }
  }
  return true;
}

bool validate(const Tableau& t, const TorsionProfile& profile) {
  if (!t.complete() || !strictly_increasing(t)) return false;
  std::map<int, int> first_diagonal;
  for (int y = 0; y < t.rows(); ++y) {
    for (int x = 0; x < t.cols(); ++x) {
      const int s = t.at(x, y);
      if (s < 1 || s > profile.genus()) return false;
      auto [it, inserted] = first_diagonal.emplace(s, y - x);
      if (!inserted && !congruent(y - x, it->second, profile.order(s))) return false;
    }
  }
  return true;
}

std::string render_text(const Tableau& t) {
  std::ostringstream os;
  for (int y = 0; y < t.rows(); ++y) {
    for (int x = 0; x < t.cols(); ++x) {
      const int e = t.at(x, y);
      if (e == 0) {
        os << "   ";
      } else {
        os << std::setw(3) << e;
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace scrollar
