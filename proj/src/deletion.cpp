#include "scrollar/deletion.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "scrollar/errors.hpp"

namespace scrollar {

namespace {

bool strictly_sorted(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

// Visits every strictly increasing choice of `count` values from [lo, hi].
void for_each_subset(int lo, int hi, int count,
                     const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(chosen.size()) == count) {
      visit(chosen);
      return;
    }
    const int remaining = count - static_cast<int>(chosen.size());
    for (int v = next; v <= hi - remaining + 1; ++v) {
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(lo);
}

}  // namespace

std::optional<std::string> spec_violation(const DeletionSpec& spec) {
  const int g = spec.genus;
  const int k = spec.degree;
  if (k < 2) return "degree must be at least 2";
  if (g < k) return "genus must be at least the degree";
  const auto expected = static_cast<std::size_t>(k - 2);
  if (spec.col1_deleted.size() != expected || spec.col0_deleted.size() != expected) {
    return "each column must lose exactly k - 2 = " + std::to_string(k - 2) + " symbols";
  }
  if (!strictly_sorted(spec.col1_deleted) || !strictly_sorted(spec.col0_deleted)) {
    return "deletion lists must be strictly increasing";
  }
  if (expected == 0) return std::nullopt;
  for (int a : spec.col1_deleted) {
    if (a < 2 || a > g) return "column-1 deletions must lie in 2..g";
  }
  for (int b : spec.col0_deleted) {
    if (b < 1 || b > g - 1) return "column-0 deletions must lie in 1..g-1";
  }
  if (spec.col0_deleted.front() == 1 || spec.col1_deleted.back() == g) {
    return "lambda_D must contain every symbol: 1 may not leave column 0 nor g column 1";
  }
  std::set<int> seen(spec.col1_deleted.begin(), spec.col1_deleted.end());
  for (int b : spec.col0_deleted) {
    if (!seen.insert(b).second) return "deleted symbols must be distinct";
  }
  for (std::size_t i = 0; i < expected; ++i) {
    if (spec.col0_deleted[i] < spec.col1_deleted[i] - 1) {
      return "interleaving violated: b_" + std::to_string(i + 1) + " < a_" +
             std::to_string(i + 1) + " - 1 (rows of lambda_D would not increase)";
    }
  }
  return std::nullopt;
}

void require_valid(const DeletionSpec& spec) {
  if (auto why = spec_violation(spec)) throw InputError(*why);
}

DeletionSpec trigonal_spec(int genus, int a, int b) {
  return DeletionSpec{genus, 3, {a}, {b}};
}

DeletionSpec generic_spec(int genus, int degree) {
  DeletionSpec spec{genus, degree, {}, {}};
  for (int s = 2; s <= degree - 1; ++s) spec.col1_deleted.push_back(s);
  for (int s = genus - degree + 2; s <= genus - 1; ++s) spec.col0_deleted.push_back(s);
  return spec;
}

std::vector<DeletionSpec> all_specs(int genus, int degree) {
  std::vector<DeletionSpec> out;
  if (degree < 2 || genus < degree) return out;
  const int count = degree - 2;
  for_each_subset(2, genus, count, [&](const std::vector<int>& col1) {
    for_each_subset(1, genus - 1, count, [&](const std::vector<int>& col0) {
      DeletionSpec spec{genus, degree, col1, col0};
      if (!spec_violation(spec)) out.push_back(std::move(spec));
    });
  });
  return out;
}

Tableau build_lambda_D(const DeletionSpec& spec) {
  require_valid(spec);
  const int g = spec.genus;
  auto keep = [](int lo, int hi, const std::vector<int>& removed) {
    std::vector<int> column;
    for (int s = lo; s <= hi; ++s) {
      if (!std::binary_search(removed.begin(), removed.end(), s)) column.push_back(s);
    }
    return column;
  };
  const auto col0 = keep(1, g - 1, spec.col0_deleted);
  const auto col1 = keep(2, g, spec.col1_deleted);
  Tableau t(RectShape{g - spec.degree + 1, 2});
  for (int y = 0; y < t.rows(); ++y) {
    t.set(0, y, col0[static_cast<std::size_t>(y)]);
    t.set(1, y, col1[static_cast<std::size_t>(y)]);
  }
  if (!strictly_increasing(t)) {
    throw ConsistencyError("lambda_D rows fail to increase for a spec that passed validation");
  }
  return t;
}

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
  if (!is_dyck(letters_)) throw InputError("not a Dyck word: " + letters_);
}

bool DyckWord::is_dyck(const std::string& letters) {
  int depth = 0;
  for (char ch : letters) {
    if (ch == '(') {
      ++depth;
    } else if (ch == ')') {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

DyckWord dyck_word_of(const DeletionSpec& spec) {
  require_valid(spec);
  // (row in Lambda, column tiebreak, letter); column 1 sorts first on ties.
  struct Deleted {
    int row;
    int tiebreak;
    char letter;
  };
  std::vector<Deleted> boxes;
  for (int a : spec.col1_deleted) boxes.push_back({a - 2, 0, '('});
  for (int b : spec.col0_deleted) boxes.push_back({b - 1, 1, ')'});
  std::sort(boxes.begin(), boxes.end(), [](const Deleted& l, const Deleted& r) {
    return std::tie(l.row, l.tiebreak) < std::tie(r.row, r.tiebreak);
  });
  std::string word;
  for (const auto& box : boxes) word.push_back(box.letter);
  return DyckWord(std::move(word));
}

std::vector<DyckWord> enumerate_types(int degree) {
  if (degree < 2) throw InputError("degree must be at least 2");
  const int half = degree - 2;
  std::vector<DyckWord> out;
  std::string word;
  std::function<void(int, int)> rec = [&](int opened, int closed) {
    if (closed == half) {
      out.emplace_back(word);
      return;
    }
    if (opened < half) {
      word.push_back('(');
      rec(opened + 1, closed);
      word.pop_back();
    }
    if (closed < opened) {
      word.push_back(')');
      rec(opened, closed + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::uint64_t catalan_number(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::optional<DeletionSpec> representative_spec(const DyckWord& word, std::optional<int> genus) {
  const int degree = static_cast<int>(word.size() / 2) + 2;
  if (genus) {
    for (auto& spec : all_specs(*genus, degree)) {
      if (dyck_word_of(spec) == word) return spec;
    }
    return std::nullopt;
  }
  // Letter t sits on row 2t: '(' removes symbol 2t + 2 from column 1 and ')'
  // removes 2t + 1 from column 0, so the symbols never collide.
  DeletionSpec spec{std::max(2, 4 * degree - 8), degree, {}, {}};
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int row = 2 * static_cast<int>(t);
    if (word.str()[t] == '(') {
      spec.col1_deleted.push_back(row + 2);
    } else {
      spec.col0_deleted.push_back(row + 1);
    }
  }
  require_valid(spec);
  return spec;
}

}  // namespace scrollar
