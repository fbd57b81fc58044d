#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollar/tableau.hpp"

namespace scrollar {

/// A rank-1 tableau of degree k described by the k - 2 symbols removed from
/// each column of Lambda(g).
struct DeletionSpec {
  int genus = 0;
  int degree = 2;
  std::vector<int> col1_deleted;  ///< a_1 < ... < a_{k-2}, drawn from 2..g
  std::vector<int> col0_deleted;  ///< b_1 < ... < b_{k-2}, drawn from 1..g-1

  friend bool operator==(const DeletionSpec&, const DeletionSpec&) = default;
};

/// Description of the first violated invariant, or nullopt if the spec is valid.
std::optional<std::string> spec_violation(const DeletionSpec& spec);

/// Throws InputError naming the violated invariant.
void require_valid(const DeletionSpec& spec);

/// The trigonal spec lambda_{a,b}: a removed from column 1, b from column 0.
DeletionSpec trigonal_spec(int genus, int a, int b);

/// Column 1 loses 2..k-1 and column 0 loses g-k+2..g-1.
DeletionSpec generic_spec(int genus, int degree);

/// Every valid spec of the given genus and degree, in lexicographic order of
/// (col1_deleted, col0_deleted).
std::vector<DeletionSpec> all_specs(int genus, int degree);

/// Lambda(g) with the listed boxes removed and the columns slid together.
Tableau build_lambda_D(const DeletionSpec& spec);

/// Word over '(' and ')' with the prefix property.
class DyckWord {
 public:
  DyckWord() = default;
  explicit DyckWord(std::string letters);

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  static bool is_dyck(const std::string& letters);

  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  std::string letters_;
};

/// Deleted boxes read top to bottom (equal rows: column 1 first). A column-1
/// deletion writes '(' and a column-0 deletion writes ')'.
DyckWord dyck_word_of(const DeletionSpec& spec);

/// All Dyck words of length 2(k - 2), lexicographic with '(' < ')'.
std::vector<DyckWord> enumerate_types(int degree);

std::uint64_t catalan_number(int n);

/// A spec of combinatorial type `word`. Without a genus, deletions sit on
/// even rows of Lambda(max(2, 4k - 8)); with one, the first spec of that genus
/// (in all_specs order) having this word, if any.
std::optional<DeletionSpec> representative_spec(const DyckWord& word,
                                                std::optional<int> genus = std::nullopt);

}  // namespace scrollar
