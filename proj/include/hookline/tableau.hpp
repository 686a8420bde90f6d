#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hookline/index_set.hpp"
#include "hookline/permutation.hpp"

namespace hookline {

/// Standard Young tableau in English notation: rows[0] is the top row.
class StandardTableau {
 public:
  StandardTableau() = default;

  /// Throws InputError unless rows are strictly increasing along rows and
  /// columns, row lengths weakly decrease, and the entries are exactly 1..n.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;
  int row_count() const { return static_cast<int>(rows_.size()); }
  int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  std::vector<int> shape() const;

  /// 0-based row holding value v, or -1.
  int row_of(int v) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  struct Trusted {};
  StandardTableau(std::vector<std::vector<int>> rows, Trusted) : rows_(std::move(rows)) {}
  friend StandardTableau tableau_from_trusted(std::vector<std::vector<int>> rows);

  std::vector<std::vector<int>> rows_;
};

StandardTableau tableau_from_trusted(std::vector<std::vector<int>> rows);

/// Rows separated by ';', entries by whitespace: "1 2 5 6 8 11 12; 3 4 7 9 10".
StandardTableau parse_tableau(std::string_view text);
std::string to_string(const StandardTableau& t);

struct TableauPair {
  StandardTableau insertion;  // P
  StandardTableau recording;  // Q
};

/// Robinson-Schensted by row insertion: each value bumps the smallest entry
/// of the row strictly larger than itself.
TableauPair rs_correspondence(const Permutation& p);

/// Reverse bumping. Throws InputError on a shape mismatch.
Permutation rs_inverse(const StandardTableau& insertion, const StandardTableau& recording);

StandardTableau transpose(const StandardTableau& t);

/// {i : i+1 sits in a strictly lower row than i}.
IndexSet tableau_descent_set(const StandardTableau& t);

/// The involution whose RS tableau is the transpose of the tableau of p.
/// Asc(p) = Des(result). Throws InputError if p is not an involution.
Permutation involution_transpose(const Permutation& p);

}  // namespace hookline
