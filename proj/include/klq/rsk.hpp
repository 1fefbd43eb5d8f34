#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "klq/perm.hpp"

namespace klq {

/// A partition written with weakly decreasing positive parts.
struct Shape {
  std::vector<int> parts;

  int size() const;
  bool operator==(const Shape& o) const { return parts == o.parts; }
  bool operator!=(const Shape& o) const { return parts != o.parts; }
  bool operator<(const Shape& o) const { return parts < o.parts; }
  std::string str() const;
};

/// Standard Young tableau in French orientation: rows_[0] is the bottom row,
/// rows increase strictly left to right, columns strictly bottom to top, and
/// the entries are exactly {0..n-1}.
class Tableau {
 public:
  Tableau() = default;
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  int size() const;
  Shape shape() const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int height() const { return static_cast<int>(rows_.size()); }

  /// (row, col) of a value, row counted from the bottom.
  std::pair<int, int> position_of(int value) const;

  /// Rows read left to right starting with the top row.
  Permutation row_word() const;
  /// Columns read top to bottom starting with the leftmost column.
  Permutation column_word() const;

  /// D(T): i such that i+1 sits strictly north and weakly west of i.
  std::uint64_t descent_mask() const;
  std::vector<int> descents() const;

  /// Text form, rows bottom to top, e.g. "013/25/46".
  std::string str() const;
  static Tableau parse(std::string_view text);

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  bool operator!=(const Tableau& o) const { return rows_ != o.rows_; }
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Row-insertion Robinson-Schensted correspondence: inserts w(0),w(1),... into
/// the bottom row; Q records the order boxes appear.
std::pair<Tableau, Tableau> rsk(const Permutation& w);

/// Inverse of rsk; P and Q must be standard of equal shape.
Permutation inverse_rsk(const Tableau& P, const Tableau& Q);

/// The tableau whose column word (resp. row word) is w, if any.
std::optional<Tableau> tableau_from_column_word(const Permutation& w);
std::optional<Tableau> tableau_from_row_word(const Permutation& w);

/// Domain of the elementary Knuth operator L_k: the values k, k+1, k+2 appear
/// neither in increasing nor decreasing order of position.
bool knuth_applicable(int k, const Permutation& w);
/// L_k: interchange the values k and k+2.  Involution on the domain.
Permutation knuth_apply(int k, const Permutation& w);

/// The cell-preserving companion move on the same domain: the one of
/// s_k w, s_{k+1} w that stays in the domain.  Preserves the recording
/// tableau, hence the left cell; an involution.
bool star_applicable(int k, const Permutation& w);
Permutation star_apply(int k, const Permutation& w);
/// Mirror move acting on the right (positions); preserves the insertion
/// tableau.
bool right_star_applicable(int k, const Permutation& w);
Permutation right_star_apply(int k, const Permutation& w);

std::vector<Shape> partitions_of(int n);

/// Standard tableaux of the given shape in lexicographic order of the
/// box-filling row sequence.
void for_each_standard_tableau(const Shape& shape,
                               const std::function<void(const Tableau&)>& yield);
std::vector<Tableau> standard_tableaux(const Shape& shape);

/// Hook-length count; no enumeration.
std::uint64_t count_standard_tableaux(const Shape& shape);
std::uint64_t count_standard_tableaux(int n);

/// All w with recording tableau Q, ordered by the filling order of their
/// insertion tableaux.
std::vector<Permutation> left_cell(const Tableau& Q);

}  // namespace klq
