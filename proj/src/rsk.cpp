#include "klq/rsk.hpp"

#include <algorithm>
#include <numeric>

namespace klq {

int Shape::size() const {
  int n = 0;
  for (int p : parts) n += p;
  return n;
}

std::string Shape::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  s += ')';
  return s;
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  Tableau t;
  t.rows_ = std::move(rows);
  int n = 0;
  for (const auto& r : t.rows_) n += static_cast<int>(r.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t r = 0; r < t.rows_.size(); ++r) {
    const auto& row = t.rows_[r];
    if (row.empty()) throw std::invalid_argument("tableau has an empty row");
    if (r > 0 && row.size() > t.rows_[r - 1].size())
      throw std::invalid_argument("tableau row lengths must weakly decrease upward");
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau entries must be exactly 0..n-1");
      seen[static_cast<std::size_t>(v)] = 1;
      if (c > 0 && row[c - 1] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (r > 0 && t.rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must strictly increase upward");
    }
  }
  return t;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

Shape Tableau::shape() const {
  Shape s;
  for (const auto& row : rows_) s.parts.push_back(static_cast<int>(row.size()));
  return s;
}

std::pair<int, int> Tableau::position_of(int value) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == value) return {static_cast<int>(r), static_cast<int>(c)};
  throw std::invalid_argument("value not in tableau: " + std::to_string(value));
}

Permutation Tableau::row_word() const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(size()));
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    word.insert(word.end(), it->begin(), it->end());
  return Permutation(std::move(word));
}

Permutation Tableau::column_word() const {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(size()));
  const std::size_t width = rows_.empty() ? 0 : rows_[0].size();
  for (std::size_t c = 0; c < width; ++c)
    for (std::size_t r = rows_.size(); r-- > 0;)
      if (c < rows_[r].size()) word.push_back(rows_[r][c]);
  return Permutation(std::move(word));
}

std::uint64_t Tableau::descent_mask() const {
  const int n = size();
  if (n > 64) throw std::length_error("descent masks need size <= 64");
  std::uint64_t m = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const auto [r0, c0] = position_of(i);
    const auto [r1, c1] = position_of(i + 1);
    if (r1 > r0 && c1 <= c0) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::vector<int> Tableau::descents() const {
  std::vector<int> out;
  const std::uint64_t m = descent_mask();
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}

namespace {
char value_digit(int v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}
}  // namespace

std::string Tableau::str() const {
  std::string s;
  const bool digits = size() <= 36;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (digits)
        s += value_digit(rows_[r][c]);
      else {
        if (c) s += ',';
        s += std::to_string(rows_[r][c]);
      }
    }
  }
  return s;
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  const bool has_comma = text.find(',') != std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '/') {
      rows.emplace_back();
    } else if (has_comma) {
      if (ch == ',') continue;
      std::size_t j = i;
      int v = 0;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9')
        v = v * 10 + (text[j++] - '0');
      if (j == i) throw parse_error(std::string("unrecognized character '") + ch + "'", i);
      rows.back().push_back(v);
      i = j - 1;
    } else {
      int v;
      if (ch >= '0' && ch <= '9')
        v = ch - '0';
      else if (ch >= 'a' && ch <= 'z')
        v = 10 + (ch - 'a');
      else
        throw parse_error(std::string("unrecognized character '") + ch + "'", i);
      rows.back().push_back(v);
    }
  }
  return from_rows(std::move(rows));
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
  std::vector<std::vector<int>> p, q;
  for (int step = 0; step < w.degree(); ++step) {
    int carry = w(step);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p.size()) {
        p.emplace_back();
        q.emplace_back();
      }
      auto& row = p[r];
      auto it = std::upper_bound(row.begin(), row.end(), carry);
      if (it == row.end()) {
        row.push_back(carry);
        q[r].push_back(step);
        break;
      }
      std::swap(carry, *it);
    }
  }
  return {Tableau::from_rows(std::move(p)), Tableau::from_rows(std::move(q))};
}

Permutation inverse_rsk(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape())
    throw std::invalid_argument("inverse_rsk: shapes differ");
  const int n = P.size();
  std::vector<std::vector<int>> rows = P.rows();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int v = n - 1; v >= 0; --v) {
    const auto [r, c] = Q.position_of(v);
    if (c != static_cast<int>(rows[static_cast<std::size_t>(r)].size()) - 1)
      throw std::logic_error("inverse_rsk: recording tableau is not standard");
    int carry = rows[static_cast<std::size_t>(r)].back();
    rows[static_cast<std::size_t>(r)].pop_back();
    for (int rr = r - 1; rr >= 0; --rr) {
      auto& row = rows[static_cast<std::size_t>(rr)];
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      // the largest entry strictly below carry absorbs it
      --it;
      std::swap(carry, *it);
    }
    word[static_cast<std::size_t>(v)] = carry;
  }
  return Permutation(std::move(word));
}

namespace {

// Shared assembly for the two tableau-word readers: given candidate columns
// (top-to-bottom reading order), rebuild rows and validate.
std::optional<Tableau> from_columns(std::vector<std::vector<int>> cols) {
  for (std::size_t c = 0; c + 1 < cols.size(); ++c)
    if (cols[c + 1].size() > cols[c].size()) return std::nullopt;
  std::vector<std::vector<int>> rows(cols.empty() ? 0 : cols[0].size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    // cols[c] is read top-to-bottom; row r from the bottom takes entry
    // cols[c][h-1-r] where h is the column height.
    const std::size_t h = cols[c].size();
    for (std::size_t r = 0; r < h; ++r) rows[r].push_back(cols[c][h - 1 - r]);
  }
  try {
    return Tableau::from_rows(std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<Tableau> tableau_from_column_word(const Permutation& w) {
  // In a column word the maximal strictly decreasing runs are exactly the
  // columns read top to bottom.
  std::vector<std::vector<int>> cols;
  for (int i = 0; i < w.degree(); ++i) {
    if (cols.empty() || (!cols.back().empty() && cols.back().back() < w(i)))
      cols.emplace_back();
    cols.back().push_back(w(i));
  }
  auto t = from_columns(std::move(cols));
  if (t && t->column_word() != w) return std::nullopt;
  return t;
}

std::optional<Tableau> tableau_from_row_word(const Permutation& w) {
  // Maximal strictly increasing runs are the rows, top row first.
  std::vector<std::vector<int>> runs;
  for (int i = 0; i < w.degree(); ++i) {
    if (runs.empty() || runs.back().back() > w(i)) runs.emplace_back();
    runs.back().push_back(w(i));
  }
  std::vector<std::vector<int>> rows(runs.rbegin(), runs.rend());
  for (std::size_t r = 0; r + 1 < rows.size(); ++r)
    if (rows[r].size() < rows[r + 1].size()) return std::nullopt;
  std::optional<Tableau> t;
  try {
    t = Tableau::from_rows(std::move(rows));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (t->row_word() != w) return std::nullopt;
  return t;
}

bool knuth_applicable(int k, const Permutation& w) {
  if (k < 0 || k + 2 >= w.degree()) return false;
  const int a = w.position_of(k), b = w.position_of(k + 1), c = w.position_of(k + 2);
  if (a < b && b < c) return false;
  if (a > b && b > c) return false;
  return true;
}

Permutation knuth_apply(int k, const Permutation& w) {
  if (!knuth_applicable(k, w))
    throw std::invalid_argument("L_" + std::to_string(k) + " is not applicable to " + w.str());
  std::vector<int> word = w.images();
  word[static_cast<std::size_t>(w.position_of(k))] = k + 2;
  word[static_cast<std::size_t>(w.position_of(k + 2))] = k;
  return Permutation(std::move(word));
}

bool star_applicable(int k, const Permutation& w) { return knuth_applicable(k, w); }

Permutation star_apply(int k, const Permutation& w) {
  if (!knuth_applicable(k, w))
    throw std::invalid_argument("star move " + std::to_string(k) +
                                " is not applicable to " + w.str());
  Permutation a = w.left_mult(k);
  if (knuth_applicable(k, a)) return a;
  Permutation b = w.left_mult(k + 1);
  if (!knuth_applicable(k, b))
    throw std::logic_error("star move lost its domain at " + w.str());
  return b;
}

bool right_star_applicable(int k, const Permutation& w) {
  if (k < 0 || k + 2 >= w.degree()) return false;
  const bool d1 = w(k) > w(k + 1), d2 = w(k + 1) > w(k + 2);
  return d1 != d2;
}

Permutation right_star_apply(int k, const Permutation& w) {
  if (!right_star_applicable(k, w))
    throw std::invalid_argument("right star move " + std::to_string(k) +
                                " is not applicable to " + w.str());
  Permutation a = w.right_mult(k);
  if (right_star_applicable(k, a)) return a;
  Permutation b = w.right_mult(k + 1);
  if (!right_star_applicable(k, b))
    throw std::logic_error("right star move lost its domain at " + w.str());
  return b;
}

std::vector<Shape> partitions_of(int n) {
  std::vector<Shape> out;
  std::vector<int> parts;
  const std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(Shape{parts});
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

void for_each_standard_tableau(const Shape& shape,
                               const std::function<void(const Tableau&)>& yield) {
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.parts.size());
  std::vector<int> len(shape.parts.size(), 0);
  const std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      std::vector<std::vector<int>> nonempty;
      for (auto& r : rows)
        if (!r.empty()) nonempty.push_back(r);
      yield(Tableau::from_rows(std::move(nonempty)));
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (len[r] >= shape.parts[r]) continue;
      if (r > 0 && len[r] >= len[r - 1]) continue;
      rows[r].push_back(v);
      ++len[r];
      rec(v + 1);
      --len[r];
      rows[r].pop_back();
    }
  };
  rec(0);
}

std::vector<Tableau> standard_tableaux(const Shape& shape) {
  std::vector<Tableau> out;
  for_each_standard_tableau(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

namespace {
std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}
}  // namespace

std::uint64_t count_standard_tableaux(const Shape& shape) {
  const int n = shape.size();
  if (n > 20) throw std::overflow_error("hook-length count limited to n <= 20");
  std::uint64_t hooks = 1;
  const auto& parts = shape.parts;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;  // boxes in the same column in later (shorter) rows
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      hooks *= static_cast<std::uint64_t>(parts[r] - c + below);
    }
  }
  return factorial(n) / hooks;
}

std::uint64_t count_standard_tableaux(int n) {
  std::uint64_t total = 0;
  for (const Shape& s : partitions_of(n)) total += count_standard_tableaux(s);
  return total;
}

std::vector<Permutation> left_cell(const Tableau& Q) {
  std::vector<Permutation> out;
  for_each_standard_tableau(Q.shape(),
                            [&](const Tableau& p) { out.push_back(inverse_rsk(p, Q)); });
  return out;
}

}  // namespace klq
