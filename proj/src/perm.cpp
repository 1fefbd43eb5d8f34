#include "klq/perm.hpp"

#include <algorithm>
#include <numeric>

namespace klq {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

char value_digit(int v) {
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10);
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const int v = images_[i];
    if (v < 0 || v >= n)
      throw parse_error("value " + std::to_string(v) + " out of range for degree " +
                            std::to_string(n),
                        i);
    if (seen[static_cast<std::size_t>(v)])
      throw parse_error("duplicate value " + std::to_string(v), i);
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> vals;
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw parse_error("missing closing bracket", text.size());
    std::size_t i = 1;
    while (i < text.size() - 1) {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < text.size() - 1 && text[j] != ',' && text[j] != ' ') ++j;
      int v = 0;
      for (std::size_t k = i; k < j; ++k) {
        if (text[k] < '0' || text[k] > '9')
          throw parse_error(std::string("unrecognized character '") + text[k] + "'", k);
        v = v * 10 + (text[k] - '0');
        if (v > 1'000'000) throw parse_error("value too large", i);
      }
      vals.push_back(v);
      i = j;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const int v = digit_value(text[i]);
      if (v < 0)
        throw parse_error(std::string("unrecognized character '") + text[i] + "'", i);
      vals.push_back(v);
    }
  }
  return Permutation(std::move(vals));
}

std::string Permutation::str() const {
  const int n = degree();
  if (n == 0) return "[]";
  if (n <= 36) {
    std::string s;
    s.reserve(images_.size());
    for (int v : images_) s.push_back(value_digit(v));
    return s;
  }
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  s += ']';
  return s;
}

int Permutation::position_of(int value) const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == value) return static_cast<int>(i);
  throw std::invalid_argument("value not present: " + std::to_string(value));
}

int Permutation::length() const {
  int inv = 0;
  const int n = degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (degree() != v.degree()) throw degree_mismatch(degree(), v.degree());
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(v.images_[i])];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::right_mult(int i) const {
  if (i < 0 || i + 1 >= degree())
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " out of range for degree " + std::to_string(degree()));
  std::vector<int> out = images_;
  std::swap(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i) + 1]);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::left_mult(int i) const {
  if (i < 0 || i + 1 >= degree())
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " out of range for degree " + std::to_string(degree()));
  std::vector<int> out = images_;
  for (auto& v : out) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

std::uint64_t Permutation::right_descent_mask() const {
  const int n = degree();
  if (n > 64) throw std::length_error("descent masks need degree <= 64");
  std::uint64_t m = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(i) + 1])
      m |= std::uint64_t{1} << i;
  return m;
}

std::uint64_t Permutation::left_descent_mask() const {
  const int n = degree();
  if (n > 64) throw std::length_error("descent masks need degree <= 64");
  std::vector<int> pos(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    pos[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  std::uint64_t m = 0;
  for (int i = 0; i + 1 < n; ++i)
    if (pos[static_cast<std::size_t>(i) + 1] < pos[static_cast<std::size_t>(i)])
      m |= std::uint64_t{1} << i;
  return m;
}

namespace {
std::vector<int> mask_to_set(std::uint64_t m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i);
  return out;
}
}  // namespace

std::vector<int> Permutation::right_descents() const {
  return mask_to_set(right_descent_mask());
}

std::vector<int> Permutation::left_descents() const {
  return mask_to_set(left_descent_mask());
}

Permutation flatten(std::span<const int> values) {
  std::vector<int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1])
      throw std::invalid_argument("flatten: duplicate value " + std::to_string(sorted[i]));
  std::vector<int> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                              sorted.begin());
  return Permutation(std::move(out));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace klq
