#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klq {

/// Error thrown by text parsers; carries the offending position.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class degree_mismatch : public std::invalid_argument {
 public:
  degree_mismatch(int a, int b)
      : std::invalid_argument("degree mismatch: " + std::to_string(a) +
                              " vs " + std::to_string(b)) {}
};

/// A permutation of {0..n-1} in one-line notation [w(0),...,w(n-1)].
/// Values are immutable; every operation returns a new permutation.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// Accepts either a contiguous extended-digit string ("c810d942fa53b6e7",
  /// digits 0-9a-z meaning 0..35) or a bracketed decimal list ("[4,3,2]").
  static Permutation parse(std::string_view text);

  /// Canonical text: extended digits for n <= 36, bracketed list otherwise.
  std::string str() const;

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// Position of a value in the word, i.e. inverse image.
  int position_of(int value) const;

  int length() const;  // inversion count

  Permutation inverse() const;

  /// Composition: (u*v)(i) = u(v(i)).
  Permutation operator*(const Permutation& v) const;

  /// w * s_i : swaps positions i, i+1 of the word.
  Permutation right_mult(int i) const;
  /// s_i * w : swaps values i, i+1.
  Permutation left_mult(int i) const;

  /// Bit i set iff w(i) > w(i+1).  Requires degree <= 64.
  std::uint64_t right_descent_mask() const;
  /// Bit i set iff value i+1 precedes value i.  Requires degree <= 64.
  std::uint64_t left_descent_mask() const;
  std::vector<int> right_descents() const;
  std::vector<int> left_descents() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  /// Lexicographic order on the one-line word.
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

/// Relabels distinct integers to {0..k-1} preserving relative order
/// ([7,6,1,9,5,3] -> [4,3,0,5,2,1]).
Permutation flatten(std::span<const int> values);

/// All n! permutations of degree n in lexicographic order.  Intended for
/// exhaustive small-n checks; n <= 9 or so.
std::vector<Permutation> all_permutations(int n);

}  // namespace klq
