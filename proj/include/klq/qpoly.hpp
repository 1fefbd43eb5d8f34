#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace klq {

/// Integer-coefficient polynomial in q.  Dense coefficient vector indexed by
/// exponent, trailing zeros trimmed.  All arithmetic is exact; coefficient
/// overflow of 64-bit range throws instead of wrapping.
class QPoly {
 public:
  QPoly() = default;  // zero polynomial
  explicit QPoly(std::int64_t constant);
  explicit QPoly(std::vector<std::int64_t> coeffs);

  static QPoly one() { return QPoly(1); }
  /// q^k.
  static QPoly q_power(int k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  /// Multiply by q^k, k >= 0.
  QPoly shift(int k) const;

  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }

  /// Canonical ascending-exponent form, e.g. "1 + 3q + q^2"; "0" when zero.
  std::string str() const;
  static QPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace klq
