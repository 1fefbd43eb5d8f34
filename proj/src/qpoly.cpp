#include "klq/qpoly.hpp"

#include <stdexcept>

#include "klq/perm.hpp"  // parse_error

namespace klq {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow in multiplication");
  return r;
}

}  // namespace

QPoly::QPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_power(int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return QPoly(std::move(c));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = checked_add(c[i], o.coeffs_[i]);
  return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<std::int64_t> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = checked_add(c[i], -o.coeffs_[i]);
  return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<std::int64_t> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
  return QPoly(std::move(c));
}

QPoly QPoly::shift(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (is_zero()) return QPoly();
  std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(c));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a);
      s += "q";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

QPoly QPoly::parse(std::string_view text) {
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i >= text.size()) throw parse_error("empty polynomial", 0);
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    std::int64_t sign = 1;
    if (!first) {
      if (text[i] == '+')
        ++i;
      else if (text[i] == '-')
        sign = -1, ++i;
      else
        throw parse_error("expected '+' or '-'", i);
      skip_ws();
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
      skip_ws();
    }
    first = false;
    std::int64_t mag = 0;
    bool have_digits = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      mag = checked_add(checked_mul(mag, 10), text[i] - '0');
      ++i;
      have_digits = true;
    }
    int exp = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      if (!have_digits) mag = 1;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || text[i] < '0' || text[i] > '9')
          throw parse_error("expected exponent digits", i);
        exp = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          exp = exp * 10 + (text[i] - '0');
          if (exp > 1'000'000) throw parse_error("exponent too large", i);
          ++i;
        }
      }
    } else if (!have_digits) {
      throw parse_error("malformed term", i);
    }
    if (exp >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(exp) + 1, 0);
    coeffs[static_cast<std::size_t>(exp)] =
        checked_add(coeffs[static_cast<std::size_t>(exp)], sign * mag);
    skip_ws();
  }
  return QPoly(std::move(coeffs));
}

}  // namespace klq
