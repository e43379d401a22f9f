#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace divides {

// Integer Laurent polynomial in t, stored densely from its lowest exponent.
// Arithmetic is exact; an intermediate that leaves int64 throws Overflow.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(std::int64_t coeff, std::int64_t exponent);
  static LaurentPoly from_coefficients(std::int64_t low_exponent, std::vector<std::int64_t> coeffs);
  // Accepts the output of str(), e.g. "1 - t + t^2", "-2*t^-1 + 3", "t^3".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t low_degree() const noexcept { return low_; }
  std::int64_t high_degree() const noexcept {
    return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  // high - low; 0 for constants and for zero.
  std::int64_t span() const noexcept { return is_zero() ? 0 : high_degree() - low_degree(); }
  std::int64_t coefficient(std::int64_t exponent) const noexcept;
  std::map<std::int64_t, std::int64_t> coefficients() const;

  // Multiply by +-t^k so that the lowest exponent is 0 and its coefficient is
  // positive. Two polynomials agree up to units iff their normal forms are equal.
  LaurentPoly normalized() const;
  bool is_palindromic() const;
  std::int64_t eval_at_one() const;
  // t -> t^m, m >= 1.
  LaurentPoly substitute_power(std::int64_t m) const;

  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<std::int64_t> coeffs_;  // coeffs_[i] multiplies t^(low_ + i)
};

// Exact quotient num / den. Throws InvalidParameter when den is zero or the
// division leaves a remainder.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace divides
