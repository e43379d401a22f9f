#include "divides/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "divides/errors.hpp"

namespace divides {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DivideError(ErrorCode::Overflow, "coefficient overflow");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DivideError(ErrorCode::Overflow, "coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, std::int64_t exponent) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t low_exponent, std::vector<std::int64_t> coeffs) {
  LaurentPoly p;
  p.low_ = low_exponent;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<std::int64_t>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPoly::coefficient(std::int64_t exponent) const noexcept {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<std::int64_t, std::int64_t> LaurentPoly::coefficients() const {
  std::map<std::int64_t, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out[low_ + static_cast<std::int64_t>(i)] = coeffs_[i];
  }
  return out;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return *this;
  LaurentPoly p = *this;
  p.low_ = 0;
  if (p.coeffs_.front() < 0) {
    for (auto& c : p.coeffs_) c = -c;
  }
  return p;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::int64_t LaurentPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = add_checked(s, c);
  return s;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t m) const {
  if (m < 1) throw DivideError(ErrorCode::InvalidParameter, "substitution power must be >= 1");
  if (is_zero()) return *this;
  std::vector<std::int64_t> out(static_cast<std::size_t>((coeffs_.size() - 1) * m + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(m)] = coeffs_[i];
  return from_coefficients(low_ * m, std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t lo = std::min(a.low_, b.low_);
  const std::int64_t hi = std::max(a.high_degree(), b.high_degree());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::int64_t e = lo; e <= hi; ++e) {
    c[static_cast<std::size_t>(e - lo)] = add_checked(a.coefficient(e), b.coefficient(e));
  }
  return LaurentPoly::from_coefficients(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = add_checked(c[i + j], mul_checked(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentPoly::from_coefficients(a.low_ + b.low_, std::move(c));
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivideError(ErrorCode::InvalidParameter, "division by zero polynomial");
  if (num.is_zero()) return {};
  const std::int64_t dlo = den.low_degree(), dhi = den.high_degree();
  const std::int64_t lead = den.coefficient(dhi);
  // Dense long division from the top.
  std::vector<std::int64_t> r(static_cast<std::size_t>(num.span() + 1));
  for (std::int64_t e = num.low_degree(); e <= num.high_degree(); ++e) {
    r[static_cast<std::size_t>(e - num.low_degree())] = num.coefficient(e);
  }
  const std::int64_t base = num.low_degree();
  const std::int64_t qlo = num.low_degree() - dlo;
  const std::int64_t qhi = num.high_degree() - dhi;
  if (qhi < qlo) throw DivideError(ErrorCode::InvalidParameter, "inexact polynomial division");
  std::vector<std::int64_t> q(static_cast<std::size_t>(qhi - qlo + 1), 0);
  for (std::int64_t qe = qhi; qe >= qlo; --qe) {
    const std::int64_t top = r[static_cast<std::size_t>(qe + dhi - base)];
    if (top % lead != 0) throw DivideError(ErrorCode::InvalidParameter, "inexact polynomial division");
    const std::int64_t c = top / lead;
    q[static_cast<std::size_t>(qe - qlo)] = c;
    if (c == 0) continue;
    for (std::int64_t de = dlo; de <= dhi; ++de) {
      auto& slot = r[static_cast<std::size_t>(qe + de - base)];
      slot = add_checked(slot, -mul_checked(c, den.coefficient(de)));
    }
  }
  if (std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v != 0; })) {
    throw DivideError(ErrorCode::InvalidParameter, "inexact polynomial division");
  }
  return LaurentPoly::from_coefficients(qlo, std::move(q));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(i);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 't';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw DivideError(ErrorCode::ParseError, "empty polynomial");
  if (s == "0") return {};
  LaurentPoly out;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& v) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    v = std::stoll(s.substr(start, i - start));
    return true;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw DivideError(ErrorCode::ParseError, "expected '+' or '-' in \"" + std::string(text) + "\"");
    }
    first = false;
    std::int64_t coeff = 1, exp = 0;
    const bool has_coeff = read_int(coeff);
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        if (!read_int(exp)) throw DivideError(ErrorCode::ParseError, "bad exponent");
        exp *= esign;
      }
    } else if (!has_coeff) {
      throw DivideError(ErrorCode::ParseError, "bad term in \"" + std::string(text) + "\"");
    }
    out = out + monomial(sign * coeff, exp);
  }
  return out;
}

}  // namespace divides
