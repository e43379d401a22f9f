#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "divides/braid.hpp"
#include "divides/errors.hpp"

namespace divides {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 add_mod(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  for (a %= p; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// Deterministic for all 64-bit inputs.
bool is_prime(u64 n) {
  if (n < 2) return false;
  constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int r = 0;
  for (; d % 2 == 0; d /= 2) ++r;
  for (u64 b : bases) {
    u64 x = pow_mod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int k = 1; k < r && composite; ++k) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

const std::array<u64, 3>& moduli() {
  static const std::array<u64, 3> ps = [] {
    std::array<u64, 3> out{};
    u64 n = (u64{1} << 61) - 1;
    for (auto& p : out) {
      while (!is_prime(n)) --n;
      p = n--;
    }
    return out;
  }();
  return ps;
}

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool empty = true;

  void absorb(const Range& r, std::int64_t shift) {
    if (r.empty) return;
    if (empty) {
      lo = r.lo + shift;
      hi = r.hi + shift;
      empty = false;
    } else {
      lo = std::min(lo, r.lo + shift);
      hi = std::max(hi, r.hi + shift);
    }
  }
};

// Column update for right multiplication by the reduced Burau image of an
// Artin letter: only column k-1 changes, so the step rewrites one entry per row.
template <class Matrix, class Step>
void apply_letter(Matrix& m, std::size_t dim, const Artin& a, Step&& step) {
  const std::size_t c = static_cast<std::size_t>(a.k - 1);
  for (std::size_t r = 0; r < dim; ++r) {
    step(m[r], c, c > 0, c + 1 < dim, a.positive);
  }
}

std::optional<std::pair<std::int64_t, std::int64_t>> degree_bounds(const std::vector<Artin>& word,
                                                                   std::size_t dim) {
  std::vector<std::vector<Range>> m(dim, std::vector<Range>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = {0, 0, false};
  for (const auto& a : word) {
    apply_letter(m, dim, a, [](std::vector<Range>& row, std::size_t c, bool has_left, bool has_right, bool pos) {
      Range out;
      if (has_left) out.absorb(row[c - 1], pos ? 1 : 0);
      out.absorb(row[c], pos ? 1 : -1);
      if (has_right) out.absorb(row[c + 1], pos ? 0 : -1);
      row[c] = out;
    });
  }
  std::int64_t lo = 0, hi = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    Range row_range;
    for (std::size_t c = 0; c < dim; ++c) {
      Range e = m[r][c];
      if (r == c) e.absorb(Range{0, 0, false}, 0);
      row_range.absorb(e, 0);
    }
    if (row_range.empty) return std::nullopt;
    lo += row_range.lo;
    hi += row_range.hi;
  }
  return std::pair{lo, hi};
}

u64 det_mod(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = sub_mod(0, det, p);
    }
    det = mul_mod(det, a[col][col], p);
    const u64 inv = inv_mod(a[col][col], p);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const u64 f = mul_mod(a[r][col], inv, p);
      for (std::size_t c = col; c < n; ++c) a[r][c] = sub_mod(a[r][c], mul_mod(f, a[col][c], p), p);
    }
  }
  return det;
}

// det(I - rho(word)) at t, modulo p.
u64 burau_det_at(const std::vector<Artin>& word, std::size_t dim, u64 t, u64 p) {
  const u64 tinv = inv_mod(t, p);
  std::vector<std::vector<u64>> m(dim, std::vector<u64>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  for (const auto& a : word) {
    apply_letter(m, dim, a, [&](std::vector<u64>& row, std::size_t c, bool has_left, bool has_right, bool pos) {
      const u64 left = has_left ? row[c - 1] : 0;
      const u64 right = has_right ? row[c + 1] : 0;
      if (pos) {
        row[c] = add_mod(sub_mod(mul_mod(t, left, p), mul_mod(t, row[c], p), p), right, p);
      } else {
        row[c] = add_mod(sub_mod(left, mul_mod(tinv, row[c], p), p), mul_mod(tinv, right, p), p);
      }
    });
  }
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m[r][c] = sub_mod(r == c ? 1 : 0, m[r][c], p);
  }
  return det_mod(std::move(m), p);
}

// Coefficients of Delta (times a unit) modulo p, lowest degree first.
std::vector<u64> alexander_mod(const std::vector<Artin>& word, std::size_t strands, std::int64_t lo,
                               std::int64_t hi, u64 p) {
  const std::size_t dim = strands - 1;
  const std::size_t points = static_cast<std::size_t>(hi - lo) + 1;
  std::vector<u64> xs(points), ys(points);
  for (std::size_t k = 0; k < points; ++k) {
    const u64 t = k + 2;
    xs[k] = t;
    const u64 shift = lo <= 0 ? pow_mod(t, static_cast<u64>(-lo), p) : pow_mod(inv_mod(t, p), static_cast<u64>(lo), p);
    ys[k] = mul_mod(burau_det_at(word, dim, t, p), shift, p);
  }
  // Newton divided differences, then expansion into the monomial basis.
  for (std::size_t j = 1; j < points; ++j) {
    for (std::size_t k = points - 1; k >= j; --k) {
      ys[k] = mul_mod(sub_mod(ys[k], ys[k - 1], p), inv_mod(sub_mod(xs[k], xs[k - j], p), p), p);
    }
  }
  std::vector<u64> poly(points, 0);
  for (std::size_t k = points; k-- > 0;) {
    // poly = poly * (t - xs[k]) + ys[k]
    for (std::size_t d = points - 1; d > 0; --d) {
      poly[d] = sub_mod(poly[d - 1], mul_mod(xs[k], poly[d], p), p);
    }
    poly[0] = add_mod(sub_mod(0, mul_mod(xs[k], poly[0], p), p), ys[k], p);
  }
  // Divide by 1 + t + ... + t^(s-1).
  const std::size_t s = strands;
  if (poly.size() < s) throw DivideError(ErrorCode::NotAKnotClosure, "Burau determinant too small");
  std::vector<u64> quot(poly.size() - s + 1, 0);
  for (std::size_t d = poly.size(); d-- >= s;) {
    const u64 q = poly[d];
    quot[d - (s - 1)] = q;
    for (std::size_t k = 0; k < s; ++k) poly[d - k] = sub_mod(poly[d - k], q, p);
  }
  for (std::size_t k = 0; k + 1 < s; ++k) {
    if (poly[k] != 0) throw DivideError(ErrorCode::NotAKnotClosure, "Burau determinant not divisible");
  }
  return quot;
}

}  // namespace

LaurentPoly alexander(const BraidWord& word) {
  validate(word);
  if (closure_component_count(word) != 1) {
    throw DivideError(ErrorCode::NotAKnotClosure, "braid closure has more than one component");
  }
  if (word.strands == 1) return LaurentPoly(1);
  std::vector<Artin> artin;
  for (const auto& l : band_to_artin(word).letters) artin.push_back(std::get<Artin>(l));
  const auto dim = static_cast<std::size_t>(word.strands - 1);
  const auto bounds = degree_bounds(artin, dim);
  if (!bounds) throw DivideError(ErrorCode::NotAKnotClosure, "Burau determinant vanishes");
  const auto [lo, hi] = *bounds;
  if (hi - lo + 1 < word.strands) throw DivideError(ErrorCode::NotAKnotClosure, "Burau determinant vanishes");

  const auto& ps = moduli();
  const auto r0 = alexander_mod(artin, static_cast<std::size_t>(word.strands), lo, hi, ps[0]);
  const auto r1 = alexander_mod(artin, static_cast<std::size_t>(word.strands), lo, hi, ps[1]);
  const auto r2 = alexander_mod(artin, static_cast<std::size_t>(word.strands), lo, hi, ps[2]);

  const u64 inv01 = inv_mod(ps[0] % ps[1], ps[1]);
  const __int128 modulus = static_cast<__int128>(ps[0]) * ps[1];
  const __int128 limit = static_cast<__int128>(1) << 62;
  std::vector<std::int64_t> coeffs(r0.size());
  for (std::size_t k = 0; k < r0.size(); ++k) {
    const u64 h = mul_mod(sub_mod(r1[k], r0[k] % ps[1], ps[1]), inv01, ps[1]);
    __int128 x = static_cast<__int128>(r0[k]) + static_cast<__int128>(ps[0]) * h;
    if (x > modulus / 2) x -= modulus;
    if (x >= limit || x <= -limit) throw DivideError(ErrorCode::Overflow, "Alexander coefficient exceeds 62 bits");
    const auto c = static_cast<std::int64_t>(x);
    const u64 check = c >= 0 ? static_cast<u64>(c) % ps[2] : sub_mod(0, static_cast<u64>(-c) % ps[2], ps[2]);
    if (check != r2[k]) throw DivideError(ErrorCode::Overflow, "Alexander coefficient failed modular check");
    coeffs[k] = c;
  }
  return LaurentPoly::from_coefficients(0, std::move(coeffs)).normalized();
}

LaurentPoly alexander_torus(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  if (a == 0 || b == 0) throw DivideError(ErrorCode::InvalidParameter, "torus knot parameters must be nonzero");
  if (std::gcd(a, b) != 1) {
    throw DivideError(ErrorCode::NotCoprime, "T(" + std::to_string(a) + "," + std::to_string(b) + ") is a link");
  }
  const LaurentPoly one(1);
  auto cyc = [&](std::int64_t n) { return LaurentPoly::monomial(1, n) - one; };
  return divide_exact(cyc(a * b) * cyc(1), cyc(a) * cyc(b)).normalized();
}

LaurentPoly alexander_cable_trefoil(std::int64_t m, std::int64_t r) {
  if (m < 1) throw DivideError(ErrorCode::InvalidParameter, "cable winding number must be positive");
  return (alexander_torus(2, 3).substitute_power(m) * alexander_torus(m, r)).normalized();
}

}  // namespace divides
