#include "divides/multidivide.hpp"

#include <numeric>
#include <optional>

#include "divides/errors.hpp"

namespace divides {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw DivideError(ErrorCode::Overflow, "rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(checked(n), checked(d));
}

int sign(Rational r) { return r.num() > 0 ? 1 : (r.num() < 0 ? -1 : 0); }

RationalPoint to_rational(LatticePoint p) { return {Rational(p.x), Rational(p.y)}; }

int orient(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

// c is known to be collinear with [a, b].
bool within(const RationalPoint& a, const RationalPoint& b, const RationalPoint& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

struct Segment {
  RationalPoint p, q;
};

enum class Contact { None, Cross, TouchP, TouchQ, TouchOther, Overlap };

struct ContactResult {
  Contact kind = Contact::None;
  RationalPoint point{};
};

// Contact between segments s and t. TouchP/TouchQ: an endpoint of t lies on s.
// TouchOther: an endpoint of s lies on t.
ContactResult contact(const Segment& s, const Segment& t) {
  const int o1 = orient(s.p, s.q, t.p);
  const int o2 = orient(s.p, s.q, t.q);
  const int o3 = orient(t.p, t.q, s.p);
  const int o4 = orient(t.p, t.q, s.q);
  if (o1 == 0 && o2 == 0) {
    if (within(s.p, s.q, t.p) || within(s.p, s.q, t.q) || within(t.p, t.q, s.p) ||
        within(t.p, t.q, s.q)) {
      return {Contact::Overlap, t.p};
    }
    return {};
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    // s.p + u (s.q - s.p), u = cross(t.p - s.p, t.q - t.p) / cross(s.q - s.p, t.q - t.p)
    const Rational dx = s.q.x - s.p.x, dy = s.q.y - s.p.y;
    const Rational ex = t.q.x - t.p.x, ey = t.q.y - t.p.y;
    const Rational den = dx * ey - dy * ex;
    const Rational num = (t.p.x - s.p.x) * ey - (t.p.y - s.p.y) * ex;
    const Rational u = num * Rational(den.den(), den.num());
    return {Contact::Cross, {s.p.x + u * dx, s.p.y + u * dy}};
  }
  if (o1 == 0 && within(s.p, s.q, t.p)) return {Contact::TouchP, t.p};
  if (o2 == 0 && within(s.p, s.q, t.q)) return {Contact::TouchQ, t.q};
  if (o3 == 0 && within(t.p, t.q, s.p)) return {Contact::TouchOther, s.p};
  if (o4 == 0 && within(t.p, t.q, s.q)) return {Contact::TouchOther, s.q};
  return {};
}

std::vector<Segment> unit_segments(const Component& c) {
  const auto pts = expand_path(c);
  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    out.push_back({to_rational(pts[i]), to_rational(pts[i + 1])});
  }
  if (c.closed && pts.size() > 1) out.push_back({to_rational(pts.back()), to_rational(pts.front())});
  return out;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivideError(ErrorCode::InvalidParameter, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational operator+(Rational a, Rational b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}
Rational operator-(Rational a, Rational b) { return a + Rational(-b.num_, b.den_); }
Rational operator*(Rational a, Rational b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}
std::strong_ordering operator<=>(Rational a, Rational b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::vector<std::vector<std::int64_t>> intersection_matrix(const MultiDivide& md,
                                                           const std::vector<std::int64_t>& framings) {
  const std::size_t np = md.primary.components.size();
  const std::size_t n = np + md.aux.size();
  if (framings.size() != n) {
    throw DivideError(ErrorCode::InvalidParameter,
                      "expected " + std::to_string(n) + " framing entries");
  }
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = framings[i];

  std::vector<std::vector<Segment>> curve;
  for (const auto& c : md.primary.components) curve.push_back(unit_segments(c));
  auto on_curve = [&](const RationalPoint& p) {
    for (const auto& segs : curve) {
      for (const auto& s : segs) {
        if (orient(s.p, s.q, p) == 0 && within(s.p, s.q, p)) return true;
      }
    }
    return false;
  };
  auto is_double_point = [&](const RationalPoint& p) {
    if (p.x.den() != 1 || p.y.den() != 1) return false;
    const LatticePoint lp{p.x.num(), p.y.num()};
    return std::binary_search(md.primary.double_points.begin(), md.primary.double_points.end(), lp);
  };

  std::vector<Segment> aux;
  for (const auto& a : md.aux) {
    if (a.from == a.to) throw DivideError(ErrorCode::InvalidParameter, "degenerate aux segment");
    aux.push_back({a.from, a.to});
  }

  for (std::size_t k = 0; k < aux.size(); ++k) {
    for (std::size_t c = 0; c < np; ++c) {
      std::int64_t count = 0;
      for (const auto& d : curve[c]) {
        const auto r = contact(aux[k], d);
        switch (r.kind) {
          case Contact::None: break;
          case Contact::Cross: ++count; break;
          case Contact::TouchP:
          case Contact::TouchQ:
            if (is_double_point(r.point)) {
              throw DivideError(ErrorCode::TriplePoint,
                                "segment " + md.aux[k].label + " passes through a double point");
            }
            [[fallthrough]];
          case Contact::TouchOther:
          case Contact::Overlap:
            throw DivideError(ErrorCode::TangentialIntersection,
                              "segment " + md.aux[k].label + " touches the curve at (" +
                                  r.point.x.str() + "," + r.point.y.str() + ")");
        }
      }
      m[k + np][c] = m[c][k + np] = count;
    }
  }

  std::vector<RationalPoint> crossings;
  for (std::size_t i = 0; i < aux.size(); ++i) {
    for (std::size_t j = i + 1; j < aux.size(); ++j) {
      const auto r = contact(aux[i], aux[j]);
      if (r.kind == Contact::None) continue;
      if (r.kind != Contact::Cross) {
        throw DivideError(ErrorCode::TangentialIntersection,
                          "segments " + md.aux[i].label + " and " + md.aux[j].label + " touch");
      }
      if (on_curve(r.point)) {
        throw DivideError(ErrorCode::TriplePoint, "segments " + md.aux[i].label + " and " +
                                                      md.aux[j].label + " cross on the curve");
      }
      for (const auto& p : crossings) {
        if (p == r.point) throw DivideError(ErrorCode::TriplePoint, "three segments concurrent");
      }
      crossings.push_back(r.point);
      m[np + i][np + j] = m[np + j][np + i] = 1;
    }
  }
  return m;
}

std::vector<std::vector<std::int64_t>> intersection_matrix(const MultiDivide& md) {
  return intersection_matrix(
      md, std::vector<std::int64_t>(md.primary.components.size() + md.aux.size(), 0));
}

}  // namespace divides
