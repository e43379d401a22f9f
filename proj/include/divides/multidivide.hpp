#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "divides/tracer.hpp"

namespace divides {

// Exact rational with 64-bit numerator/denominator, always reduced with a
// positive denominator. Only used for auxiliary segment placement, where all
// values are small.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(Rational a, Rational b);

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct RationalPoint {
  Rational x, y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct AuxSegment {
  RationalPoint from, to;
  std::string label;  // "l", "a" or "b" for C(j)
};

struct MultiDivide {
  Divide primary;
  std::vector<AuxSegment> aux;
};

// Rows/columns: one per primary component (in trace order), then one per aux
// segment. Off-diagonal entries count transversal intersection points;
// diagonal entries are the caller's framings (size must equal the number of
// rows). Throws TangentialIntersection for touching or overlapping contacts
// and TriplePoint when three branches meet.
std::vector<std::vector<std::int64_t>> intersection_matrix(
    const MultiDivide& md, const std::vector<std::int64_t>& framings);

// Same, with zero diagonal.
std::vector<std::vector<std::int64_t>> intersection_matrix(const MultiDivide& md);

}  // namespace divides
