#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divides/laurent.hpp"
#include "divides/multidivide.hpp"
#include "divides/region.hpp"

namespace divides {

enum class SporadicType { IX, X };
enum class Family { P, Pm, PIX, PX, Billiard, Couture };

std::string_view to_string(SporadicType type);
std::string_view to_string(Family family);

// Torus knot with 0 < a <= b; `mirror` records that the unnormalized
// parameters had opposite signs.
struct Torus {
  std::int64_t a = 1;
  std::int64_t b = 1;
  bool mirror = false;
  friend bool operator==(const Torus&, const Torus&) = default;
};

struct Cable {
  Torus companion;
  std::int64_t m = 1;
  std::int64_t r = 1;
  friend bool operator==(const Cable&, const Cable&) = default;
};

struct SporadicIX {
  std::int64_t j = 1;
  friend bool operator==(const SporadicIX&, const SporadicIX&) = default;
};

struct SporadicX {
  std::int64_t j = 1;
  friend bool operator==(const SporadicX&, const SporadicX&) = default;
};

using KnotDescriptor = std::variant<Torus, Cable, SporadicIX, SporadicX>;

Torus make_torus(std::int64_t a, std::int64_t b);
std::string to_string(const KnotDescriptor& knot);

struct SporadicData {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t genus = 0;
  friend bool operator==(const SporadicData&, const SporadicData&) = default;
};

// All of these throw InvalidParameter for j in {0, -1}.
StairType stair_P(std::int64_t j);
StairType stair_Pm(std::int64_t j);
StairType stair_PIX(std::int64_t j);
StairType stair_PX(std::int64_t j);
StairType stair_sporadic(SporadicType type, std::int64_t j);

// [(2i, 2n+1-2i)], i = 1..n-1; n > 1.
StairType stair_couture(std::int64_t n);

// The a x b rectangle, parity-normalized.
Region billiard(std::int64_t a, std::int64_t b);

SporadicData sporadic_data(SporadicType type, std::int64_t j);

// Area - #concave - p; throws FormulaViolation outside {0, 1}.
std::int64_t verify_coefficient_formula(SporadicType type, std::int64_t j);

// params: {j} for P/Pm/PIX/PX, {a, b} for Billiard, {n} for Couture.
KnotDescriptor expected_knot(Family family, const std::vector<std::int64_t>& params);

// Alexander polynomial of a torus or cable descriptor (normal form).
// Sporadic descriptors have no closed form here and throw InvalidParameter.
LaurentPoly oracle_alexander(const KnotDescriptor& knot);

// c(j) together with the segments l, a, b. Throws PlacementFailure if the
// intersection counts differ from (|j|, |j|, |j+1|, 1, 1, 1).
MultiDivide build_multidivide_Cj(std::int64_t j);

// Diagonal (j(j+1), -1, alpha, beta) of the linking matrix of L(j).
std::vector<std::int64_t> cj_framings(SporadicType type, std::int64_t j);

// A parsed family string such as "P:3", "Pm:-2", "PX:4", "B:3,7", "C:6".
struct FamilySpec {
  Family family = Family::P;
  std::vector<std::int64_t> params;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Region of the family, parity-normalized.
Region family_region(const FamilySpec& spec);

// Double points predicted for the traced family curve (the genus of the
// knot). Billiard parameters must be coprime.
std::int64_t expected_double_points(const FamilySpec& spec);

}  // namespace divides
