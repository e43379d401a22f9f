#include <gtest/gtest.h>

#include "divides/errors.hpp"
#include "divides/families.hpp"

using namespace divides;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const DivideError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Overflow;
}

std::size_t traced_double_points(const StairType& s) {
  return double_point_count(trace(normalize_parity(Region{s, {0, 0}})));
}

}  // namespace

TEST(StairP, Examples) {
  EXPECT_EQ(stair_P(1), make_stair({{1, 3}, {2, 1}}));
  EXPECT_EQ(stair_P(3), make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}}));
  EXPECT_EQ(stair_P(-2), make_stair({{2, 3}, {4, 1}}));
  EXPECT_EQ(code_of([] { stair_P(0); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { stair_P(-1); }), ErrorCode::InvalidParameter);
}

TEST(StairP, LengthAndAreaLaws) {
  for (std::int64_t j = 1; j <= 50; ++j) {
    ASSERT_EQ(stair_P(j).size(), static_cast<std::size_t>(j + 1));
    ASSERT_EQ(area_closed_form(stair_P(j)), 2 * j * j + 2 * j);
  }
  for (std::int64_t j = -50; j <= -2; ++j) {
    ASSERT_EQ(stair_P(j).size(), static_cast<std::size_t>(-j));
    ASSERT_EQ(area_closed_form(stair_P(j)), 2 * j * j);
  }
}

TEST(StairP, NegativeCaseExtendsCoutureType) {
  for (std::int64_t j = -12; j <= -2; ++j) {
    auto e = stair_couture(-j).entries();
    e.emplace_back(-2 * j, 1);
    ASSERT_EQ(stair_P(j), make_stair(e));
  }
}

TEST(StairP, DoublePointLaw) {
  for (std::int64_t j = -12; j <= 12; ++j) {
    if (j == 0 || j == -1) continue;
    const auto want = j > 0 ? j * (j - 1) : (j + 1) * (j + 1);
    ASSERT_EQ(traced_double_points(stair_P(j)), static_cast<std::size_t>(want)) << j;
  }
}

TEST(StairSporadic, Examples) {
  EXPECT_EQ(stair_PIX(1), make_stair({{6, 5}, {7, 3}}));
  EXPECT_EQ(stair_PIX(2), make_stair({{10, 9}, {11, 7}, {13, 6}}));
  EXPECT_EQ(area_closed_form(stair_PIX(2)), 109);
  EXPECT_EQ(stair_PX(1), make_stair({{4, 8}, {5, 6}}));
  EXPECT_EQ(area_closed_form(stair_PX(1)), 38);
  EXPECT_EQ(stair_Pm(1), make_stair({{1, 5}, {2, 3}}));
}

TEST(StairSporadic, EdgeLengths) {
  for (std::int64_t j = -15; j <= 15; ++j) {
    if (j == 0 || j == -1) continue;
    const auto p = stair_P(j);
    ASSERT_EQ(p.bottom_edge(), std::abs(2 * j));
    ASSERT_EQ(p.left_edge(), std::abs(2 * j + 1));
    ASSERT_EQ(stair_Pm(j).left_edge(), std::abs(4 * j + 1));
    ASSERT_EQ(add_square(p, Edge::Left).bottom_edge(), std::abs(4 * j + 1));
  }
}

TEST(StairSporadic, GenusMatchesTable) {
  for (std::int64_t j = -8; j <= 8; ++j) {
    if (j == 0 || j == -1) continue;
    for (auto type : {SporadicType::IX, SporadicType::X}) {
      const auto s = stair_sporadic(type, j);
      ASSERT_EQ(traced_double_points(s), static_cast<std::size_t>(sporadic_data(type, j).genus));
      const auto profile = component_profile(trace(normalize_parity(Region{s, {0, 0}})));
      ASSERT_EQ(profile.arcs, 1);
      ASSERT_EQ(profile.circles, 0);
    }
  }
}

TEST(Couture, Examples) {
  EXPECT_EQ(stair_couture(6), make_stair({{2, 11}, {4, 9}, {6, 7}, {8, 5}, {10, 3}}));
  EXPECT_EQ(stair_couture(2), make_stair({{2, 3}}));
  EXPECT_EQ(stair_couture(3), make_stair({{2, 5}, {4, 3}}));
  EXPECT_EQ(code_of([] { stair_couture(1); }), ErrorCode::InvalidParameter);
}

TEST(Billiard, Examples) {
  const auto d = trace(billiard(3, 7));
  EXPECT_EQ(component_profile(d).arcs, 1);
  EXPECT_EQ(double_point_count(d), 6u);
  EXPECT_EQ(double_point_count(trace(billiard(1, 1))), 0u);
  EXPECT_EQ(component_profile(trace(billiard(2, 4))).total(), 2);
  EXPECT_EQ(code_of([] { billiard(0, 3); }), ErrorCode::InvalidParameter);
}

TEST(SporadicData, Examples) {
  EXPECT_EQ(sporadic_data(SporadicType::IX, 1), (SporadicData{32, -169, 11}));
  EXPECT_EQ(sporadic_data(SporadicType::X, 1), (SporadicData{37, -196, 13}));
  EXPECT_EQ(sporadic_data(SporadicType::IX, -2), (SporadicData{71, -400, 28}));
  EXPECT_EQ(code_of([] { sporadic_data(SporadicType::X, 0); }), ErrorCode::InvalidParameter);
}

TEST(CoefficientFormula, Examples) {
  EXPECT_EQ(verify_coefficient_formula(SporadicType::IX, 1), 0);
  EXPECT_EQ(verify_coefficient_formula(SporadicType::IX, -2), 1);
  EXPECT_EQ(verify_coefficient_formula(SporadicType::X, 1), 0);
}

TEST(CoefficientFormula, SignRefinement) {
  for (std::int64_t j = -30; j <= 30; ++j) {
    if (j == 0 || j == -1) continue;
    for (auto type : {SporadicType::IX, SporadicType::X}) {
      ASSERT_EQ(verify_coefficient_formula(type, j), j > 0 ? 0 : 1);
    }
  }
}

TEST(ExpectedKnot, Examples) {
  EXPECT_EQ(expected_knot(Family::P, {3}), KnotDescriptor(Torus{3, 7, false}));
  EXPECT_EQ(expected_knot(Family::Pm, {-2}), KnotDescriptor(Cable{Torus{2, 3, false}, 2, 11}));
  EXPECT_EQ(expected_knot(Family::Pm, {2}), KnotDescriptor(Cable{Torus{2, 3, false}, 2, 13}));
  EXPECT_EQ(expected_knot(Family::Couture, {6}), KnotDescriptor(Torus{6, 11, false}));
  EXPECT_EQ(expected_knot(Family::Billiard, {7, 3}), KnotDescriptor(Torus{3, 7, false}));
  EXPECT_EQ(expected_knot(Family::PIX, {4}), KnotDescriptor(SporadicIX{4}));
  EXPECT_EQ(expected_knot(Family::PX, {-3}), KnotDescriptor(SporadicX{-3}));
  EXPECT_EQ(to_string(expected_knot(Family::Pm, {-2})), "C(T(2,3); 2, 11)");
  EXPECT_EQ(code_of([] { expected_knot(Family::Billiard, {3}); }), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of([] { oracle_alexander(SporadicX{2}); }), ErrorCode::InvalidParameter);
}

TEST(ExpectedKnot, MirrorFlag) {
  EXPECT_EQ(make_torus(-3, 2), (Torus{2, 3, true}));
  EXPECT_EQ(make_torus(-3, -2), (Torus{2, 3, false}));
}

TEST(ExpectedDoublePoints, MatchesTraceForAllFamilies) {
  for (std::int64_t j = -6; j <= 6; ++j) {
    if (j == 0 || j == -1) continue;
    for (auto f : {Family::P, Family::Pm, Family::PIX, Family::PX}) {
      const FamilySpec spec{f, {j}};
      ASSERT_EQ(static_cast<std::int64_t>(double_point_count(trace(family_region(spec)))),
                expected_double_points(spec))
          << to_string(spec);
    }
  }
  for (std::int64_t n = 2; n <= 8; ++n) {
    const FamilySpec spec{Family::Couture, {n}};
    ASSERT_EQ(static_cast<std::int64_t>(double_point_count(trace(family_region(spec)))),
              expected_double_points(spec));
  }
}

TEST(FamilySpec, Parse) {
  EXPECT_EQ(parse_family("P:3"), (FamilySpec{Family::P, {3}}));
  EXPECT_EQ(parse_family("Pm:-2"), (FamilySpec{Family::Pm, {-2}}));
  EXPECT_EQ(parse_family("PIX:4"), (FamilySpec{Family::PIX, {4}}));
  EXPECT_EQ(parse_family("PX:-3"), (FamilySpec{Family::PX, {-3}}));
  EXPECT_EQ(parse_family("B:3,7"), (FamilySpec{Family::Billiard, {3, 7}}));
  EXPECT_EQ(parse_family("C:6"), (FamilySpec{Family::Couture, {6}}));
  EXPECT_EQ(to_string(parse_family("B:3,7")), "B:3,7");
  for (const char* bad : {"P", "Q:3", "P:x", "B:3", "P:3,4", "P:", "B:3,"}) {
    EXPECT_EQ(code_of([&] { parse_family(bad); }), ErrorCode::ParseError) << bad;
  }
}
