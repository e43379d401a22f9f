#include <gtest/gtest.h>

#include "divides/errors.hpp"
#include "divides/families.hpp"
#include "divides/multidivide.hpp"

using namespace divides;

namespace {

RationalPoint pt(Rational x, Rational y) { return {x, y}; }

MultiDivide trefoil_with(std::vector<AuxSegment> aux) {
  return {trace(normalize_parity(Region{make_stair({{2, 3}}), {0, 0}})), std::move(aux)};
}

ErrorCode code_of(const MultiDivide& md) {
  try {
    intersection_matrix(md);
  } catch (const DivideError& e) {
    return e.code();
  }
  return ErrorCode::Overflow;
}

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(-7, 3).str(), "-7/3");
  EXPECT_EQ(Rational(4).str(), "4");
}

TEST(IntersectionMatrix, DisjointSegments) {
  const auto md = trefoil_with({{pt(10, 10), pt(11, 10), "x"}, {pt(10, 12), pt(11, 12), "y"}});
  const auto m = intersection_matrix(md);
  ASSERT_EQ(m.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m[i][j], 0);
  }
}

TEST(IntersectionMatrix, CountsTransversalCrossingsAndFramings) {
  const auto md = trefoil_with({{pt(-1, Rational(1, 2)), pt(3, Rational(1, 2)), "h"},
                                {pt(Rational(1, 3), -1), pt(Rational(1, 3), 4), "v"}});
  const auto m = intersection_matrix(md, {6, -1, -2});
  const std::vector<std::vector<std::int64_t>> want{{6, 2, 3}, {2, -1, 1}, {3, 1, -2}};
  EXPECT_EQ(m, want);
}

TEST(IntersectionMatrix, FramingSizeChecked) {
  const auto md = trefoil_with({});
  try {
    intersection_matrix(md, {1, 2});
    FAIL();
  } catch (const DivideError& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
}

TEST(IntersectionMatrix, RejectsTouchingAndTriplePoints) {
  // Ends on the interior of a curve segment.
  EXPECT_EQ(code_of(trefoil_with({{pt(-1, Rational(1, 2)), pt(Rational(1, 2), Rational(1, 2)), "t"}})),
            ErrorCode::TangentialIntersection);
  // Runs along the curve.
  EXPECT_EQ(code_of(trefoil_with({{pt(0, 0), pt(1, 1), "o"}})), ErrorCode::TangentialIntersection);
  // Through the double point.
  const auto d = trefoil_with({}).primary;
  ASSERT_EQ(d.double_points.size(), 1u);
  const auto c = d.double_points.front();
  EXPECT_EQ(code_of(trefoil_with({{pt(Rational(c.x) - Rational(1, 2), Rational(c.y) - Rational(1, 5)),
                                   pt(Rational(c.x) + Rational(1, 2), Rational(c.y) + Rational(1, 5)), "d"}})),
            ErrorCode::TriplePoint);
  // Three aux segments through one point away from the curve.
  EXPECT_EQ(code_of(trefoil_with({{pt(9, 9), pt(11, 11), "p"},
                                  {pt(9, 11), pt(11, 9), "q"},
                                  {pt(9, 10), pt(11, 10), "r"}})),
            ErrorCode::TriplePoint);
  // Two aux segments crossing on the curve.
  EXPECT_EQ(code_of(trefoil_with({{pt(Rational(1, 2), -1), pt(Rational(1, 2), 4), "p"},
                                  {pt(-1, Rational(1, 2)), pt(3, Rational(1, 2)), "q"}})),
            ErrorCode::TriplePoint);
}

TEST(Cj, ReproducesLinkingMatrix) {
  for (std::int64_t j : {2, 3, 4, 5, 6, -2, -3, -4, -5, -6}) {
    const auto md = build_multidivide_Cj(j);
    ASSERT_EQ(md.primary.components.size(), 1u);
    ASSERT_EQ(md.aux.size(), 3u);
    EXPECT_EQ(md.aux[0].label, "l");
    EXPECT_EQ(md.aux[1].label, "a");
    EXPECT_EQ(md.aux[2].label, "b");
    for (auto type : {SporadicType::IX, SporadicType::X}) {
      const auto f = cj_framings(type, j);
      const auto m = intersection_matrix(md, f);
      const std::int64_t aj = std::abs(j);
      const std::int64_t a = type == SporadicType::IX ? -2 : -3;
      const std::int64_t b = type == SporadicType::IX ? -3 : -2;
      const std::vector<std::vector<std::int64_t>> want{{j * (j + 1), aj, aj, std::abs(j + 1)},
                                                        {aj, -1, 1, 1},
                                                        {aj, 1, a, 1},
                                                        {std::abs(j + 1), 1, 1, b}};
      EXPECT_EQ(m, want) << "j=" << j;
    }
  }
}

TEST(Cj, PrimaryCurveIsTheTorusKnotArc) {
  // c(j) has the genus of T(j, j+1) for j > 0 and of T(|j|-1, |j|) for j < -1.
  EXPECT_EQ(double_point_count(build_multidivide_Cj(5).primary), 10u);
  EXPECT_EQ(double_point_count(build_multidivide_Cj(6).primary), 15u);
  EXPECT_EQ(double_point_count(build_multidivide_Cj(-4).primary), 3u);
}

TEST(Cj, DiagonalSegmentAvoidsCurveLines) {
  // The slope-1 segment (l for j > 0, b for j < -1) lies on y = x + c with c odd.
  for (std::int64_t j : {2, 3, 4, 5, 6, -2, -3, -4, -5, -6}) {
    const auto md = build_multidivide_Cj(j);
    const auto& s = md.aux[j > 0 ? 0 : 2];
    EXPECT_EQ(s.to.y - s.from.y, s.to.x - s.from.x);
    const auto c = s.from.y - s.from.x;
    ASSERT_EQ(c.den(), 1);
    EXPECT_NE(c.num() % 2, 0) << "j=" << j;
  }
}

TEST(Cj, InvalidParameters) {
  for (std::int64_t j : {0, -1}) {
    try {
      build_multidivide_Cj(j);
      FAIL();
    } catch (const DivideError& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
    }
  }
}
