#include <gtest/gtest.h>

#include "divides/errors.hpp"
#include "divides/region.hpp"

using namespace divides;

namespace {

Region at_origin(const StairType& s) { return Region{s, {0, 0}}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const DivideError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Overflow;
}

// Every staircase with n <= max_n entries and a_n, b_1 <= dim.
template <class F>
void for_each_stair(int max_n, int dim, F&& f) {
  std::vector<std::int64_t> as, bs;
  auto rec = [&](auto&& self, int n, std::size_t depth, std::int64_t a_min, std::int64_t b_max) -> void {
    if (depth == static_cast<std::size_t>(n)) {
      std::vector<StairEntry> e;
      for (std::size_t i = 0; i < as.size(); ++i) e.emplace_back(as[i], bs[i]);
      f(make_stair(e));
      return;
    }
    for (auto a = a_min; a <= dim; ++a) {
      for (auto b = b_max; b >= 1; --b) {
        as.push_back(a);
        bs.push_back(b);
        self(self, n, depth + 1, a + 1, b - 1);
        as.pop_back();
        bs.pop_back();
      }
    }
  };
  for (int n = 1; n <= max_n; ++n) rec(rec, n, 0, 1, dim);
}

}  // namespace

TEST(MakeStair, AcceptsStaircases) {
  EXPECT_EQ(make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}}).size(), 4u);
  EXPECT_EQ(make_stair({{2, 3}}).size(), 1u);
}

TEST(MakeStair, RejectsBadInput) {
  EXPECT_EQ(code_of([] { make_stair(std::span<const StairEntry>{}); }), ErrorCode::EmptySequence);
  EXPECT_EQ(code_of([] { make_stair({{0, 3}}); }), ErrorCode::NonPositiveEntry);
  EXPECT_EQ(code_of([] { make_stair({{2, 3}, {3, -1}}); }), ErrorCode::NonPositiveEntry);
  try {
    make_stair({{3, 5}, {1, 7}});
    FAIL();
  } catch (const DivideError& e) {
    EXPECT_EQ(e.code(), ErrorCode::MonotonicityViolation);
    EXPECT_EQ(e.index(), 2);
  }
  EXPECT_EQ(code_of([] { make_stair({{1, 5}, {2, 5}}); }), ErrorCode::MonotonicityViolation);
}

TEST(Area, Examples) {
  EXPECT_EQ(area_closed_form(make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}})), 24);
  EXPECT_EQ(area_closed_form(make_stair({{2, 3}})), 6);
  EXPECT_EQ(area_closed_form(make_stair({{2, 3}, {4, 1}})), 8);
  EXPECT_EQ(area_cell_count(at_origin(make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}}))), 24);
  EXPECT_EQ(area_cell_count(Region{make_stair({{2, 3}}), {1, 0}}), 6);
  EXPECT_EQ(area_cell_count(at_origin(make_stair({{10, 9}, {11, 7}, {13, 6}}))), 109);
}

TEST(Area, ClosedFormMatchesCellsWithOffsets) {
  for_each_stair(3, 7, [](const StairType& s) {
    for (LatticePoint off : {LatticePoint{0, 0}, {3, -2}, {-5, 7}}) {
      ASSERT_EQ(area_closed_form(s), area_cell_count(Region{s, off}));
    }
  });
}

TEST(Concave, Examples) {
  const std::vector<LatticePoint> want{{1, 5}, {3, 3}, {4, 2}};
  EXPECT_EQ(concave_points(make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}})), want);
  EXPECT_TRUE(concave_points(make_stair({{2, 3}})).empty());
  EXPECT_EQ(concave_points(make_stair({{2, 5}, {4, 3}})), (std::vector<LatticePoint>{{2, 3}}));
}

TEST(Concave, CountForAllSmallStairs) {
  for_each_stair(4, 8, [](const StairType& s) {
    const auto pts = concave_points(s);
    ASSERT_EQ(pts.size(), s.size() - 1);
    if (s.size() <= 2) {
      ASSERT_TRUE(concave_parity_consistent(pts));
    }
  });
}

TEST(Concave, MixedParityDetected) {
  const std::vector<LatticePoint> pts{{1, 2}, {2, 2}};
  EXPECT_FALSE(concave_parity_consistent(pts));
  // Three steps are enough to mix parities: corners (1,2) and (3,1).
  const auto s = make_stair({{1, 3}, {3, 2}, {4, 1}});
  EXPECT_FALSE(concave_parity_consistent(concave_points(s)));
  EXPECT_EQ(code_of([&] { normalize_parity(at_origin(s)); }), ErrorCode::MixedConcaveParity);
}

TEST(NormalizeParity, Examples) {
  const auto p3 = make_stair({{1, 7}, {3, 5}, {4, 3}, {6, 2}});
  EXPECT_EQ(normalize_parity(at_origin(p3)), (Region{p3, {1, 0}}));
  const auto s = make_stair({{2, 5}, {4, 3}});
  EXPECT_EQ(normalize_parity(at_origin(s)), at_origin(s));
  const auto r = make_stair({{2, 3}});
  EXPECT_EQ(normalize_parity(at_origin(r)), at_origin(r));
}

TEST(NormalizeParity, IdempotentAndSmallShift) {
  for_each_stair(3, 7, [](const StairType& s) {
    if (!concave_parity_consistent(concave_points(s))) return;
    const auto once = normalize_parity(at_origin(s));
    ASSERT_TRUE(once.offset == (LatticePoint{0, 0}) || once.offset == (LatticePoint{1, 0}));
    ASSERT_EQ(normalize_parity(once), once);
    ASSERT_TRUE(is_parity_normalized(once));
    for (const auto& q : concave_points(s)) ASSERT_FALSE((q + once.offset).even());
  });
}

TEST(AddSquare, Examples) {
  const auto base = make_stair({{1, 3}, {2, 1}});
  EXPECT_EQ(add_square(base, Edge::Bottom), make_stair({{1, 5}, {2, 3}}));
  EXPECT_EQ(add_square(make_stair({{1, 5}, {2, 3}}), Edge::Left), make_stair({{6, 5}, {7, 3}}));
  EXPECT_EQ(area_closed_form(make_stair({{6, 5}, {7, 3}})), 33);
  const auto left = add_square(base, Edge::Left);
  EXPECT_EQ(left, make_stair({{4, 3}, {5, 1}}));
  EXPECT_EQ(add_square(left, Edge::Bottom), make_stair({{4, 8}, {5, 6}}));
  EXPECT_EQ(area_closed_form(make_stair({{4, 8}, {5, 6}})), 38);
}

TEST(AddSquare, AreaAndEdgeBookkeeping) {
  for_each_stair(3, 9, [](const StairType& s) {
    for (auto e : {Edge::Bottom, Edge::Left}) {
      const auto l = edge_length(s, e);
      const auto t = add_square(s, e);
      ASSERT_EQ(t.size(), s.size());
      ASSERT_EQ(area_closed_form(t) - area_closed_form(s), l * l);
      if (e == Edge::Bottom) {
        ASSERT_EQ(t.left_edge(), s.left_edge() + s.bottom_edge());
        ASSERT_EQ(t.bottom_edge(), s.bottom_edge());
      } else {
        ASSERT_EQ(t.bottom_edge(), s.left_edge() + s.bottom_edge());
        ASSERT_EQ(t.left_edge(), s.left_edge());
      }
    }
  });
}

TEST(Transpose, IsAnInvolutionPreservingArea) {
  for_each_stair(3, 7, [](const StairType& s) {
    ASSERT_EQ(transpose(transpose(s)), s);
    ASSERT_EQ(area_closed_form(transpose(s)), area_closed_form(s));
  });
  EXPECT_EQ(transpose(make_stair({{1, 3}, {2, 1}})), make_stair({{1, 2}, {3, 1}}));
}

TEST(Lattice, Parity) {
  EXPECT_TRUE((LatticePoint{0, 0}).even());
  EXPECT_EQ((LatticePoint{-1, 0}).parity(), 1);
  EXPECT_EQ((LatticePoint{-3, -5}).parity(), 0);
}
