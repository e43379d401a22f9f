#include <gtest/gtest.h>

#include <random>

#include "divides/braid.hpp"
#include "divides/errors.hpp"
#include "divides/families.hpp"

using namespace divides;

namespace {

BraidWord from_family(Family f, std::vector<std::int64_t> params) {
  return divide_to_braid(trace(family_region({f, std::move(params)})));
}

BraidWord random_band_word(std::mt19937& rng, int strands, int length) {
  BraidWord w{strands, {}};
  std::uniform_int_distribution<int> pick(1, strands);
  for (int k = 0; k < length; ++k) {
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    w.letters.emplace_back(Band{std::min(i, j), std::max(i, j)});
  }
  return w;
}

}  // namespace

TEST(BraidText, RoundTrip) {
  const BraidWord w{4, {Band{1, 3}, Band{2, 4}, Artin{1, true}, Artin{2, false}}};
  EXPECT_EQ(to_string(w), "s=4; b(1,3) b(2,4) a(1) A(2)");
  EXPECT_EQ(parse_braid(to_string(w)), w);
  EXPECT_EQ(parse_braid("s=1;"), (BraidWord{1, {}}));
}

TEST(BraidText, Errors) {
  for (const char* s : {"", "s=2", "s=2; x(1)", "s=2; b(1,3)", "s=2; a(2)", "s=2; b(2,1)"}) {
    try {
      parse_braid(s);
      ADD_FAILURE() << s;
    } catch (const DivideError& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << s;
    }
  }
}

TEST(BandToArtin, Examples) {
  EXPECT_EQ(band_to_artin({2, {Band{1, 2}}}), (BraidWord{2, {Artin{1, true}}}));
  EXPECT_EQ(band_to_artin({3, {Band{1, 3}}}), (BraidWord{3, {Artin{2, true}, Artin{1, true}, Artin{2, false}}}));
  EXPECT_EQ(band_to_artin({5, {Band{2, 5}}}),
            (BraidWord{5, {Artin{4, true}, Artin{3, true}, Artin{2, true}, Artin{3, false}, Artin{4, false}}}));
}

TEST(BandToArtin, PreservesClosurePermutation) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_band_word(rng, 2 + trial % 6, trial % 11);
    ASSERT_EQ(closure_permutation(band_to_artin(w)), closure_permutation(w));
  }
}

TEST(Closure, ComponentsAndRank) {
  EXPECT_EQ(closure_component_count({2, {Band{1, 2}, Band{1, 2}, Band{1, 2}}}), 1);
  EXPECT_EQ(closure_component_count({2, {Band{1, 2}, Band{1, 2}}}), 2);
  EXPECT_EQ(closure_component_count({3, {}}), 3);
  EXPECT_EQ(closure_permutation({3, {Band{1, 3}}}), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(bennequin_rank({2, {Band{1, 2}, Band{1, 2}, Band{1, 2}}}), 2);
  EXPECT_TRUE(is_band_positive({3, {Band{1, 3}}}));
  EXPECT_FALSE(is_band_positive({3, {Artin{1, true}}}));
}

TEST(DivideToBraid, Examples) {
  const auto trefoil = from_family(Family::Billiard, {2, 3});
  EXPECT_EQ(trefoil, (BraidWord{2, {Band{1, 2}, Band{1, 2}, Band{1, 2}}}));
  EXPECT_EQ(from_family(Family::Billiard, {1, 1}), (BraidWord{1, {}}));
  EXPECT_EQ(bennequin_rank(from_family(Family::P, {2})), 4);
}

TEST(DivideToBraid, Contract) {
  std::vector<FamilySpec> specs;
  for (std::int64_t a = 1; a <= 9; ++a) {
    for (std::int64_t b = 1; b <= 9; ++b) {
      if (std::gcd(a, b) == 1) specs.push_back({Family::Billiard, {a, b}});
    }
  }
  for (std::int64_t j : {1, 2, 3, 4, -2, -3, -4}) {
    for (auto f : {Family::P, Family::Pm, Family::PIX, Family::PX}) specs.push_back({f, {j}});
  }
  for (std::int64_t n = 2; n <= 7; ++n) specs.push_back({Family::Couture, {n}});
  for (const auto& spec : specs) {
    const auto d = trace(family_region(spec));
    const auto w = divide_to_braid(d);
    ASSERT_TRUE(is_band_positive(w)) << to_string(spec);
    ASSERT_EQ(bennequin_rank(w), 2 * static_cast<std::int64_t>(double_point_count(d))) << to_string(spec);
    ASSERT_EQ(closure_component_count(w), 1) << to_string(spec);
  }
}

TEST(DivideToBraid, RejectsLinks) {
  try {
    divide_to_braid(trace(billiard(2, 4)));
    FAIL();
  } catch (const DivideError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnArc);
  }
  try {
    divide_to_braid(trace(billiard(3, 3)));
    FAIL();
  } catch (const DivideError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAnArc);
  }
}

TEST(DivideToBraid, MirrorImageGivesSameKnotData) {
  for (std::int64_t j : {2, 3, -3}) {
    const auto region = family_region({Family::P, {j}});
    const auto cells = CellSet::from_region(region);
    const auto w = divide_to_braid(trace_cells(cells));
    const auto m = divide_to_braid(trace_cells(cells.mirrored()));
    EXPECT_EQ(alexander(m), alexander(w));
    EXPECT_EQ(bennequin_rank(m), bennequin_rank(w));
  }
}

TEST(DivideToBraid, EverySmallArcStaircase) {
  int arcs = 0;
  for (const auto& row : component_census(3, 6)) {
    if (!row.generic || row.arcs != 1 || row.circles != 0) continue;
    ++arcs;
    const auto d = trace(normalize_parity(Region{row.stair, {0, 0}}));
    const auto w = divide_to_braid(d);
    const auto delta = alexander(w);
    const auto dp = static_cast<std::int64_t>(double_point_count(d));
    ASSERT_TRUE(delta.is_palindromic());
    ASSERT_EQ(std::abs(delta.eval_at_one()), 1);
    ASSERT_EQ(delta.span(), 2 * dp);
  }
  EXPECT_GT(arcs, 100);
}
