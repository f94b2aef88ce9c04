#include "lettergrid/geometry.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "fixtures.hpp"
#include "lettergrid/error.hpp"
#include "lettergrid/oracle.hpp"

namespace lettergrid {
namespace {

using testing::staircase_matrix;
using testing::staircase_gridding;
using testing::x_matrix;

SignedMatrix staircase_signs() { return *pmm_signs(staircase_matrix()); }

// All words of the given length over the nonzero cells.
void for_each_word(const GridMatrix& m, int len, const std::function<void(const CellWord&)>& visit) {
  const auto cells = m.nonzero_cells();
  CellWord w(len);
  std::function<void(int)> rec = [&](int i) {
    if (i == len) {
      visit(w);
      return;
    }
    for (const auto& c : cells) {
      w[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

TEST(StandardFigure, Staircase) {
  const auto segs = standard_figure(staircase_matrix());
  ASSERT_EQ(segs.size(), 5u);
  EXPECT_EQ(segs[0].cell, (Cell{1, 2}));
  // -1 cell: (k-1, l) to (k, l-1)
  EXPECT_DOUBLE_EQ(segs[0].x0, 0);
  EXPECT_DOUBLE_EQ(segs[0].y0, 2);
  EXPECT_DOUBLE_EQ(segs[0].x1, 1);
  EXPECT_DOUBLE_EQ(segs[0].y1, 1);
  EXPECT_TRUE(standard_figure(GridMatrix(2, 2)).empty());
}

TEST(BasePoint, FollowsSigns) {
  const auto s = staircase_signs();
  EXPECT_EQ(base_point(s, 1, 2), (std::pair<double, double>{0, 2}));
  EXPECT_EQ(base_point(s, 2, 1), (std::pair<double, double>{2, 0}));
  EXPECT_EQ(base_point(s, 3, 2), (std::pair<double, double>{3, 2}));
}

TEST(LocalOrders, StaircaseChains) {
  const auto lo = local_orders(staircase_gridding(), staircase_signs());
  EXPECT_EQ(lo.column_orders, (std::vector<std::vector<int>>{{1, 2}, {4, 3}, {7, 6, 5}}));
  EXPECT_EQ(lo.row_orders, (std::vector<std::vector<int>>{{7, 5, 3}, {4, 1, 6, 2}}));
  EXPECT_THROW(local_orders(staircase_gridding(), *pmm_signs(x_matrix())), std::invalid_argument);
}

TEST(Consistency, SmallestFirstExtension) {
  const auto lo = local_orders(staircase_gridding(), staircase_signs());
  auto psi = consistency(lo, 7);
  ASSERT_TRUE(psi.has_value());
  // extension order 4 1 7 6 2 5 3
  EXPECT_EQ(*psi, (std::vector<int>{2, 5, 7, 1, 6, 4, 3}));
  // the extension 4 1 7 6 5 2 3 respects the same chains
  const std::vector<int> other{2, 6, 7, 1, 5, 4, 3};
  for (const auto* chains : {&lo.column_orders, &lo.row_orders})
    for (const auto& c : *chains)
      for (std::size_t j = 0; j + 1 < c.size(); ++j) EXPECT_LT(other[c[j] - 1], other[c[j + 1] - 1]);
}

TEST(Consistency, DetectsCycles) {
  LocalOrders lo{{{1, 2}}, {{2, 1}}};
  EXPECT_FALSE(consistency(lo, 2).has_value());
  LocalOrders bad{{{1, 3}}, {}};
  EXPECT_THROW(consistency(bad, 2), std::out_of_range);
  EXPECT_EQ(consistency(LocalOrders{}, 3), (std::vector<int>{1, 2, 3}));
}

TEST(Realize, PointsAndReadBack) {
  const auto gp = staircase_gridding();
  auto r = realize(gp, staircase_signs());
  ASSERT_TRUE(r.has_value());
  ASSERT_EQ(r->points.size(), 7u);
  for (std::size_t j = 1; j < r->distances.size(); ++j) EXPECT_LT(r->distances[j - 1], r->distances[j]);
  EXPECT_EQ(read_back(r->points, staircase_matrix()), gp);
  // position 4 comes first in the extension: distance sqrt(2)/8 from its base (2,2)
  EXPECT_DOUBLE_EQ(r->points[3].x, 2 - 1.0 / 8);
  EXPECT_DOUBLE_EQ(r->points[3].y, 2 - 1.0 / 8);
}

TEST(Realize, InconsistentGriddingHasNone) {
  const auto pi = Permutation::parse("3142");
  for (const auto& gp : all_griddings(pi, x_matrix()))
    for (const auto& s : all_pmm_signs(x_matrix())) EXPECT_FALSE(realize(gp, s).has_value());
}

TEST(ReadBack, RejectsBadPointSets) {
  const auto m = x_matrix();
  EXPECT_THROW(read_back({{0.5, 0.5}, {0.5, 1.5}}, m), std::invalid_argument);
  EXPECT_THROW(read_back({{0.5, 0.5}, {1.5, 0.5}}, m), std::invalid_argument);
  EXPECT_THROW(read_back({{2.5, 0.5}}, m), std::invalid_argument);
  EXPECT_EQ(read_back({}, m).perm.size(), 0);
}

TEST(Membership, Examples) {
  EXPECT_FALSE(geom_member(Permutation::parse("3142"), x_matrix()));
  EXPECT_TRUE(geom_member(Permutation::parse("524361"), x_matrix()));
  EXPECT_TRUE(geom_member(Permutation::parse("6437251"), staircase_matrix()));
  EXPECT_TRUE(geom_member(Permutation{}, x_matrix()));
  auto w = geom_witness(Permutation::parse("524361"), x_matrix());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(realize(w->first, w->second).has_value());
}

TEST(Membership, NonPmmGoesThroughTheDoubling) {
  const auto f8 = testing::non_pmm_matrix();
  for (const auto& pi : testing::permutations_up_to(5)) {
    auto w = geom_witness(pi, f8);
    EXPECT_EQ(w.has_value(), geom_member(pi, doubled(f8)));
    if (w) {
      EXPECT_EQ(w->first.matrix.cols(), 4);
    }
  }
}

TEST(Membership, AgreesWithOracle) {
  const std::vector<GridMatrix> ms{x_matrix(), staircase_matrix(), testing::non_pmm_matrix()};
  for (const auto& m : ms)
    for (const auto& pi : testing::permutations_up_to(5))
      EXPECT_EQ(geom_member(pi, m), oracle::geom_member(pi, m)) << pi.compact();
}

TEST(Encoding, KnownWord) {
  const auto s = staircase_signs();
  const auto w = parse_cell_word("2.2 1.2 3.1 3.2 3.1 1.2 2.1");
  EXPECT_EQ(decode_word(w, s), staircase_gridding());
  // the smallest-first extension 4 1 7 6 2 5 3 swaps two commuting letters
  const auto ours = encode_gridded(staircase_gridding(), s);
  EXPECT_EQ(format_cell_word(ours), "2.2 1.2 3.1 3.2 1.2 3.1 2.1");
  EXPECT_EQ(decode_word(ours, s), staircase_gridding());
  EXPECT_EQ(format_cell_word(w), "2.2 1.2 3.1 3.2 3.1 1.2 2.1");
  EXPECT_THROW(decode_word(parse_cell_word("1.1"), s), std::invalid_argument);
}

TEST(Encoding, RoundTripOnShortWords) {
  const auto s = staircase_signs();
  for (int len = 0; len <= 4; ++len)
    for_each_word(staircase_matrix(), len, [&](const CellWord& w) {
      const auto gp = decode_word(w, s);
      ASSERT_TRUE(gp.valid());
      EXPECT_EQ(decode_word(encode_gridded(gp, s), s), gp);
    });
}

TEST(Encoding, CommutingLettersGiveTheSameGridding) {
  // cells in different columns and rows commute
  const auto s = staircase_signs();
  EXPECT_EQ(decode_word(parse_cell_word("1.2 2.1"), s), decode_word(parse_cell_word("2.1 1.2"), s));
  EXPECT_NE(decode_word(parse_cell_word("2.1 2.2"), s), decode_word(parse_cell_word("2.2 2.1"), s));
}

TEST(CellDecoder, Staircase) {
  const auto cd = derive_decoder(staircase_signs());
  EXPECT_EQ(cd.cells.size(), 5u);
  EXPECT_EQ(cd.alphabet.symbol(cd.letter_of({2, 1})), "2.1");
  EXPECT_THROW(cd.letter_of({1, 1}), std::invalid_argument);
  const Letter a12 = cd.letter_of({1, 2}), a22 = cd.letter_of({2, 2});
  // -1 cell: two entries form an inversion; +1 cell: none
  EXPECT_TRUE(cd.decoder.contains(a12, a12));
  EXPECT_FALSE(cd.decoder.contains(a22, a22));
}

TEST(CellDecoder, LetterGraphIsTheInversionGraph) {
  const std::vector<GridMatrix> ms{x_matrix(), staircase_matrix(), doubled(testing::non_pmm_matrix())};
  for (const auto& m : ms) {
    const auto s = *pmm_signs(m);
    const auto cd = derive_decoder(s);
    for (int len = 0; len <= 4; ++len)
      for_each_word(m, len, [&](const CellWord& w) {
        std::vector<Letter> letters;
        for (const auto& c : w) letters.push_back(cd.letter_of(c));
        EXPECT_TRUE(is_isomorphic(decode_letter_graph(cd.decoder, letters), inversion_graph(decode_word(w, s).perm)));
      });
  }
}

TEST(CellWordFormat, Errors) {
  EXPECT_TRUE(parse_cell_word("  ").empty());
  EXPECT_THROW(parse_cell_word("12"), ParseError);
  EXPECT_THROW(parse_cell_word("1.x"), ParseError);
  EXPECT_THROW(parse_cell_word("0.1"), ParseError);
}

}  // namespace
}  // namespace lettergrid
