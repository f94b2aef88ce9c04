#include "lettergrid/pipeline.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lettergrid/oracle.hpp"

namespace lettergrid {
namespace {

using testing::x_matrix;

TEST(Separation, Examples) {
  const auto pi = Permutation::parse("3142");
  EXPECT_TRUE(separated(pi, 1, 2));
  // the entry 3 lies between 1 and 4 in value only
  EXPECT_TRUE(separated(pi, 2, 3));
  EXPECT_FALSE(separated(Permutation{2, 1}, 1, 2));
  EXPECT_FALSE(separated(Permutation{1, 2, 3}, 1, 3));
}

TEST(Separation, MatchesDistinguishingOnSmallPermutations) {
  for (const auto& pi : testing::permutations_up_to(5)) {
    const auto g = inversion_graph(pi);
    for (int i = 1; i <= pi.size(); ++i)
      for (int j = i + 1; j <= pi.size(); ++j) EXPECT_EQ(separated(pi, i, j), distinguished(g, i, j));
  }
}

TEST(Reletter, OneCellPerLetter) {
  const auto pi = Permutation::parse("524361");
  const auto gp = *find_gridding(pi, x_matrix());
  const auto lz = *minimal_lettering(inversion_graph(pi), 3);
  const auto r = reletter(lz, lz.alphabet, gp);
  EXPECT_EQ(decode_letter_graph(r.decoder, r.word), decode_letter_graph(lz.decoder, lz.word));
  for (Letter x = 0; x < static_cast<Letter>(r.letters.size()); ++x)
    for (int i : entries_of(r, x)) EXPECT_EQ(gp.cell_of(i), r.letters[x].cell);
  EXPECT_NE(r.alphabet.symbol(0).find('@'), std::string::npos);
  Letterization wrong = lz;
  std::swap(wrong.iso[0], wrong.iso[1]);
  if (!verify_letterization(inversion_graph(pi), wrong)) {
    EXPECT_THROW(reletter(wrong, lz.alphabet, gp), std::invalid_argument);
  }
}

TEST(ContractInCells, CollapsesRunsInsideCells) {
  const auto inc = GridMatrix::from_display({{1}});
  const auto c = contract_in_cells(GriddedPermutation{Permutation{1, 2, 3}, inc, {1, 4}, {1, 4}});
  EXPECT_TRUE(c.changed);
  EXPECT_EQ(c.contracted.perm, Permutation{1});
  EXPECT_TRUE(c.contracted.valid());
  EXPECT_EQ(c.source_ranges, (std::vector<std::pair<int, int>>{{1, 3}}));
  // the run 43 of 524361 straddles two columns here
  const GriddedPermutation gp{Permutation::parse("524361"), x_matrix(), {1, 4, 7}, {1, 5, 7}};
  ASSERT_TRUE(gp.valid());
  EXPECT_FALSE(contract_in_cells(gp).changed);
  const GriddedPermutation moved{Permutation::parse("524361"), x_matrix(), {1, 5, 7}, {1, 3, 7}};
  ASSERT_TRUE(moved.valid());
  const auto m = contract_in_cells(moved);
  EXPECT_TRUE(m.changed);
  EXPECT_EQ(m.contracted.perm, Permutation::parse("42351"));
  EXPECT_EQ(m.source_ranges[2], (std::pair<int, int>{3, 4}));
}

TEST(SizeBound, Formula) {
  EXPECT_EQ(size_bound(x_matrix(), 3), (std::pair<int, int>{26, 26}));
  EXPECT_EQ(size_bound(testing::v_matrix(), 2), (std::pair<int, int>{1 * (1 + 2 * 2 * 2), 2 * (1 + 2 * 1 * 2)}));
}

TEST(Geometrize, MonotoneButNotGeometric) {
  const auto pi = Permutation::parse("3142");
  ASSERT_FALSE(geom_member(pi, x_matrix()));
  const auto r = geometrize(pi, x_matrix(), 3);
  EXPECT_EQ(r.result.perm, pi);
  EXPECT_TRUE(r.result.valid());
  EXPECT_TRUE(r.signs.valid());
  EXPECT_EQ(r.result.matrix, r.signs.matrix);
  EXPECT_EQ(read_back(r.realization.points, r.signs.matrix), r.result);
  EXPECT_TRUE(geom_member(pi, r.signs.matrix));
  EXPECT_TRUE(oracle::geom_member(pi, r.signs.matrix));
  const auto bound = size_bound(x_matrix(), r.lettering.alphabet.size());
  EXPECT_LE(r.signs.matrix.cols(), bound.first);
  EXPECT_LE(r.signs.matrix.rows(), bound.second);
  EXPECT_TRUE(check_isolation(r));
  EXPECT_TRUE(universal_member(r.result, r.signs, r.signs.matrix.cols(), r.signs.matrix.rows()));
  EXPECT_FALSE(universal_member(r.result, r.signs, r.signs.matrix.cols() - 1, r.signs.matrix.rows()));
}

TEST(Geometrize, Errors) {
  EXPECT_THROW(geometrize(Permutation::parse("2143"), x_matrix(), 3), std::invalid_argument);
  // the inversion graph of 3142 is P4, which needs two letters
  EXPECT_THROW(geometrize(Permutation::parse("3142"), x_matrix(), 1), std::invalid_argument);
  // runs inside one cell collapse first, so 2143 on the decreasing diagonal needs one
  const auto diag = GridMatrix::from_display({{0, -1}, {-1, 0}});
  EXPECT_EQ(geometrize(Permutation::parse("2143"), diag, 1).lettering.alphabet.size(), 1);
}

TEST(Geometrize, EmptyAndSingleton) {
  const auto e = geometrize(Permutation{}, x_matrix(), 1);
  EXPECT_EQ(e.result.perm.size(), 0);
  const auto one = geometrize(Permutation{1}, x_matrix(), 1);
  EXPECT_EQ(one.result.perm, Permutation{1});
  EXPECT_EQ(read_back(one.realization.points, one.signs.matrix), one.result);
}

TEST(Geometrize, EverySkewMergedPermutationUpToSix) {
  for (const auto& pi : testing::permutations_up_to(6)) {
    if (!is_skew_merged(pi)) continue;
    const auto r = geometrize(pi, x_matrix(), 6);
    ASSERT_EQ(r.result.perm, pi);
    EXPECT_TRUE(r.result.valid()) << pi.compact();
    EXPECT_EQ(read_back(r.realization.points, r.signs.matrix), r.result) << pi.compact();
    const auto bound = size_bound(x_matrix(), r.lettering.alphabet.size());
    EXPECT_LE(r.signs.matrix.cols(), bound.first);
    EXPECT_LE(r.signs.matrix.rows(), bound.second);
    EXPECT_TRUE(check_distinguish(r.contraction.contracted.perm, r.lettering)) << pi.compact();
    EXPECT_TRUE(check_separate_cells(r.contraction.contracted, r.lettering)) << pi.compact();
    EXPECT_TRUE(check_isolation(r)) << pi.compact();
    EXPECT_TRUE(universal_member(r.result, r.signs, r.signs.matrix.cols(), r.signs.matrix.rows())) << pi.compact();
  }
}

TEST(Geometrize, OtherMatrices) {
  const std::vector<GridMatrix> ms{testing::v_matrix(), testing::staircase_matrix(), testing::non_pmm_matrix()};
  for (const auto& m : ms)
    for (const auto& pi : testing::permutations_up_to(5)) {
      if (!find_gridding(pi, m)) continue;
      const auto r = geometrize(pi, m, 5);
      EXPECT_EQ(read_back(r.realization.points, r.signs.matrix), r.result) << pi.compact();
      EXPECT_TRUE(geom_member(pi, r.signs.matrix)) << pi.compact();
      EXPECT_TRUE(universal_member(r.result, r.signs, r.signs.matrix.cols(), r.signs.matrix.rows())) << pi.compact();
    }
}

TEST(Experiment, SmallRun) {
  const auto report = class_experiment(5, x_matrix(), 2, oracle::geom_member, 2);
  EXPECT_EQ(report.failures(), 0);
  EXPECT_EQ(report.considered, 1 + 2 + 6 + 24 + 120);
  EXPECT_EQ(report.bound_cols, 2 * (1 + 2 * 2 * 2));
  EXPECT_EQ(report.in_grid, static_cast<long>(report.rows.size()) + report.over_r);
  // shorter permutations first, then lexicographic
  for (std::size_t j = 1; j < report.rows.size(); ++j) {
    const auto& a = report.rows[j - 1].perm;
    const auto& b = report.rows[j].perm;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b)) << a.compact() << " " << b.compact();
  }
  const auto text = format_report(report);
  EXPECT_EQ(text.rfind("perm\t", 0), 0u);
  EXPECT_NE(text.find(", failures 0\n"), std::string::npos);
}

TEST(Experiment, ThreadCountDoesNotChangeTheReport) {
  const auto a = class_experiment(4, testing::v_matrix(), 2, geom_member, 1);
  const auto b = class_experiment(4, testing::v_matrix(), 2, geom_member, 3);
  EXPECT_EQ(format_report(a), format_report(b));
}

}  // namespace
}  // namespace lettergrid
