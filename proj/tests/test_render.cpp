#include "lettergrid/render.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "fixtures.hpp"
#include "lettergrid/error.hpp"

namespace lettergrid {
namespace {

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

std::set<std::string> element_names(const std::string& svg) {
  std::set<std::string> names;
  const std::regex tag("<([a-zA-Z]+)");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it)
    names.insert((*it)[1]);
  return names;
}

void expect_only_primitives(const std::string& svg) {
  EXPECT_EQ(svg.rfind("<svg ", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  for (const auto& name : element_names(svg))
    EXPECT_TRUE(name == "svg" || name == "line" || name == "circle" || name == "text" || name == "path") << name;
}

TEST(Render, FigureHasOneSegmentPerCell) {
  const auto svg = render({RenderTarget::figure}, testing::staircase_matrix());
  expect_only_primitives(svg);
  EXPECT_EQ(count(svg, "class=\"segment\""), 5);
  EXPECT_EQ(count(render({RenderTarget::figure}, GridMatrix(2, 2)), "class=\"segment\""), 0);
}

TEST(Render, DrawingOfStaircase) {
  const auto gp = testing::staircase_gridding();
  const auto signs = *pmm_signs(gp.matrix);
  const auto svg = render({RenderTarget::drawing}, Drawing{signs, *realize(gp, signs)});
  expect_only_primitives(svg);
  EXPECT_EQ(count(svg, "<circle"), 7);
  EXPECT_EQ(count(svg, "class=\"arrow\""), 5);
  EXPECT_EQ(count(svg, "<text"), 7);
  const auto bare = render({RenderTarget::drawing, 30, false}, Drawing{signs, *realize(gp, signs)});
  EXPECT_EQ(count(bare, "<text"), 0);
}

TEST(Render, Gridding) {
  const auto gp = testing::staircase_gridding();
  const auto svg = render({RenderTarget::gridding}, gp);
  expect_only_primitives(svg);
  EXPECT_EQ(count(svg, "<circle"), 7);
  EXPECT_EQ(count(svg, "class=\"division\""), 3);
}

TEST(Render, HasseOfStaircase) {
  const auto gp = testing::staircase_gridding();
  const auto lo = local_orders(gp, *pmm_signs(gp.matrix));
  const auto svg = render({RenderTarget::hasse}, HasseInput{lo, 7});
  expect_only_primitives(svg);
  EXPECT_EQ(count(svg, "<circle"), 7);
  // covers 4<1, 1<6, 7<6, 6<5, 6<2, 5<3; the chain relations 1<2, 4<3 and 7<5 are implied
  EXPECT_EQ(count(svg, "class=\"cover\""), 6);
  LocalOrders cyclic{{{1, 2}}, {{2, 1}}};
  EXPECT_THROW(render({RenderTarget::hasse}, HasseInput{cyclic, 2}), std::invalid_argument);
}

TEST(Render, Errors) {
  EXPECT_THROW(render({RenderTarget::drawing}, testing::x_matrix()), std::invalid_argument);
  EXPECT_THROW(render({RenderTarget::figure, 0}, testing::x_matrix()), std::invalid_argument);
  EXPECT_EQ(parse_render_target("hasse"), RenderTarget::hasse);
  EXPECT_THROW(parse_render_target("pie"), ParseError);
}

}  // namespace
}  // namespace lettergrid
