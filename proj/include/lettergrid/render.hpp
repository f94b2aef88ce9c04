#pragma once

#include <string>
#include <variant>

#include "lettergrid/geometry.hpp"
#include "lettergrid/gridding.hpp"

namespace lettergrid {

enum class RenderTarget { figure, drawing, gridding, hasse };

struct RenderSpec {
  RenderTarget target = RenderTarget::figure;
  double scale = 60;  // pixels per unit, > 0
  bool labels = true;
};

/// Points of a realization on the standard figure, with sign arrows.
struct Drawing {
  SignedMatrix signs;
  Realization realization;
};

/// Local orders of n positions; drawn as the Hasse diagram of their union.
struct HasseInput {
  LocalOrders orders;
  int n = 0;
};

using Renderable = std::variant<GridMatrix, Drawing, GriddedPermutation, HasseInput>;

/// SVG document using only line, circle, text and path elements. Throws
/// std::invalid_argument when the object does not match spec.target, the
/// scale is not positive, or Hasse input is cyclic.
std::string render(const RenderSpec& spec, const Renderable& object);

/// Parses "figure", "drawing", "gridding" or "hasse".
RenderTarget parse_render_target(std::string_view name);

}  // namespace lettergrid
