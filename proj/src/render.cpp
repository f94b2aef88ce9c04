#include "lettergrid/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lettergrid/error.hpp"

namespace lettergrid {

namespace {

constexpr double kMargin = 24;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

// Maps grid units to pixels with the y axis pointing up.
class Canvas {
 public:
  Canvas(double width_units, double height_units, double scale)
      : w_(width_units), h_(height_units), scale_(scale) {}

  double px(double x) const { return kMargin + x * scale_; }
  double py(double y) const { return kMargin + (h_ - y) * scale_; }

  void line(double x0, double y0, double x1, double y1, const std::string& cls) {
    body_ += "  <line class=\"" + cls + "\" " + stroke(cls) + " x1=\"" + num(px(x0)) + "\" y1=\"" + num(py(y0)) + "\" x2=\"" +
             num(px(x1)) + "\" y2=\"" + num(py(y1)) + "\"/>\n";
  }
  void circle(double x, double y, double r, const std::string& cls) {
    body_ += "  <circle class=\"" + cls + "\" fill=\"black\" cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" + num(r) +
             "\"/>\n";
  }
  void text(double x, double y, const std::string& s, double dx = 0, double dy = 0) {
    body_ += "  <text font-family=\"sans-serif\" font-size=\"11\" x=\"" + num(px(x) + dx) + "\" y=\"" + num(py(y) + dy) + "\">" + s + "</text>\n";
  }
  // Arrow from (x0, y0) to (x1, y1) in grid units, head included in the path.
  void arrow(double x0, double y0, double x1, double y1) {
    const double ax = px(x0), ay = py(y0), bx = px(x1), by = py(y1);
    const double dx = bx - ax, dy = by - ay;
    const double len = std::max(1e-9, std::hypot(dx, dy));
    const double ux = dx / len, uy = dy / len;
    const double head = 6;
    const double lx = bx - head * ux - head * 0.5 * uy, ly = by - head * uy + head * 0.5 * ux;
    const double rx = bx - head * ux + head * 0.5 * uy, ry = by - head * uy - head * 0.5 * ux;
    body_ += "  <path class=\"arrow\" stroke=\"black\" fill=\"none\" d=\"M " + num(ax) + " " + num(ay) + " L " + num(bx) + " " + num(by) + " M " +
             num(lx) + " " + num(ly) + " L " + num(bx) + " " + num(by) + " L " + num(rx) + " " + num(ry) + "\"/>\n";
  }

  std::string finish() const {
    const std::string width = num(2 * kMargin + w_ * scale_);
    const std::string height = num(2 * kMargin + h_ * scale_);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + width + "\" height=\"" + height +
           "\" viewBox=\"0 0 " + width + " " + height + "\">\n" + body_ + "</svg>\n";
  }

 private:
  static std::string stroke(const std::string& cls) {
    if (cls == "grid") return "stroke=\"#bbbbbb\"";
    if (cls == "division") return "stroke=\"#888888\" stroke-dasharray=\"4 3\"";
    return "stroke=\"black\" stroke-width=\"1.5\"";
  }

  double w_, h_, scale_;
  std::string body_;
};

void draw_grid(Canvas& c, const GridMatrix& m) {
  for (int k = 0; k <= m.cols(); ++k) c.line(k, 0, k, m.rows(), "grid");
  for (int l = 0; l <= m.rows(); ++l) c.line(0, l, m.cols(), l, "grid");
  for (const auto& s : standard_figure(m)) c.line(s.x0, s.y0, s.x1, s.y1, "segment");
}

}  // namespace

RenderTarget parse_render_target(std::string_view name) {
  if (name == "figure") return RenderTarget::figure;
  if (name == "drawing") return RenderTarget::drawing;
  if (name == "gridding") return RenderTarget::gridding;
  if (name == "hasse") return RenderTarget::hasse;
  throw ParseError("unknown render target '" + std::string(name) + "'");
}

std::string render(const RenderSpec& spec, const Renderable& object) {
  if (!(spec.scale > 0)) throw std::invalid_argument("render scale must be positive");
  const RenderTarget kind = static_cast<RenderTarget>(object.index());
  if (kind != spec.target) throw std::invalid_argument("object does not match the render target");

  if (auto m = std::get_if<GridMatrix>(&object)) {
    Canvas c(m->cols(), m->rows(), spec.scale);
    draw_grid(c, *m);
    return c.finish();
  }

  if (auto d = std::get_if<Drawing>(&object)) {
    const GridMatrix& m = d->signs.matrix;
    Canvas c(m.cols(), m.rows() + 0.5, spec.scale);
    draw_grid(c, m);
    for (int k = 1; k <= m.cols(); ++k) {
      const bool right = d->signs.col_signs[k - 1] == 1;
      c.arrow(right ? k - 0.7 : k - 0.3, m.rows() + 0.25, right ? k - 0.3 : k - 0.7, m.rows() + 0.25);
    }
    for (int l = 1; l <= m.rows(); ++l) {
      const bool up = d->signs.row_signs[l - 1] == 1;
      c.arrow(-0.2, up ? l - 0.7 : l - 0.3, -0.2, up ? l - 0.3 : l - 0.7);
    }
    const auto& pts = d->realization.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      c.circle(pts[i].x, pts[i].y, 3.5, "point");
      if (spec.labels) c.text(pts[i].x, pts[i].y, std::to_string(i + 1), 5, -5);
    }
    return c.finish();
  }

  if (auto g = std::get_if<GriddedPermutation>(&object)) {
    const int n = g->perm.size();
    const double unit = 1.0 / 3;  // one entry takes a third of a grid unit
    Canvas c(n * unit, n * unit, spec.scale);
    c.line(0, 0, n * unit, 0, "grid");
    c.line(0, n * unit, n * unit, n * unit, "grid");
    c.line(0, 0, 0, n * unit, "grid");
    c.line(n * unit, 0, n * unit, n * unit, "grid");
    for (std::size_t k = 1; k + 1 < g->col_divs.size(); ++k) {
      const double x = (g->col_divs[k] - 1) * unit;
      c.line(x, 0, x, n * unit, "division");
    }
    for (std::size_t l = 1; l + 1 < g->row_divs.size(); ++l) {
      const double y = (g->row_divs[l] - 1) * unit;
      c.line(0, y, n * unit, y, "division");
    }
    for (int i = 1; i <= n; ++i) {
      c.circle((i - 0.5) * unit, (g->perm(i) - 0.5) * unit, 3.5, "point");
      if (spec.labels) c.text((i - 0.5) * unit, (g->perm(i) - 0.5) * unit, std::to_string(g->perm(i)), 5, -5);
    }
    return c.finish();
  }

  const auto& h = std::get<HasseInput>(object);
  const int n = h.n;
  // Reachability of the union of all chains, then its transitive reduction.
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(n + 1, false));
  for (const auto* chains : {&h.orders.column_orders, &h.orders.row_orders}) {
    for (const auto& chain : *chains)
      for (std::size_t j = 0; j + 1 < chain.size(); ++j) reach[chain[j]][chain[j + 1]] = true;
  }
  for (int m = 1; m <= n; ++m)
    for (int a = 1; a <= n; ++a)
      if (reach[a][m])
        for (int b = 1; b <= n; ++b)
          if (reach[m][b]) reach[a][b] = true;
  for (int a = 1; a <= n; ++a)
    if (reach[a][a]) throw std::invalid_argument("local orders are inconsistent; no Hasse diagram");
  std::vector<std::pair<int, int>> cover;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!reach[a][b]) continue;
      bool direct = true;
      for (int m = 1; m <= n && direct; ++m) direct = !(reach[a][m] && reach[m][b]);
      if (direct) cover.emplace_back(a, b);
    }
  // Layer = length of the longest chain below the element.
  std::vector<int> layer(n + 1, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto [a, b] : cover)
      if (layer[b] < layer[a] + 1) {
        layer[b] = layer[a] + 1;
        changed = true;
      }
  }
  const int layers = n == 0 ? 0 : *std::max_element(layer.begin() + 1, layer.end()) + 1;
  std::vector<std::vector<int>> by_layer(layers);
  for (int i = 1; i <= n; ++i) by_layer[layer[i]].push_back(i);
  std::size_t widest = 0;
  for (const auto& row : by_layer) widest = std::max(widest, row.size());
  std::vector<Point> at(n + 1);
  for (int L = 0; L < layers; ++L) {
    const auto& row = by_layer[L];
    const double offset = (static_cast<double>(widest) - row.size()) / 2;
    for (std::size_t j = 0; j < row.size(); ++j) at[row[j]] = {offset + j + 0.5, L + 0.5};
  }
  Canvas c(static_cast<double>(widest), layers, spec.scale);
  for (auto [a, b] : cover) c.line(at[a].x, at[a].y, at[b].x, at[b].y, "cover");
  for (int i = 1; i <= n; ++i) {
    c.circle(at[i].x, at[i].y, 4, "node");
    if (spec.labels) c.text(at[i].x, at[i].y, std::to_string(i), 6, -6);
  }
  return c.finish();
}

}  // namespace lettergrid
