// Command-line front end: lettericity, grid-class membership, geometrization
// and SVG rendering.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lettergrid/error.hpp"
#include "lettergrid/geometry.hpp"
#include "lettergrid/gridding.hpp"
#include "lettergrid/letters.hpp"
#include "lettergrid/oracle.hpp"
#include "lettergrid/perm.hpp"
#include "lettergrid/pipeline.hpp"
#include "lettergrid/render.hpp"

namespace lg = lettergrid;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Thrown for unreadable or malformed inputs; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file name, or the text itself when no such file exists.
std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

lg::Permutation load_perm(const std::string& arg) {
  if (arg.empty()) throw InputError("--perm is required");
  return lg::Permutation::parse(file_or_inline(arg));
}

// Inline matrices separate rows with ';', e.g. "-1 1; 1 -1".
lg::GridMatrix load_matrix(const std::string& arg) {
  if (arg.empty()) throw InputError("--matrix is required");
  std::string text = file_or_inline(arg);
  for (char& c : text)
    if (c == ';') c = '\n';
  return lg::parse_matrix(text);
}

void write_svg(const std::string& path, const std::string& svg) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << svg;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << svg;
}

std::string divisions(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

std::string signs_line(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::string(v[i] > 0 ? "+" : "-");
  return s;
}

void print_gridding(const lg::GriddedPermutation& gp) {
  std::cout << "columns: " << divisions(gp.col_divs) << "\n";
  std::cout << "rows: " << divisions(gp.row_divs) << "\n";
}

void print_realization(const lg::Realization& r) {
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "point %zu: %.6f %.6f\n", i + 1, r.points[i].x, r.points[i].y);
    std::cout << buf;
  }
}

void print_letterization(const lg::Letterization& lz) {
  std::cout << "decoder:\n" << lg::format_decoder(lz.alphabet, lz.decoder);
  std::cout << "word: " << lg::format_word(lz.alphabet, lz.word) << "\n";
  std::cout << "iso:";
  for (int p : lz.iso) std::cout << ' ' << p;
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letter graphs and permutation grid classes"};
  app.require_subcommand(1);

  std::string perm_arg, matrix_arg, svg_path, out_path, graph_path, target_name;
  int k_max = 0, n_max = 0, letters = 0;
  unsigned threads = 0;
  bool verify = false, no_labels = false;
  double scale = 60;

  auto* c_lettericity = app.add_subcommand("lettericity", "Lettericity of a graph file, with a witness");
  c_lettericity->add_option("graph", graph_path, "Graph file: vertex count, then one edge per line")->required();
  c_lettericity->add_option("--k-max", k_max, "Give up above this many letters");

  auto* c_invgraph = app.add_subcommand("invgraph", "Inversion graph of a permutation in graph format");
  c_invgraph->add_option("--perm", perm_arg, "Permutation file or inline one-line notation")->required();

  auto* c_grid = app.add_subcommand("grid-check", "Monotone grid class membership");
  auto* c_geom = app.add_subcommand("geom-check", "Geometric grid class membership and a realization");
  auto* c_geometrize = app.add_subcommand("geometrize", "Geometric gridding built from a lettering");
  for (auto* c : {c_grid, c_geom, c_geometrize}) {
    c->add_option("--perm", perm_arg, "Permutation file or inline one-line notation")->required();
    c->add_option("--matrix", matrix_arg, "Matrix file (rows top first) or inline rows separated by ';'")
        ->required();
  }
  for (auto* c : {c_geom, c_geometrize}) {
    c->add_option("--svg", svg_path, "Write a drawing to this file ('-' for stdout)");
    c->add_option("--scale", scale, "Pixels per grid unit");
  }
  c_geometrize->add_option("--k-max", k_max, "Largest alphabet to try for the lettering")->required();

  auto* c_experiment = app.add_subcommand("experiment", "Geometrize a whole grid class up to a length");
  c_experiment->add_option("--n-max", n_max, "Largest permutation length")->required();
  c_experiment->add_option("--matrix", matrix_arg, "Matrix file or inline rows")->required();
  c_experiment->add_option("--letters", letters, "Lettericity cutoff r")->required();
  c_experiment->add_flag("--verify", verify, "Confirm membership with the brute-force checker");
  c_experiment->add_option("--out", out_path, "Write the report here instead of stdout");
  c_experiment->add_option("--threads", threads, "Worker threads (0: one per core)");

  auto* c_render = app.add_subcommand("render", "SVG of a figure, drawing, gridding or Hasse diagram");
  c_render->add_option("target", target_name, "figure | drawing | gridding | hasse")->required();
  c_render->add_option("--matrix", matrix_arg, "Matrix file or inline rows")->required();
  c_render->add_option("--perm", perm_arg, "Permutation (drawing, gridding, hasse)");
  c_render->add_option("--svg", svg_path, "Output file ('-' or omitted: stdout)");
  c_render->add_option("--scale", scale, "Pixels per grid unit");
  c_render->add_flag("--no-labels", no_labels, "Omit text labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*c_lettericity) {
      const auto g = lg::parse_graph(read_file(graph_path));
      auto lz = k_max > 0 ? lg::minimal_lettering(g, k_max) : lg::minimal_lettering(g, std::max(g.order(), 1));
      if (!lz) {
        std::cout << "lettericity exceeds " << k_max << "\n";
        return kNegative;
      }
      std::cout << lz->alphabet.size() << "\n";
      print_letterization(*lz);
      return kOk;
    }

    if (*c_invgraph) {
      std::cout << lg::format_graph(lg::inversion_graph(load_perm(perm_arg)));
      return kOk;
    }

    if (*c_grid) {
      const auto pi = load_perm(perm_arg);
      const auto m = load_matrix(matrix_arg);
      auto gp = lg::find_gridding(pi, m);
      if (!gp) {
        std::cout << "NOT a member\n";
        return kNegative;
      }
      std::cout << "member\n";
      print_gridding(*gp);
      return kOk;
    }

    if (*c_geom) {
      const auto pi = load_perm(perm_arg);
      const auto m = load_matrix(matrix_arg);
      auto w = lg::geom_witness(pi, m);
      if (!w) {
        std::cout << "NOT a member\n";
        return kNegative;
      }
      auto& [gp, signs] = *w;
      auto r = lg::realize(gp, signs);
      std::cout << "member\n";
      if (!(gp.matrix == m)) std::cout << "matrix (doubled):\n" << lg::format_matrix(gp.matrix);
      std::cout << "column signs: " << signs_line(signs.col_signs) << "\n";
      std::cout << "row signs: " << signs_line(signs.row_signs) << "\n";
      print_gridding(gp);
      print_realization(*r);
      write_svg(svg_path, lg::render({lg::RenderTarget::drawing, scale, true}, lg::Drawing{signs, *r}));
      return kOk;
    }

    if (*c_geometrize) {
      const auto pi = load_perm(perm_arg);
      const auto m = load_matrix(matrix_arg);
      lg::GeometrizeResult res;
      try {
        res = lg::geometrize(pi, m, k_max);
      } catch (const std::invalid_argument& e) {
        std::cout << "failed: " << e.what() << "\n";
        return kNegative;
      }
      if (res.contraction.changed) {
        std::cout << "contracted to " << res.contraction.contracted.perm.compact() << "\n";
      }
      std::cout << "letters: " << res.lettering.alphabet.size() << " (refined " << res.refined.letters.size()
                << ")\n";
      std::cout << "matrix " << res.signs.matrix.cols() << "x" << res.signs.matrix.rows() << ":\n"
                << lg::format_matrix(res.signs.matrix);
      std::cout << "column signs: " << signs_line(res.signs.col_signs) << "\n";
      std::cout << "row signs: " << signs_line(res.signs.row_signs) << "\n";
      print_gridding(res.result);
      print_realization(res.realization);
      write_svg(svg_path, lg::render({lg::RenderTarget::drawing, scale, true}, lg::Drawing{res.signs, res.realization}));
      return kOk;
    }

    if (*c_experiment) {
      const auto m = load_matrix(matrix_arg);
      lg::MembershipCheck check = verify ? lg::MembershipCheck(lg::oracle::geom_member)
                                         : lg::MembershipCheck([](const lg::Permutation& p, const lg::GridMatrix& g) {
                                             return lg::geom_member(p, g);
                                           });
      const auto report = lg::class_experiment(n_max, m, letters, check, threads);
      const std::string text = lg::format_report(report);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write '" + out_path + "'");
        out << text;
      }
      return report.failures() == 0 ? kOk : kNegative;
    }

    if (*c_render) {
      const lg::RenderSpec spec{lg::parse_render_target(target_name), scale, !no_labels};
      const auto m = load_matrix(matrix_arg);
      lg::Renderable object = m;
      if (spec.target != lg::RenderTarget::figure) {
        const auto pi = load_perm(perm_arg);
        if (spec.target == lg::RenderTarget::gridding) {
          auto gp = lg::find_gridding(pi, m);
          if (!gp) {
            std::cerr << "permutation is not in the monotone grid class\n";
            return kNegative;
          }
          object = *gp;
        } else {
          auto w = lg::geom_witness(pi, m);
          if (!w) {
            std::cerr << "permutation is not in the geometric grid class\n";
            return kNegative;
          }
          if (spec.target == lg::RenderTarget::drawing) {
            object = lg::Drawing{w->second, *lg::realize(w->first, w->second)};
          } else {
            object = lg::HasseInput{lg::local_orders(w->first, w->second), pi.size()};
          }
        }
      }
      const std::string svg = lg::render(spec, object);
      write_svg(svg_path.empty() ? "-" : svg_path, svg);
      return kOk;
    }
  } catch (const lg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return kOk;
}
