#include "lettergrid/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lettergrid {

bool separated(const Permutation& pi, int i, int j) {
  const int lo_pos = std::min(i, j), hi_pos = std::max(i, j);
  const int lo_val = std::min(pi(i), pi(j)), hi_val = std::max(pi(i), pi(j));
  for (int x = 1; x <= pi.size(); ++x) {
    if (x == i || x == j) continue;
    const bool between_h = lo_pos < x && x < hi_pos;
    const bool between_v = lo_val < pi(x) && pi(x) < hi_val;
    if (between_h != between_v) return true;
  }
  return false;
}

bool distinguished(const SimpleGraph& g, int u, int v) {
  for (int w = 1; w <= g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(w, u) != g.adjacent(w, v)) return true;
  }
  return false;
}

namespace {

Letter letter_at(const std::vector<Letter>& word, const std::vector<int>& iso, int i) {
  return word[iso[i - 1] - 1];
}

}  // namespace

RefinedLetterization reletter(const Letterization& lz, const Alphabet& original_alphabet,
                              const GriddedPermutation& gp) {
  const int n = gp.perm.size();
  if (!verify_letterization(inversion_graph(gp.perm), lz)) {
    throw std::invalid_argument("lettering does not represent the inversion graph");
  }
  std::set<RefinedLetter> used;
  for (int i = 1; i <= n; ++i) used.insert({letter_at(lz.word, lz.iso, i), gp.cell_of(i)});
  RefinedLetterization r;
  r.letters.assign(used.begin(), used.end());
  std::vector<std::string> symbols;
  for (const auto& x : r.letters) {
    symbols.push_back(original_alphabet.symbol(x.letter) + "@" + std::to_string(x.cell.first) + "." +
                      std::to_string(x.cell.second));
  }
  r.alphabet = Alphabet(std::move(symbols));
  const int size = static_cast<int>(r.letters.size());
  r.decoder = Decoder(size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      if (lz.decoder.contains(r.letters[x].letter, r.letters[y].letter)) r.decoder.insert(x, y);
  r.word.assign(n, 0);
  r.iso = lz.iso;
  for (int i = 1; i <= n; ++i) {
    const RefinedLetter key{letter_at(lz.word, lz.iso, i), gp.cell_of(i)};
    r.word[lz.iso[i - 1] - 1] =
        static_cast<Letter>(std::lower_bound(r.letters.begin(), r.letters.end(), key) - r.letters.begin());
  }
  return r;
}

std::vector<int> entries_of(const RefinedLetterization& rlz, Letter x) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(rlz.iso.size()); ++i)
    if (letter_at(rlz.word, rlz.iso, i) == x) out.push_back(i);
  return out;
}

std::vector<ReadingOrder> reading_orders(const RefinedLetterization& rlz, const GriddedPermutation& gp) {
  std::vector<ReadingOrder> out;
  for (int x = 0; x < static_cast<int>(rlz.letters.size()); ++x) {
    auto [k, l] = rlz.letters[x].cell;
    const int sign = gp.matrix.at(k, l);
    auto entries = entries_of(rlz, x);
    ReadingOrder ro;
    if (entries.size() < 2) {
      ro.left_to_right = true;
      ro.bottom_to_top = sign == 1;
      out.push_back(ro);
      continue;
    }
    std::sort(entries.begin(), entries.end(), [&](int a, int b) { return rlz.iso[a - 1] < rlz.iso[b - 1]; });
    bool inc_pos = true, dec_pos = true, inc_val = true, dec_val = true;
    for (std::size_t j = 0; j + 1 < entries.size(); ++j) {
      (entries[j] < entries[j + 1] ? dec_pos : inc_pos) = false;
      (gp.perm(entries[j]) < gp.perm(entries[j + 1]) ? dec_val : inc_val) = false;
    }
    if (!(inc_pos || dec_pos) || !(inc_val || dec_val)) {
      throw std::logic_error("letter " + rlz.alphabet.symbol(x) + " is not read monotonically");
    }
    ro.left_to_right = inc_pos;
    ro.bottom_to_top = inc_val;
    if ((ro.left_to_right == ro.bottom_to_top) != (sign == 1)) {
      throw std::logic_error("reading order of " + rlz.alphabet.symbol(x) + " disagrees with its cell");
    }
    out.push_back(ro);
  }
  return out;
}

Regridding regrid(const GriddedPermutation& gp, const RefinedLetterization& rlz) {
  const int n = gp.perm.size();
  Regridding out;
  std::vector<int> xs = gp.col_divs, ys = gp.row_divs;
  for (int x = 0; x < static_cast<int>(rlz.letters.size()); ++x) {
    HullRectangle h{n + 1, 0, n + 1, 0};
    for (int i : entries_of(rlz, x)) {
      h.x_min = std::min(h.x_min, i);
      h.x_max = std::max(h.x_max, i);
      h.y_min = std::min(h.y_min, gp.perm(i));
      h.y_max = std::max(h.y_max, gp.perm(i));
    }
    out.hulls.push_back(h);
    xs.push_back(h.x_min);
    xs.push_back(h.x_max + 1);
    ys.push_back(h.y_min);
    ys.push_back(h.y_max + 1);
  }
  out.raw_cols = static_cast<int>(xs.size()) - 1;
  out.raw_rows = static_cast<int>(ys.size()) - 1;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  GridMatrix m(static_cast<int>(xs.size()) - 1, static_cast<int>(ys.size()) - 1);
  out.gridding = GriddedPermutation{gp.perm, m, xs, ys};
  for (int i = 1; i <= n; ++i) {
    auto [k, l] = out.gridding.cell_of(i);
    auto [k0, l0] = gp.cell_of(i);
    out.gridding.matrix.set(k, l, gp.matrix.at(k0, l0));
  }
  return out;
}

SignedMatrix assign_signs(const GriddedPermutation& regridded, const RefinedLetterization& rlz,
                          const std::vector<ReadingOrder>& ro) {
  const int t = regridded.matrix.cols();
  const int u = regridded.matrix.rows();
  SignedMatrix s{GridMatrix(t, u), std::vector<int>(t, 0), std::vector<int>(u, 0)};
  for (int i = 1; i <= regridded.perm.size(); ++i) {
    auto [k, l] = regridded.cell_of(i);
    const ReadingOrder& o = ro.at(letter_at(rlz.word, rlz.iso, i));
    const int c = o.left_to_right ? 1 : -1;
    const int r = o.bottom_to_top ? 1 : -1;
    if (s.col_signs[k - 1] == 0) s.col_signs[k - 1] = c;
    if (s.row_signs[l - 1] == 0) s.row_signs[l - 1] = r;
    if (s.col_signs[k - 1] != c) throw std::logic_error("conflicting horizontal reading orders in column " + std::to_string(k));
    if (s.row_signs[l - 1] != r) throw std::logic_error("conflicting vertical reading orders in row " + std::to_string(l));
  }
  for (int& c : s.col_signs)
    if (c == 0) throw std::logic_error("regridded permutation has an empty column");
  for (int& r : s.row_signs)
    if (r == 0) throw std::logic_error("regridded permutation has an empty row");
  for (int k = 1; k <= t; ++k) {
    for (int l = 1; l <= u; ++l) {
      const int e = s.col_signs[k - 1] * s.row_signs[l - 1];
      const int occupied = regridded.matrix.at(k, l);
      if (occupied != 0 && occupied != e) {
        throw std::logic_error("cell sign disagrees with the reading orders");
      }
      s.matrix.set(k, l, e);
    }
  }
  return s;
}

CellContraction contract_in_cells(const GriddedPermutation& gp) {
  const Permutation& pi = gp.perm;
  const int n = pi.size();
  CellContraction out;
  std::vector<int> reps;
  for (int i = 1; i <= n;) {
    int j = i;
    if (i < n) {
      const int step = pi(i + 1) - pi(i);
      if (step == 1 || step == -1) {
        while (j < n && pi(j + 1) - pi(j) == step && gp.cell_of(j + 1) == gp.cell_of(i)) ++j;
      }
    }
    out.source_ranges.emplace_back(i, j);
    reps.push_back(pi(i));
    if (j > i) out.changed = true;
    i = j + 1;
  }
  Permutation sigma = standardize(reps);
  GriddedPermutation c{sigma, gp.matrix, gp.col_divs, gp.row_divs};
  for (std::size_t k = 0; k < gp.col_divs.size(); ++k) {
    int before = 0;
    for (auto [a, b] : out.source_ranges) before += a < gp.col_divs[k];
    c.col_divs[k] = before + 1;
  }
  for (std::size_t l = 0; l < gp.row_divs.size(); ++l) {
    int below = 0;
    for (int v : reps) below += v < gp.row_divs[l];
    c.row_divs[l] = below + 1;
  }
  out.contracted = std::move(c);
  return out;
}

std::pair<int, int> size_bound(const GridMatrix& m, int r) {
  const int t = m.cols(), u = m.rows();
  return {t * (1 + 2 * u * r), u * (1 + 2 * t * r)};
}

GeometrizeResult geometrize(const Permutation& pi, const GridMatrix& m, int k_max) {
  GeometrizeResult res;
  auto original = find_gridding(pi, m);
  if (!original) throw std::invalid_argument("permutation " + pi.compact() + " is not in the monotone grid class");
  res.original = *original;
  if (pi.empty()) {
    res.contraction.contracted = res.original;
    res.signs = SignedMatrix{GridMatrix(0, 0), {}, {}};
    res.regridded.gridding = GriddedPermutation{pi, GridMatrix(0, 0), {1}, {1}};
    res.contracted_result = res.regridded.gridding;
    res.result = res.regridded.gridding;
    return res;
  }
  res.contraction = contract_in_cells(res.original);
  const GriddedPermutation& sharp = res.contraction.contracted;
  auto lz = minimal_lettering(inversion_graph(sharp.perm), k_max);
  if (!lz) throw std::invalid_argument("no lettering with at most " + std::to_string(k_max) + " letters");
  res.lettering = *lz;
  res.refined = reletter(res.lettering, res.lettering.alphabet, sharp);
  res.reading = reading_orders(res.refined, sharp);
  res.regridded = regrid(sharp, res.refined);
  res.signs = assign_signs(res.regridded.gridding, res.refined, res.reading);

  res.contracted_result = res.regridded.gridding;
  res.contracted_result.matrix = res.signs.matrix;
  if (!res.contracted_result.valid()) throw std::logic_error("regridded permutation is not a valid gridding");
  if (!consistency(local_orders(res.contracted_result, res.signs), sharp.perm.size())) {
    throw std::logic_error("local orders of the regridded permutation are inconsistent");
  }

  // Put the collapsed runs back: a division in front of contracted entry p
  // sits in front of the first entry of its block.
  const int n = pi.size();
  const int ns = sharp.perm.size();
  const auto& ranges = res.contraction.source_ranges;
  const auto sigma_inv = sharp.perm.inverse();
  auto map_col = [&](int d) { return d == ns + 1 ? n + 1 : ranges[d - 1].first; };
  auto map_row = [&](int d) {
    if (d == ns + 1) return n + 1;
    auto [a, b] = ranges[sigma_inv(d) - 1];
    return std::min(pi(a), pi(b));
  };
  res.result = GriddedPermutation{pi, res.signs.matrix, {}, {}};
  for (int d : res.contracted_result.col_divs) res.result.col_divs.push_back(map_col(d));
  for (int d : res.contracted_result.row_divs) res.result.row_divs.push_back(map_row(d));
  if (!res.result.valid()) throw std::logic_error("re-inflated gridding is not valid");
  auto realization = realize(res.result, res.signs);
  if (!realization) throw std::logic_error("re-inflated gridding has inconsistent local orders");
  if (!(read_back(realization->points, res.signs.matrix) == res.result)) {
    throw std::logic_error("realization does not read back to the gridding");
  }
  res.realization = std::move(*realization);
  return res;
}

bool check_distinguish(const Permutation& pi, const Letterization& lz) {
  const int n = pi.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (letter_at(lz.word, lz.iso, a) != letter_at(lz.word, lz.iso, b)) continue;
      const int lo = std::min(lz.iso[a - 1], lz.iso[b - 1]);
      const int hi = std::max(lz.iso[a - 1], lz.iso[b - 1]);
      for (int x = 1; x <= n; ++x) {
        if (x == a || x == b) continue;
        const bool between_h = std::min(a, b) < x && x < std::max(a, b);
        const bool between_v = std::min(pi(a), pi(b)) < pi(x) && pi(x) < std::max(pi(a), pi(b));
        if (between_h == between_v) continue;
        if (!(lo < lz.iso[x - 1] && lz.iso[x - 1] < hi)) return false;
      }
    }
  }
  return true;
}

bool check_separate_cells(const GriddedPermutation& gp, const Letterization& lz) {
  const int n = gp.perm.size();
  const auto inv = gp.perm.inverse();
  for (int pass = 0; pass < 2; ++pass) {
    // pass 0 reads entries by position, pass 1 by value
    auto at = [&](int j) { return pass == 0 ? j : inv(j); };
    for (int j1 = 1; j1 <= n; ++j1)
      for (int j2 = j1 + 1; j2 <= n; ++j2)
        for (int j3 = j2 + 1; j3 <= n; ++j3)
          for (int j4 = j3 + 1; j4 <= n; ++j4) {
            const int i1 = at(j1), i2 = at(j2), i3 = at(j3), i4 = at(j4);
            auto same = [&](int a, int b) {
              return letter_at(lz.word, lz.iso, a) == letter_at(lz.word, lz.iso, b) && gp.cell_of(a) == gp.cell_of(b);
            };
            if (!same(i1, i3) || !same(i2, i4) || gp.cell_of(i1) == gp.cell_of(i2)) continue;
            const int p1 = lz.iso[i1 - 1], p2 = lz.iso[i2 - 1], p3 = lz.iso[i3 - 1], p4 = lz.iso[i4 - 1];
            if (!((p1 < p2 && p2 < p3 && p3 < p4) || (p1 > p2 && p2 > p3 && p3 > p4))) return false;
          }
  }
  return true;
}

bool check_isolation(const GeometrizeResult& r) {
  const GriddedPermutation& g = r.regridded.gridding;
  for (int x = 0; x < static_cast<int>(r.refined.letters.size()); ++x) {
    auto entries = entries_of(r.refined, x);
    if (entries.size() != 1) continue;
    auto [k, l] = g.cell_of(entries[0]);
    for (int i = 1; i <= g.perm.size(); ++i) {
      if (i == entries[0]) continue;
      auto [k2, l2] = g.cell_of(i);
      if (k2 == k || l2 == l) return false;
    }
  }
  return true;
}

bool universal_member(const GriddedPermutation& gp, const SignedMatrix& signs, int t, int u) {
  const int cols = gp.matrix.cols(), rows = gp.matrix.rows();
  if (cols > t || rows > u || !signs.valid() || !(gp.matrix == signs.matrix)) return false;
  if (gp.perm.empty()) return true;
  const GridMatrix s = universal_matrix(t, u);
  SignedMatrix ss{s, {}, {}};
  for (int j = 1; j <= 2 * t; ++j) ss.col_signs.push_back(j % 2 == 1 ? 1 : -1);
  for (int l = 1; l <= 2 * u; ++l) ss.row_signs.push_back(l % 2 == 0 ? 1 : -1);
  // Column k goes to the column of its pair with the same sign.
  std::vector<int> col_size(2 * t + 1, 0), row_size(2 * u + 1, 0);
  for (int k = 1; k <= cols; ++k) {
    col_size[2 * (k - 1) + (signs.col_signs[k - 1] == 1 ? 1 : 2)] = gp.col_divs[k] - gp.col_divs[k - 1];
  }
  for (int l = 1; l <= rows; ++l) {
    row_size[2 * (l - 1) + (signs.row_signs[l - 1] == 1 ? 2 : 1)] = gp.row_divs[l] - gp.row_divs[l - 1];
  }
  GriddedPermutation e{gp.perm, s, std::vector<int>(2 * t + 1, 1), std::vector<int>(2 * u + 1, 1)};
  for (int j = 1; j <= 2 * t; ++j) e.col_divs[j] = e.col_divs[j - 1] + col_size[j];
  for (int l = 1; l <= 2 * u; ++l) e.row_divs[l] = e.row_divs[l - 1] + row_size[l];
  if (!ss.valid() || !e.valid()) return false;
  return consistency(local_orders(e, ss), gp.perm.size()).has_value();
}

long ExperimentReport::failures() const {
  return std::count_if(rows.begin(), rows.end(), [](const ExperimentRow& r) { return !r.passed(); });
}

ExperimentReport class_experiment(int n_max, const GridMatrix& m, int r, const MembershipCheck& verify,
                                  unsigned threads) {
  ExperimentReport report;
  report.n_max = n_max;
  report.r = r;
  report.matrix = m;
  std::tie(report.bound_cols, report.bound_rows) = size_bound(m, r);

  std::vector<Permutation> todo;
  for (int n = 1; n <= n_max; ++n) {
    for (auto& p : all_permutations(n)) todo.push_back(std::move(p));
  }
  report.considered = static_cast<long>(todo.size());

  std::mutex mu;
  std::map<std::uint64_t, int> letters_needed;  // 0: more than r
  std::atomic<std::size_t> next{0};
  std::atomic<long> in_grid{0}, over_r{0};

  auto lettericity_at_most_r = [&](const SimpleGraph& g) {
    const auto key = canonical_code(g);
    {
      std::lock_guard lock(mu);
      if (auto it = letters_needed.find(key); it != letters_needed.end()) return it->second;
    }
    auto lz = minimal_lettering(g, r);
    const int k = lz ? std::max<int>(lz->alphabet.size(), 1) : 0;
    std::lock_guard lock(mu);
    letters_needed.emplace(key, k);
    return k;
  };

  auto work = [&]() {
    for (std::size_t idx = next++; idx < todo.size(); idx = next++) {
      const Permutation& pi = todo[idx];
      if (!find_gridding(pi, m)) continue;
      ++in_grid;
      const int k = lettericity_at_most_r(inversion_graph(pi));
      if (k == 0) {
        ++over_r;
        continue;
      }
      ExperimentRow row;
      row.perm = pi;
      row.lettericity = k;
      try {
        const auto res = geometrize(pi, m, r);
        row.geometrized = true;
        row.cols = res.signs.matrix.cols();
        row.rows = res.signs.matrix.rows();
        row.bound_ok = res.regridded.raw_cols <= report.bound_cols && res.regridded.raw_rows <= report.bound_rows &&
                       row.cols <= report.bound_cols && row.rows <= report.bound_rows;
        row.realized_ok = read_back(res.realization.points, res.signs.matrix) == res.result;
        row.member_ok = verify(pi, res.signs.matrix);
        row.universal_ok = universal_member(res.result, res.signs, report.bound_cols, report.bound_rows);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      std::lock_guard lock(mu);
      report.rows.push_back(std::move(row));
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  report.in_grid = in_grid;
  report.over_r = over_r;
  std::sort(report.rows.begin(), report.rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return a.perm.size() != b.perm.size() ? a.perm.size() < b.perm.size() : a.perm < b.perm;
  });
  return report;
}

std::string format_report(const ExperimentReport& report) {
  std::ostringstream out;
  out << "perm\tletters\tcols\trows\tgeometrized\tbound\trealized\tmember\tuniversal\terror\n";
  for (const auto& row : report.rows) {
    out << row.perm.compact() << '\t' << row.lettericity << '\t' << row.cols << '\t' << row.rows << '\t'
        << row.geometrized << '\t' << row.bound_ok << '\t' << row.realized_ok << '\t' << row.member_ok << '\t'
        << row.universal_ok << '\t' << row.error << '\n';
  }
  int max_cols = 0, max_rows = 0;
  for (const auto& row : report.rows) {
    max_cols = std::max(max_cols, row.cols);
    max_rows = std::max(max_rows, row.rows);
  }
  out << "# matrix " << report.matrix.cols() << "x" << report.matrix.rows() << ", n <= " << report.n_max
      << ", r = " << report.r << "\n";
  out << "# size bound " << report.bound_cols << "x" << report.bound_rows << ", largest seen " << max_cols << "x"
      << max_rows << "\n";
  out << "# permutations " << report.considered << ", in grid class " << report.in_grid << ", over r "
      << report.over_r << ", processed " << report.rows.size() << ", failures " << report.failures() << "\n";
  return out.str();
}

}  // namespace lettergrid
