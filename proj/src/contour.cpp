#include "deltares/contour.hpp"

#include "deltares/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>
#include <unordered_map>

namespace deltares {

void Window::validate() const {
  if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("window: need re_min < re_max and im_min < im_max");
  if (nx < 2 || ny < 2) throw DomainError("window: grid needs at least 2 x 2 nodes");
}

double Window::cell_diagonal() const { return std::hypot(dx(), dy()); }

bool Window::contains(cplx z) const {
  return z.real() >= re_min && z.real() <= re_max && z.imag() >= im_min && z.imag() <= im_max;
}

namespace {

struct Segment {
  std::size_t cell;
  long edge_a, edge_b;
  cplx a, b;
};

class Grid {
 public:
  Grid(const ModelParams& params, const Window& w, unsigned threads) : w_(w), values_(std::size_t(w.nx) * w.ny) {
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(w.ny)));
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
      pool.emplace_back([&, t] {
        for (int j = static_cast<int>(t); j < w_.ny; j += static_cast<int>(n)) {
          for (int i = 0; i < w_.nx; ++i) values_[index(i, j)] = residual(params, node(i, j));
        }
      });
    }
  }

  cplx node(int i, int j) const { return {w_.re_min + i * w_.dx(), w_.im_min + j * w_.dy()}; }
  const cplx& value(int i, int j) const { return values_[index(i, j)]; }
  std::size_t index(int i, int j) const { return std::size_t(j) * w_.nx + i; }

  // Horizontal edge (i,j)-(i+1,j) and vertical edge (i,j)-(i,j+1).
  long h_edge(int i, int j) const { return long(j) * (w_.nx - 1) + i; }
  long v_edge(int i, int j) const { return long(w_.nx - 1) * w_.ny + long(j) * w_.nx + i; }

 private:
  Window w_;
  std::vector<cplx> values_;
};

template <typename Field>
std::vector<Segment> march(const Grid& g, const Window& w, Field field) {
  std::vector<Segment> out;
  auto crossing = [&](int i0, int j0, int i1, int j1) {
    const double v0 = field(g.value(i0, j0));
    const double v1 = field(g.value(i1, j1));
    const double t = v0 / (v0 - v1);
    return g.node(i0, j0) + t * (g.node(i1, j1) - g.node(i0, j0));
  };
  for (int j = 0; j + 1 < w.ny; ++j) {
    for (int i = 0; i + 1 < w.nx; ++i) {
      // Corners counter-clockwise from bottom-left: (i,j), (i+1,j), (i+1,j+1), (i,j+1).
      const std::array<double, 4> v{field(g.value(i, j)), field(g.value(i + 1, j)), field(g.value(i + 1, j + 1)),
                                    field(g.value(i, j + 1))};
      int config = 0;
      for (int c = 0; c < 4; ++c) config |= (v[c] >= 0.0 ? 1 : 0) << c;
      if (config == 0 || config == 15) continue;

      // Edge e joins corner e and corner (e+1) % 4.
      auto edge_id = [&](int e) {
        switch (e) {
          case 0: return g.h_edge(i, j);
          case 1: return g.v_edge(i + 1, j);
          case 2: return g.h_edge(i, j + 1);
          default: return g.v_edge(i, j);
        }
      };
      auto edge_point = [&](int e) {
        switch (e) {
          case 0: return crossing(i, j, i + 1, j);
          case 1: return crossing(i + 1, j, i + 1, j + 1);
          case 2: return crossing(i, j + 1, i + 1, j + 1);
          default: return crossing(i, j, i, j + 1);
        }
      };
      const std::size_t cell = g.index(i, j);
      auto emit = [&](int e0, int e1) {
        out.push_back({cell, edge_id(e0), edge_id(e1), edge_point(e0), edge_point(e1)});
      };

      std::array<int, 4> cut{};
      int ncut = 0;
      for (int e = 0; e < 4; ++e) {
        if (((config >> e) & 1) != ((config >> ((e + 1) % 4)) & 1)) cut[ncut++] = e;
      }
      if (ncut == 2) {
        emit(cut[0], cut[1]);
      } else {
        // Saddle: the centre value decides which corners connect.
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        const bool centre_pos = centre >= 0.0;
        const bool corner0_pos = (config & 1) != 0;
        if (centre_pos == corner0_pos) {
          emit(0, 1);
          emit(2, 3);
        } else {
          emit(3, 0);
          emit(1, 2);
        }
      }
    }
  }
  return out;
}

std::vector<Polyline> chain(const std::vector<Segment>& segs) {
  std::unordered_map<long, std::array<long, 2>> by_edge;
  by_edge.reserve(segs.size() * 2);
  auto attach = [&](long edge, long s) {
    auto [it, inserted] = by_edge.try_emplace(edge, std::array<long, 2>{s, -1});
    if (!inserted) it->second[1] = s;
  };
  for (long s = 0; s < static_cast<long>(segs.size()); ++s) {
    attach(segs[s].edge_a, s);
    attach(segs[s].edge_b, s);
  }
  auto other = [&](long edge, long s) {
    const auto& pair = by_edge.at(edge);
    return pair[0] == s ? pair[1] : pair[0];
  };

  std::vector<char> used(segs.size(), 0);
  std::vector<Polyline> out;
  auto walk = [&](long start, long start_edge) {
    Polyline line;
    long s = start;
    long entry = start_edge;
    line.push_back(segs[s].edge_a == entry ? segs[s].a : segs[s].b);
    while (s >= 0 && !used[s]) {
      used[s] = 1;
      const bool forward = segs[s].edge_a == entry;
      const long exit = forward ? segs[s].edge_b : segs[s].edge_a;
      line.push_back(forward ? segs[s].b : segs[s].a);
      s = other(exit, s);
      entry = exit;
    }
    out.push_back(std::move(line));
  };
  // Open curves start at a boundary edge; the rest are closed loops.
  for (long s = 0; s < static_cast<long>(segs.size()); ++s) {
    if (used[s]) continue;
    if (other(segs[s].edge_a, s) < 0) walk(s, segs[s].edge_a);
    else if (other(segs[s].edge_b, s) < 0) walk(s, segs[s].edge_b);
  }
  for (long s = 0; s < static_cast<long>(segs.size()); ++s) {
    if (!used[s]) walk(s, segs[s].edge_a);
  }
  return out;
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

std::optional<cplx> segment_intersection(cplx p0, cplx p1, cplx q0, cplx q1) {
  const cplx r = p1 - p0;
  const cplx s = q1 - q0;
  const double denom = cross(r, s);
  if (denom == 0.0) return std::nullopt;
  const double t = cross(q0 - p0, s) / denom;
  const double u = cross(q0 - p0, r) / denom;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return p0 + t * r;
}

}  // namespace

ContourSet contour_scan(const ModelParams& params, const Window& window, unsigned threads) {
  params.validate();
  window.validate();
  const double guard = std::max(std::abs(window.im_min), std::abs(window.im_max)) / params.h;
  if (guard > 300.0) throw OverflowError("contour_scan: window exceeds the exponent guard |Im z|/h <= 300");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const Grid grid(params, window, threads);
  const auto re_segs = march(grid, window, [](cplx v) { return v.real(); });
  const auto im_segs = march(grid, window, [](cplx v) { return v.imag(); });

  ContourSet out;
  out.real_part_curves = chain(re_segs);
  out.imag_part_curves = chain(im_segs);

  // Segments never leave their cell, so crossings are found cell by cell.
  std::unordered_map<std::size_t, std::vector<std::size_t>> im_by_cell;
  for (std::size_t s = 0; s < im_segs.size(); ++s) im_by_cell[im_segs[s].cell].push_back(s);

  const double diag = window.cell_diagonal();
  const double b = params.barrier();
  const cplx i_unit(0.0, 1.0);
  for (const Segment& rs : re_segs) {
    auto it = im_by_cell.find(rs.cell);
    if (it == im_by_cell.end()) continue;
    for (std::size_t s : it->second) {
      const auto hit = segment_intersection(rs.a, rs.b, im_segs[s].a, im_segs[s].b);
      if (!hit) continue;
      cplx z = *hit;
      const cplx df = (2.0 * i_unit / params.h) * (b * std::exp(2.0 * i_unit * z / params.h) + 1.0);
      const cplx step = residual(params, z) / df;
      if (std::abs(step) <= diag) z -= step;
      const bool duplicate = std::any_of(out.intersections.begin(), out.intersections.end(),
                                         [&](cplx p) { return std::abs(p - z) < 0.5 * diag; });
      if (!duplicate) out.intersections.push_back(z);
    }
  }
  std::sort(out.intersections.begin(), out.intersections.end(),
            [](cplx a, cplx b2) { return a.real() < b2.real() || (a.real() == b2.real() && a.imag() < b2.imag()); });
  return out;
}

std::vector<Resonance> resonances_in_window(const ModelParams& params, const Window& window) {
  params.validate();
  window.validate();
  const double reach = std::max(std::abs(window.re_min), std::abs(window.re_max));
  const long k_hi = static_cast<long>(std::ceil(reach / (std::numbers::pi * params.h))) + 2;
  std::vector<Resonance> out;
  for (long k = -k_hi; k <= k_hi; ++k) {
    if (k == 0) continue;
    Resonance r = resonance_from_branch(params, k);
    if (window.contains(r.z_refined)) out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const Resonance& a, const Resonance& b) { return a.z_refined.real() < b.z_refined.real(); });
  return out;
}

MatchResult match_intersections(const std::vector<cplx>& intersections, const std::vector<Resonance>& resonances,
                                double tolerance) {
  MatchResult m;
  m.partner.assign(intersections.size(), MatchResult::npos);
  std::vector<char> taken(resonances.size(), 0);
  bool ok = intersections.size() == resonances.size();
  for (std::size_t i = 0; i < intersections.size(); ++i) {
    double best = 0.0;
    std::size_t best_j = MatchResult::npos;
    for (std::size_t j = 0; j < resonances.size(); ++j) {
      if (taken[j]) continue;
      const double d = std::abs(intersections[i] - resonances[j].z_refined);
      if (best_j == MatchResult::npos || d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == MatchResult::npos) {
      ok = false;
      continue;
    }
    taken[best_j] = 1;
    m.partner[i] = best_j;
    m.max_distance = std::max(m.max_distance, best);
    if (best > tolerance) ok = false;
  }
  m.complete = ok;
  return m;
}

}  // namespace deltares
