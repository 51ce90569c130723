#pragma once

#include "deltares/resonance.hpp"

#include <cstddef>
#include <vector>

namespace deltares {

/// Rectangular viewport of the complex z plane sampled on nx by ny nodes.
struct Window {
  double re_min = 0.2;
  double re_max = 2.0;
  double im_min = -0.25;
  double im_max = 0.0;
  int nx = 1600;
  int ny = 800;

  void validate() const;
  double dx() const { return (re_max - re_min) / (nx - 1); }
  double dy() const { return (im_max - im_min) / (ny - 1); }
  double cell_diagonal() const;
  bool contains(cplx z) const;
};

using Polyline = std::vector<cplx>;

struct ContourSet {
  std::vector<Polyline> real_part_curves;  ///< Re F = 0
  std::vector<Polyline> imag_part_curves;  ///< Im F = 0
  /// Crossings of the two families, each polished by one Newton step.
  std::vector<cplx> intersections;
};

/// Marching-squares extraction of the zero sets of Re F and Im F on the window
/// grid. Grid rows are evaluated in parallel; output is independent of the
/// thread count. Throws OverflowError if the window violates the exponent guard.
ContourSet contour_scan(const ModelParams& params, const Window& window, unsigned threads = 0);

/// Refined branch resonances whose z_refined lies in the closed window, ordered by Re z.
std::vector<Resonance> resonances_in_window(const ModelParams& params, const Window& window);

struct MatchResult {
  /// For each intersection, index of the matched resonance (or npos).
  std::vector<std::size_t> partner;
  double max_distance = 0.0;
  bool complete = false;  ///< bijection with every distance within tolerance

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Greedy nearest matching of intersections to resonances.
MatchResult match_intersections(const std::vector<cplx>& intersections,
                                const std::vector<Resonance>& resonances, double tolerance);

}  // namespace deltares
