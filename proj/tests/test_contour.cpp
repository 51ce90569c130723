#include "deltares/contour.hpp"
#include "deltares/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace deltares;

namespace {

bool on_grid_line(double v, double lo, double step) {
  const double t = (v - lo) / step;
  return std::abs(t - std::round(t)) < 1e-6;
}

}  // namespace

TEST_CASE("window validation") {
  CHECK_THROWS_AS((Window{1.0, 0.0, -1.0, 0.0, 10, 10}.validate()), DomainError);
  CHECK_THROWS_AS((Window{0.0, 1.0, 0.0, 0.0, 10, 10}.validate()), DomainError);
  CHECK_THROWS_AS((Window{0.0, 1.0, -1.0, 0.0, 1, 10}.validate()), DomainError);
  const Window w{0.0, 1.0, -1.0, 0.0, 11, 11};
  CHECK(w.cell_diagonal() == doctest::Approx(std::sqrt(0.02)));
  CHECK(w.contains({0.5, -0.5}));
  CHECK_FALSE(w.contains({0.5, 0.5}));
}

TEST_CASE("upper half plane has no crossings") {
  const ModelParams p{0.1, 0.7, 0.3};
  const ContourSet cs = contour_scan(p, {0.2, 2.0, 0.1, 0.2, 400, 100});
  CHECK(cs.intersections.empty());
}

TEST_CASE("guard violation propagates") {
  CHECK_THROWS_AS(contour_scan({0.1, 0.7, 0.3}, {0.2, 2.0, -40.0, 0.0, 10, 10}), OverflowError);
}

TEST_CASE("crossings match branch resonances on a coarse grid") {
  for (double alpha : {0.7, 2.0}) {
    const ModelParams p{0.1, alpha, 0.3};
    const Window w{0.2, 2.0, alpha < 1.0 ? -0.25 : -0.05, 0.0, 400, 200};
    const ContourSet cs = contour_scan(p, w);
    const auto res = resonances_in_window(p, w);
    CHECK(res.size() == 6);
    const MatchResult m = match_intersections(cs.intersections, res, w.cell_diagonal());
    CHECK(m.complete);
    CHECK(m.max_distance < w.cell_diagonal());

    for (const auto& line : cs.real_part_curves) {
      for (cplx v : line) {
        CHECK((on_grid_line(v.real(), w.re_min, w.dx()) || on_grid_line(v.imag(), w.im_min, w.dy())));
      }
    }
    // Each crossing is close to a point where both parts vanish.
    for (cplx z : cs.intersections) CHECK(std::abs(residual(p, z)) < 1e-3 * residual_scale(p, z));
  }
}

TEST_CASE("vertices sit on sign-changing grid edges") {
  const ModelParams p{0.1, 0.7, 0.3};
  const Window w{0.2, 1.0, -0.2, 0.0, 81, 41};
  const ContourSet cs = contour_scan(p, w);
  REQUIRE(!cs.imag_part_curves.empty());
  for (const auto& line : cs.imag_part_curves) {
    for (cplx v : line) {
      const double ti = (v.real() - w.re_min) / w.dx();
      const double tj = (v.imag() - w.im_min) / w.dy();
      cplx a, b;
      if (std::abs(ti - std::round(ti)) < 1e-6) {
        const double x = w.re_min + std::round(ti) * w.dx();
        const double j0 = std::floor(tj + 1e-9);
        a = {x, w.im_min + j0 * w.dy()};
        b = {x, w.im_min + std::min(j0 + 1.0, double(w.ny - 1)) * w.dy()};
      } else {
        const double y = w.im_min + std::round(tj) * w.dy();
        const double i0 = std::floor(ti + 1e-9);
        a = {w.re_min + i0 * w.dx(), y};
        b = {w.re_min + std::min(i0 + 1.0, double(w.nx - 1)) * w.dx(), y};
      }
      const double fa = residual(p, a).imag();
      const double fb = residual(p, b).imag();
      CHECK(((fa >= 0.0) != (fb >= 0.0) || fa == 0.0 || fb == 0.0));
    }
  }
}

TEST_CASE("grid refinement moves crossings by less than a coarse cell") {
  const ModelParams p{0.1, 0.7, 0.3};
  const Window coarse{0.2, 2.0, -0.25, 0.0, 200, 100};
  Window fine = coarse;
  fine.nx = 400;
  fine.ny = 200;
  const auto a = contour_scan(p, coarse).intersections;
  const auto b = contour_scan(p, fine).intersections;
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < coarse.cell_diagonal());
}

TEST_CASE("output does not depend on the thread count") {
  const ModelParams p{0.1, 2.0, 0.3};
  const Window w{0.2, 2.0, -0.05, 0.0, 300, 120};
  const ContourSet one = contour_scan(p, w, 1);
  const ContourSet many = contour_scan(p, w, 7);
  CHECK(one.intersections == many.intersections);
  CHECK(one.real_part_curves == many.real_part_curves);
  CHECK(one.imag_part_curves == many.imag_part_curves);
}

TEST_CASE("match_intersections") {
  Resonance r1, r2;
  r1.z_refined = {1.0, -0.1};
  r2.z_refined = {2.0, -0.1};
  const std::vector<Resonance> res{r1, r2};
  auto m = match_intersections({{2.001, -0.1}, {1.0, -0.1}}, res, 0.01);
  CHECK(m.complete);
  CHECK(m.partner[0] == 1);
  CHECK(m.partner[1] == 0);
  m = match_intersections({{1.0, -0.1}}, res, 0.01);
  CHECK_FALSE(m.complete);
  m = match_intersections({{1.5, -0.1}, {2.0, -0.1}}, res, 0.01);
  CHECK_FALSE(m.complete);
}
