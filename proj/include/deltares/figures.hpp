#pragma once

#include "deltares/asymptotics.hpp"
#include "deltares/contour.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace deltares {

enum class Format { csv, json };

/// Doubles are written with 17 significant digits so output is byte-stable.
std::string format_double(double v);

void write_resonances(std::ostream& os, const ModelParams& params, std::span<const Resonance> rows, Format f);
void write_report(std::ostream& os, const CertifyReport& report, Format f);
void write_contours(std::ostream& os, const ContourSet& contours);

/// Lambert W debug dump: k, re_w, im_w, abs_remainder, tail_bound, max_j, max_m.
void write_branch_values(std::ostream& os, const ModelParams& params, long k_min, long k_max);
/// Coefficient triangle c_{j,m} for 1 <= j + m <= max_weight: j, m, numerator, denominator, double_value.
void write_coefficients(std::ostream& os, int max_weight);

struct ApproximationSample {
  Curve curve;
  double re_z;
  double neg_im_z;
};

std::vector<ApproximationSample> approximation_curves(const ModelParams& params, const Window& window,
                                                      int samples = 400);
void write_curves(std::ostream& os, std::span<const ApproximationSample> samples);

struct FigureSpec {
  int id = 1;
  ModelParams params;
  Window window;
};

/// Defaults for figures 1 to 3: h = 0.1, alpha = 0.7, 2, 1, eps = 0.3,
/// Re z in [0.2, 2], Im z from -4x the largest predicted width to 0, 1600 x 800 grid.
FigureSpec figure_defaults(int id);

struct FigureOverrides {
  std::optional<double> h, alpha, eps;
  std::optional<Window> window;
};

struct FigureResult {
  FigureSpec spec;
  ContourSet contours;
  std::vector<Resonance> resonances;
  MatchResult match;
  std::vector<std::filesystem::path> files;
};

/// Scans the figure window, matches contour crossings against branch
/// resonances and writes <prefix>_contours.csv, _resonances.csv, _curves.csv
/// into out_dir (no files when out_dir is empty).
FigureResult figure_data(int id, const FigureOverrides& overrides, const std::filesystem::path& out_dir);

/// Exit status of run_verify.
enum ExitCode : int { kPass = 0, kViolation = 1, kInvalidArguments = 2, kNumericalFailure = 3 };

/// kPass for the transitional regime or when every row passes, else kViolation.
int verify_exit_code(const CertifyReport& report);

/// Computes in-annulus resonances, certifies them, writes the report to os and
/// returns kPass (all pass, or the transitional regime) or kViolation.
int run_verify(const ModelParams& params, std::ostream& os, Format f);

}  // namespace deltares
