#pragma once

#include <istream>
#include <optional>
#include <string>

#include "vmg/density.hpp"
#include "vmg_cli/config.hpp"
#include "vmg_cli/table.hpp"

namespace vmg::cli {

/// name,value rows for the named constants.
Table constants_table();

/// n,moment rows for n = 0..N, moments as "num/den". N in [0, 200].
Table moments_table(int n);

/// Grid used by `density`: count points strictly inside the range (default
/// (-edge, edge)); linear spacing is exactly symmetric about the midpoint,
/// log spacing puts distances from sqrt2 on a geometric scale.
std::vector<double> density_grid(const Config& cfg);

/// x,rho,method rows on density_grid(cfg).
Table density_table(const Config& cfg);

struct ParametricOptions {
  ParametricBranch branch = ParametricBranch::Inner;
  std::optional<double> xi_min;  ///< default -12
  std::optional<double> xi_max;  ///< default 3.1 (INNER), -1e-6 (OUTER)
};

/// x,rho,method rows from the parametric sweep, in increasing xi.
Table parametric_table(const Config& cfg, const ParametricOptions& opt);

struct CurveOptions {
  double eta = -1.5707963267948966;
  double xi_min = -12.0;
  std::optional<double> xi_max;  ///< default -eta - 1e-3
};

/// xi,re,im samples of Gamma_eta.
Table curve_table(const Config& cfg, const CurveOptions& opt);

/// Reads "re,im" rows (blank lines and '#' comments skipped) and emits
/// re,im,F_re,F_im,G_re,G_im. Malformed rows raise UsageError naming the line.
Table transform_table(std::istream& in);

}  // namespace vmg::cli
