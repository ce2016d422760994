#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cosmoburgers/grid.hpp"
#include "cosmoburgers/model.hpp"

namespace cosmoburgers {

/// Summary numbers attached to every recorded snapshot.
struct DiagnosticsRecord {
  double tau = 0.0;
  std::optional<double> l1_vs_reference;
  std::optional<double> l2_norm;
  double max_abs_v = 0.0;
  double overshoot = 0.0;  // max(0, max|v| - 1)
  int jump_count = 0;
  double tv_x = 0.0;             // total variation along x (the only one in 1D)
  std::optional<double> tv_y;    // 2D only
};

/// Default multiple of the mean increment above which an interface is a jump.
inline constexpr double kJumpThresholdFactor = 10.0;

/// w = tau^kappa v. Throws DomainError unless the background is expanding
/// and tau > 0.
std::vector<double> rescale_expanding(std::span<const double> v, double tau,
                                      const Background& bg);

/// w = sgn(v) (-tau)^kappa / sqrt(1 - v^2). Cells with |v| >= 1 have no real
/// value and come back as quiet NaN; the norms below skip them.
/// Throws DomainError unless the background is contracting and tau < 0.
std::vector<double> rescale_contracting(std::span<const double> v, double tau,
                                        const Background& bg);

/// Regime-appropriate rescaling; the flat regime returns v unchanged.
std::vector<double> rescale(std::span<const double> v, double tau,
                            const Background& bg);

/// Sum |a - b| * cell_measure over cells where both entries are finite.
/// Throws DomainError on size mismatch.
double norm_l1(std::span<const double> a, std::span<const double> b,
               double cell_measure);
/// sqrt(sum |a - b|^2 * cell_measure), same conventions as norm_l1.
double norm_l2(std::span<const double> a, std::span<const double> b,
               double cell_measure);
/// sqrt(sum v^2 * cell_measure).
double norm_l2(std::span<const double> v, double cell_measure);

/// Block average of a fine 1D field onto coarse_cells cells.
/// Throws DomainError unless coarse_cells divides fine.size().
std::vector<double> restrict_block_average(std::span<const double> fine,
                                           int coarse_cells);
/// 2D block average, row-major storage as in Grid2D.
std::vector<double> restrict_block_average(std::span<const double> fine,
                                           int fine_nx, int fine_ny,
                                           int coarse_nx, int coarse_ny);

/// Least-squares slope of log(max|v|) against log(tau).
/// Throws DomainError with fewer than 3 samples or any non-positive entry.
double decay_rate_fit(std::span<const std::pair<double, double>> samples);

double total_variation(std::span<const double> v);

/// Number of jumps in a 1D profile. An interface is a jump candidate when
/// |v_{j+1} - v_j| > threshold_factor * TV / J; a run of adjacent candidates
/// counts as one jump (a captured shock is smeared over a few cells).
int jump_count(std::span<const double> v,
               double threshold_factor = kJumpThresholdFactor);

struct DiagonalProfile {
  std::vector<double> s;  // arclength of the cell center along x = y
  std::vector<double> v;
};

/// v_{j,j} for j = 0..J-1 with s_j = (j + 1/2) dx sqrt(2).
/// Throws DomainError unless nx == ny and dx == dy.
DiagonalProfile diagonal_extract(const Grid2D& grid, std::span<const double> values);

DiagnosticsRecord diagnose_1d(std::span<const double> v, double tau,
                              const Grid1D& grid);
/// jump_count in 2D is the largest count over all rows and columns.
DiagnosticsRecord diagnose_2d(std::span<const double> v, double tau,
                              const Grid2D& grid);

}  // namespace cosmoburgers
