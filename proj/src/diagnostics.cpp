#include "cosmoburgers/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cosmoburgers/errors.hpp"

namespace cosmoburgers {

namespace {

void require_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DomainError(fmt::format("field sizes differ: {} vs {}", a.size(), b.size()));
  }
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> rescale_expanding(std::span<const double> v, double tau,
                                      const Background& bg) {
  if (bg.regime() != Regime::Expanding || !(tau > 0.0)) {
    throw DomainError("expanding rescaling needs an expanding background and tau > 0");
  }
  const double factor = std::pow(tau, bg.kappa());
  std::vector<double> w(v.size());
  std::transform(v.begin(), v.end(), w.begin(), [&](double x) { return factor * x; });
  return w;
}

std::vector<double> rescale_contracting(std::span<const double> v, double tau,
                                        const Background& bg) {
  if (bg.regime() != Regime::Contracting || !(tau < 0.0)) {
    throw DomainError("contracting rescaling needs a contracting background and tau < 0");
  }
  const double factor = std::pow(-tau, bg.kappa());
  std::vector<double> w(v.size());
  std::transform(v.begin(), v.end(), w.begin(), [&](double x) {
    if (!(std::abs(x) < 1.0)) return std::numeric_limits<double>::quiet_NaN();
    if (x == 0.0) return 0.0;
    return std::copysign(factor / std::sqrt(1.0 - x * x), x);
  });
  return w;
}

std::vector<double> rescale(std::span<const double> v, double tau,
                            const Background& bg) {
  switch (bg.regime()) {
    case Regime::Expanding: return rescale_expanding(v, tau, bg);
    case Regime::Contracting: return rescale_contracting(v, tau, bg);
    case Regime::Flat: break;
  }
  return {v.begin(), v.end()};
}

double norm_l1(std::span<const double> a, std::span<const double> b,
               double cell_measure) {
  require_same_size(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isfinite(a[i]) && std::isfinite(b[i])) sum += std::abs(a[i] - b[i]);
  }
  return sum * cell_measure;
}

double norm_l2(std::span<const double> a, std::span<const double> b,
               double cell_measure) {
  require_same_size(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isfinite(a[i]) && std::isfinite(b[i])) {
      const double d = a[i] - b[i];
      sum += d * d;
    }
  }
  return std::sqrt(sum * cell_measure);
}

double norm_l2(std::span<const double> v, double cell_measure) {
  double sum = 0.0;
  for (double x : v) {
    if (std::isfinite(x)) sum += x * x;
  }
  return std::sqrt(sum * cell_measure);
}

std::vector<double> restrict_block_average(std::span<const double> fine,
                                           int coarse_cells) {
  const auto n = static_cast<int>(fine.size());
  if (coarse_cells <= 0 || n % coarse_cells != 0) {
    throw DomainError(fmt::format("{} coarse cells do not nest in {} fine cells", coarse_cells, n));
  }
  const int ratio = n / coarse_cells;
  std::vector<double> coarse(coarse_cells);
  for (int c = 0; c < coarse_cells; ++c) {
    double sum = 0.0;
    for (int i = 0; i < ratio; ++i) sum += fine[c * ratio + i];
    coarse[c] = sum / ratio;
  }
  return coarse;
}

std::vector<double> restrict_block_average(std::span<const double> fine,
                                           int fine_nx, int fine_ny,
                                           int coarse_nx, int coarse_ny) {
  if (fine.size() != static_cast<std::size_t>(fine_nx) * fine_ny) {
    throw DomainError("fine field size does not match its grid");
  }
  if (coarse_nx <= 0 || coarse_ny <= 0 || fine_nx % coarse_nx != 0 ||
      fine_ny % coarse_ny != 0) {
    throw DomainError(fmt::format("{}x{} coarse grid does not nest in {}x{}",
                                  coarse_nx, coarse_ny, fine_nx, fine_ny));
  }
  const int rx = fine_nx / coarse_nx;
  const int ry = fine_ny / coarse_ny;
  std::vector<double> coarse(static_cast<std::size_t>(coarse_nx) * coarse_ny);
  for (int k = 0; k < coarse_ny; ++k) {
    for (int j = 0; j < coarse_nx; ++j) {
      double sum = 0.0;
      for (int b = 0; b < ry; ++b) {
        for (int a = 0; a < rx; ++a) {
          sum += fine[static_cast<std::size_t>(k * ry + b) * fine_nx + j * rx + a];
        }
      }
      coarse[static_cast<std::size_t>(k) * coarse_nx + j] = sum / (rx * ry);
    }
  }
  return coarse;
}

double decay_rate_fit(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) throw DomainError("decay fit needs at least 3 samples");
  double sx = 0.0, sy = 0.0;
  for (const auto& [tau, m] : samples) {
    if (!(tau > 0.0) || !(m > 0.0)) {
      throw DomainError("decay fit is undefined for non-positive tau or max|v|");
    }
    sx += std::log(tau);
    sy += std::log(m);
  }
  const double n = static_cast<double>(samples.size());
  const double mx = sx / n, my = sy / n;
  double sxy = 0.0, sxx = 0.0;
  for (const auto& [tau, m] : samples) {
    const double dx = std::log(tau) - mx;
    sxy += dx * (std::log(m) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("decay fit needs distinct times");
  return sxy / sxx;
}

double total_variation(std::span<const double> v) {
  double tv = 0.0;
  for (std::size_t j = 1; j < v.size(); ++j) tv += std::abs(v[j] - v[j - 1]);
  return tv;
}

int jump_count(std::span<const double> v, double threshold_factor) {
  if (v.size() < 2) return 0;
  const double tv = total_variation(v);
  if (tv == 0.0) return 0;
  const double threshold = threshold_factor * tv / static_cast<double>(v.size());
  int count = 0;
  bool in_jump = false;
  for (std::size_t j = 1; j < v.size(); ++j) {
    const bool candidate = std::abs(v[j] - v[j - 1]) > threshold;
    if (candidate && !in_jump) ++count;
    in_jump = candidate;
  }
  return count;
}

DiagonalProfile diagonal_extract(const Grid2D& grid, std::span<const double> values) {
  if (grid.nx() != grid.ny() || !grid.is_square_spacing()) {
    throw DomainError("diagonal extraction needs a square grid with dx == dy");
  }
  if (values.size() != grid.size()) throw DomainError("field size does not match grid");
  DiagonalProfile out;
  out.s.resize(grid.nx());
  out.v.resize(grid.nx());
  for (int j = 0; j < grid.nx(); ++j) {
    out.s[j] = (j + 0.5) * grid.dx() * std::sqrt(2.0);
    out.v[j] = values[grid.index(j, j)];
  }
  return out;
}

DiagnosticsRecord diagnose_1d(std::span<const double> v, double tau,
                              const Grid1D& grid) {
  DiagnosticsRecord r;
  r.tau = tau;
  r.max_abs_v = max_abs(v);
  r.overshoot = std::max(0.0, r.max_abs_v - 1.0);
  r.jump_count = jump_count(v);
  r.tv_x = total_variation(v);
  r.l2_norm = norm_l2(v, grid.dy());
  return r;
}

DiagnosticsRecord diagnose_2d(std::span<const double> v, double tau,
                              const Grid2D& grid) {
  DiagnosticsRecord r;
  r.tau = tau;
  r.max_abs_v = max_abs(v);
  r.overshoot = std::max(0.0, r.max_abs_v - 1.0);
  r.l2_norm = norm_l2(v, grid.dx() * grid.dy());

  const int nx = grid.nx(), ny = grid.ny();
  double tv_x = 0.0, tv_y = 0.0;
  int jumps = 0;
  std::vector<double> column(ny);
  for (int k = 0; k < ny; ++k) {
    const auto row = v.subspan(grid.index(0, k), nx);
    tv_x += total_variation(row);
    jumps = std::max(jumps, jump_count(row));
  }
  for (int j = 0; j < nx; ++j) {
    for (int k = 0; k < ny; ++k) column[k] = v[grid.index(j, k)];
    tv_y += total_variation(column);
    jumps = std::max(jumps, jump_count(column));
  }
  // Per-line variation weighted by the transverse cell size.
  r.tv_x = tv_x * grid.dy();
  r.tv_y = tv_y * grid.dx();
  r.jump_count = jumps;
  return r;
}

}  // namespace cosmoburgers
