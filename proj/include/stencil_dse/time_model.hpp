#pragma once

#include <cstdint>

#include "stencil_dse/tiling.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

// Full execution-time prediction for one (kernel, arch, calibration, tile)
// point. All times in nanoseconds.
struct TimeBreakdown {
  double t_alg = 0.0;       // modeled execution time
  double t_ideal = 0.0;     // lower bound on an ideal machine
  double t_overhead = 0.0;  // t_alg - t_ideal
  double t_sync_total = 0.0;
  double t_compute_total = 0.0;   // per-tile compute time x serial prism slots
  double t_transfer_total = 0.0;  // per-tile transfer time x serial prism slots
  double t_prism = 0.0;           // max(compute, transfer) for one tile
  bool compute_bound = false;     // ties count as compute-bound
  double gflops = 0.0;            // ops_per_point * S1*S2*(S3)*T / t_alg
};

// Runtime on an ideal machine that pays nothing for synchronization or
// data movement: S1*S2*(S3)*T * c_iter / (n_sm * n_v).
double t_ideal(const StencilKernel& kernel, const ArchConfig& arch, const CalibrationSet& calib);

struct PrismTime {
  double time_ns = 0.0;
  bool compute_bound = false;
  double t_compute = 0.0;
  double t_transfer = 0.0;
};

// Time to execute one tile, with computation and data transfer overlapped:
//   t_compute  = tile_volume * c_iter * k / n_v   (k resident tiles share lanes)
//   t_transfer = tile_traffic * n_sm / bw_global  (per-SM bandwidth share)
// Throws InfeasibleError when the tile footprint fails the capacity check.
PrismTime t_prism(const StencilKernel& kernel, const ArchConfig& arch,
                  const CalibrationSet& calib, const TileConfig& tile);

// Full model: sum over wavefronts of (t_sync + t_prism * ceil(ceil(w/k)/n_sm)).
TimeBreakdown t_alg(const StencilKernel& kernel, const ArchConfig& arch,
                    const CalibrationSet& calib, const TileConfig& tile);

// Closed-form overhead c_iter * S1 * T / (t_s1 + t_t/2), a machine-portable
// ranking surrogate over compute-bound feasible hexagonal tiles. Throws
// DomainError for RectWavefront.
double overhead_closed_form(const StencilKernel& kernel, const CalibrationSet& calib,
                            const TileConfig& tile);

}  // namespace stencil_dse
