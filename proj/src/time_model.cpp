#include "stencil_dse/time_model.hpp"

#include <algorithm>

#include "stencil_dse/errors.hpp"
#include "stencil_dse/memory_model.hpp"

namespace stencil_dse {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

double t_ideal(const StencilKernel& kernel, const ArchConfig& arch, const CalibrationSet& calib) {
  return static_cast<double>(kernel.iteration_points()) * calib.c_iter /
         static_cast<double>(arch.n_sm * arch.n_v);
}

PrismTime t_prism(const StencilKernel& kernel, const ArchConfig& arch,
                  const CalibrationSet& calib, const TileConfig& tile) {
  const FootprintReport fp = feasible(kernel, arch, tile);
  if (!fp.feasible) {
    throw InfeasibleError("tile footprint " + std::to_string(fp.bytes_per_tile) +
                          " B (k=" + std::to_string(tile.k) + ") violates " +
                          to_string(fp.binding_constraint) + " on m_sm=" +
                          std::to_string(arch.m_sm) + " B");
  }
  const WavefrontSchedule sched = schedule(kernel, tile);
  PrismTime pt;
  pt.t_compute = static_cast<double>(sched.tile_volume) * calib.c_iter *
                 static_cast<double>(tile.k) / static_cast<double>(arch.n_v);
  pt.t_transfer = static_cast<double>(fp.traffic_bytes_per_tile) *
                  static_cast<double>(arch.n_sm) / arch.bw_global;
  pt.compute_bound = pt.t_compute >= pt.t_transfer;
  pt.time_ns = std::max(pt.t_compute, pt.t_transfer);
  return pt;
}

TimeBreakdown t_alg(const StencilKernel& kernel, const ArchConfig& arch,
                    const CalibrationSet& calib, const TileConfig& tile) {
  const PrismTime prism = t_prism(kernel, arch, calib, tile);
  const WavefrontSchedule sched = schedule(kernel, tile);

  // Serial prism slots: each wavefront needs ceil(ceil(w/k)/n_sm) rounds of
  // tile execution. Summed as an integer so the breakdown recomposes exactly.
  std::int64_t slots = 0;
  for (std::int64_t w : sched.tiles_per_wavefront) {
    slots += ceil_div(ceil_div(w, tile.k), arch.n_sm);
  }

  TimeBreakdown tb;
  tb.t_sync_total = static_cast<double>(sched.n_w) * calib.t_sync;
  tb.t_compute_total = prism.t_compute * static_cast<double>(slots);
  tb.t_transfer_total = prism.t_transfer * static_cast<double>(slots);
  tb.t_prism = prism.time_ns;
  tb.compute_bound = prism.compute_bound;
  tb.t_alg = tb.t_sync_total + prism.time_ns * static_cast<double>(slots);
  tb.t_ideal = t_ideal(kernel, arch, calib);
  tb.t_overhead = tb.t_alg - tb.t_ideal;
  tb.gflops = static_cast<double>(kernel.ops_per_point) *
              static_cast<double>(kernel.iteration_points()) / tb.t_alg;
  return tb;
}

double overhead_closed_form(const StencilKernel& kernel, const CalibrationSet& calib,
                            const TileConfig& tile) {
  if (tile.strategy != Strategy::HexHybrid) {
    throw DomainError("overhead_closed_form applies to hex_hybrid tiles only");
  }
  validate(tile);
  const double face = static_cast<double>(tile.t_s1) + static_cast<double>(tile.t_t) / 2.0;
  return calib.c_iter * static_cast<double>(kernel.s1) *
         static_cast<double>(kernel.time_steps) / face;
}

}  // namespace stencil_dse
