#include "stencil_dse/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "stencil_dse/errors.hpp"
#include "stencil_dse/memory_model.hpp"
#include "stencil_dse/tiling.hpp"

namespace stencil_dse {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

const char* to_string(Resource r) {
  switch (r) {
    case Resource::SharedMemory:
      return "SharedMemory";
    case Resource::Occupancy:
      return "Occupancy";
    case Resource::Bandwidth:
      return "Bandwidth";
    case Resource::AreaBudget:
      return "AreaBudget";
    case Resource::None:
      return "None";
  }
  return "unknown";
}

std::map<Resource, double> saturation(const StencilKernel& kernel, const ArchConfig& arch,
                                      const CalibrationSet& calib, const TileConfig& tile) {
  const PrismTime prism = t_prism(kernel, arch, calib, tile);  // InfeasibleError if not
  const FootprintReport fp = feasible(kernel, arch, tile);
  const WavefrontSchedule sched = schedule(kernel, tile);

  std::map<Resource, double> slack;
  slack[Resource::SharedMemory] =
      1.0 - static_cast<double>(fp.bytes_with_k) / static_cast<double>(arch.m_sm);

  const std::int64_t concurrency = arch.n_sm * tile.k;
  double occ = 0.0;
  for (std::int64_t w : sched.tiles_per_wavefront) {
    occ += static_cast<double>(w % concurrency) / static_cast<double>(concurrency);
  }
  slack[Resource::Occupancy] = 1.0 - occ / static_cast<double>(sched.n_w);

  slack[Resource::Bandwidth] =
      std::clamp(1.0 - prism.t_transfer / prism.t_compute, 0.0, 1.0);
  return slack;
}

BottleneckReport decompose(const StencilKernel& kernel, const ArchConfig& arch,
                           const CalibrationSet& calib, const TileConfig& tile) {
  BottleneckReport report;
  report.time = t_alg(kernel, arch, calib, tile);
  const PrismTime prism = t_prism(kernel, arch, calib, tile);
  const WavefrontSchedule sched = schedule(kernel, tile);

  std::int64_t slots = 0;
  for (std::int64_t w : sched.tiles_per_wavefront) {
    slots += ceil_div(ceil_div(w, tile.k), arch.n_sm);
  }

  report.overhead_total_ns = report.time.t_overhead;
  report.sync_ns = static_cast<double>(sched.n_w) * calib.t_sync;
  report.transfer_excess_ns =
      prism.compute_bound ? 0.0
                          : (prism.t_transfer - prism.t_compute) * static_cast<double>(slots);
  report.padding_ns =
      static_cast<double>(sched.total_points_enumerated - kernel.iteration_points()) *
      calib.c_iter / static_cast<double>(arch.n_sm * arch.n_v);
  report.quantization_ns =
      report.overhead_total_ns - report.sync_ns - report.transfer_excess_ns - report.padding_ns;
  if (report.quantization_ns < -1e-9 * std::max(report.time.t_alg, 1.0)) {
    std::fprintf(stderr,
                 "stencil-dse: warning: negative quantization residual %.6g ns "
                 "(model inconsistency)\n",
                 report.quantization_ns);
  }

  report.slack = saturation(kernel, arch, calib, tile);
  for (const auto& [resource, s] : report.slack) {
    if (s <= 1e-12) report.binding_resources.push_back(resource);
  }
  if (report.binding_resources.empty()) {
    report.binding_resources.push_back(Resource::None);
  }
  return report;
}

HyperthreadingSweep hyperthreading_sweep(const StencilKernel& kernel, const ArchConfig& arch,
                                         const CalibrationSet& calib, const TileConfig& tile_base,
                                         std::int64_t k_min, std::int64_t k_max) {
  if (k_min < 1 || k_max < k_min) {
    throw DomainError("hyperthreading sweep requires 1 <= k_min <= k_max");
  }
  HyperthreadingSweep sweep;
  double best_t = 0.0;
  for (std::int64_t k = k_min; k <= k_max; ++k) {
    SweepEntry entry;
    entry.k = k;
    TileConfig tile = tile_base;
    tile.k = k;
    if (feasible(kernel, arch, tile).feasible) {
      entry.feasible = true;
      entry.time = t_alg(kernel, arch, calib, tile);
      if (!sweep.best_k || entry.time->t_alg < best_t) {
        sweep.best_k = k;
        best_t = entry.time->t_alg;
      }
    }
    sweep.entries.push_back(std::move(entry));
  }
  return sweep;
}

}  // namespace stencil_dse
