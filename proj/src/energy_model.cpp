#include "stencil_dse/energy_model.hpp"

#include "stencil_dse/memory_model.hpp"
#include "stencil_dse/tiling.hpp"

namespace stencil_dse {

EnergyBreakdown energy_with_time(const StencilKernel& kernel, const CalibrationSet& calib,
                                 const TileConfig& tile, const TimeBreakdown& time) {
  const WavefrontSchedule sched = schedule(kernel, tile);
  const std::int64_t n_tiles = sched.total_tiles();
  const double traffic = static_cast<double>(tile_traffic(kernel, tile));

  EnergyBreakdown eb;
  eb.e_dynamic_compute = static_cast<double>(sched.total_points_enumerated) *
                         static_cast<double>(kernel.ops_per_point) * calib.e_op;
  // One shared-memory access per iteration point; read-modify-write traffic
  // is folded into the e_sh calibration.
  eb.e_dynamic_memory =
      static_cast<double>(n_tiles) * traffic * calib.e_glob +
      static_cast<double>(n_tiles) * static_cast<double>(sched.tile_volume) *
          static_cast<double>(kernel.bytes_per_element) * calib.e_sh;
  eb.e_static = calib.p_static * time.t_alg;  // W x ns == nJ
  eb.e_total = eb.e_dynamic_compute + eb.e_dynamic_memory + eb.e_static;
  eb.edp = eb.e_total * time.t_alg;
  return eb;
}

EnergyBreakdown energy(const StencilKernel& kernel, const ArchConfig& arch,
                       const CalibrationSet& calib, const TileConfig& tile) {
  const TimeBreakdown time = t_alg(kernel, arch, calib, tile);
  return energy_with_time(kernel, calib, tile, time);
}

}  // namespace stencil_dse
