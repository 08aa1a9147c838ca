#pragma once

#include "stencil_dse/time_model.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

// Energy prediction, decoupled from but consuming the time model.
// All energies in nanojoules; edp in nJ*ns.
struct EnergyBreakdown {
  double e_dynamic_compute = 0.0;  // enumerated points x ops x e_op
  double e_dynamic_memory = 0.0;   // global traffic + shared accesses
  double e_static = 0.0;           // p_static x t_alg
  double e_total = 0.0;
  double edp = 0.0;                // e_total x t_alg
};

// Throws InfeasibleError for infeasible tiles (propagated from the time model).
EnergyBreakdown energy(const StencilKernel& kernel, const ArchConfig& arch,
                       const CalibrationSet& calib, const TileConfig& tile);

// Variant that reuses an already computed TimeBreakdown for the same point
// (the architecture enters only through time.t_alg).
EnergyBreakdown energy_with_time(const StencilKernel& kernel, const CalibrationSet& calib,
                                 const TileConfig& tile, const TimeBreakdown& time);

}  // namespace stencil_dse
