#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stencil_dse/area_model.hpp"
#include "stencil_dse/tuner.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

// Architecture grid: the searchable hardware knobs plus the fixed
// global-memory bandwidth applied to every candidate (bandwidth is not an
// area-model input, so it is not swept).
struct ArchGridSpec {
  ParamRange n_sm;
  ParamRange n_v;          // values must be multiples of 32
  ParamRange m_sm_kib;
  ParamRange l2_kib;       // 0 allowed
  ParamRange mem_ctrl_count;
  double bw_global_gb_s = 1.0;
};

ArchGridSpec arch_grid_from_json(const nlohmann::json& j);
ArchGridSpec load_arch_grid(const std::filesystem::path& path);

// Grid points with area <= budget, in canonical lexicographic order
// (n_sm, n_v, m_sm, l2, mem_ctrl_count). Throws EmptyDesignSpace when the
// budget admits nothing.
std::vector<std::pair<ArchConfig, double>> enumerate_archs(const ArchGridSpec& space,
                                                           const AreaCoeffs& coeffs,
                                                           double budget_mm2);

struct DesignPoint {
  ArchConfig arch;
  double area_mm2 = 0.0;
  struct PerKernel {
    std::string kernel;
    std::optional<TileConfig> best_tile;  // absent when no tile is feasible
    double gflops = 0.0;                  // 0 when infeasible
  };
  std::vector<PerKernel> per_kernel;
  double weighted_gflops = 0.0;
};

// Nested search: for every in-budget architecture, tune every suite kernel
// across the given strategy grids (supertune); kernels with an empty feasible
// space score 0 GFLOP/s. prune_keep > 0 applies the closed-form pruner to
// HexHybrid grids before exhaustive evaluation; 0 disables pruning (exact).
std::vector<DesignPoint> codesign(const WorkloadSuite& suite, const ArchGridSpec& space,
                                  const AreaCoeffs& coeffs, const CalibrationSet& calib,
                                  const std::vector<TileGridSpec>& grids, double budget_mm2,
                                  Objective objective, std::size_t prune_keep = 0);

// Exact dominance filter on (area minimized, weighted GFLOP/s maximized).
// Points with equal (area, gflops) keep the lexicographically smallest
// architecture. The result is sorted by area ascending with strictly
// increasing gflops.
struct ParetoSet {
  std::vector<DesignPoint> points;
};

ParetoSet pareto(const std::vector<DesignPoint>& points);

// Fractions of the die devoted to memory (shared + L2), vector lanes, and
// everything else; the three sum to 1.
struct ResourceAllocation {
  double frac_memory = 0.0;
  double frac_vector = 0.0;
  double frac_other = 0.0;
};

ResourceAllocation resource_allocation(const DesignPoint& point, const AreaCoeffs& coeffs);

}  // namespace stencil_dse
