#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stencil_dse/time_model.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

enum class Resource { SharedMemory, Occupancy, Bandwidth, AreaBudget, None };

const char* to_string(Resource r);

// Overhead decomposition of t_alg - t_ideal into:
//   sync            wavefront synchronization time
//   transfer_excess time lost waiting on transfers beyond compute overlap
//   padding         full-volume charge for boundary-padded partial tiles
//   quantization    residual ceiling losses (partial wavefront rounds)
// The four components sum to the overhead exactly; a negative quantization
// beyond tolerance signals a model inconsistency and is reported on stderr.
struct BottleneckReport {
  double sync_ns = 0.0;
  double transfer_excess_ns = 0.0;
  double padding_ns = 0.0;
  double quantization_ns = 0.0;
  double overhead_total_ns = 0.0;
  std::vector<Resource> binding_resources;  // saturated resources; {None} if none
  std::map<Resource, double> slack;         // fraction in [0, 1] per resource
  TimeBreakdown time;
};

BottleneckReport decompose(const StencilKernel& kernel, const ArchConfig& arch,
                           const CalibrationSet& calib, const TileConfig& tile);

// Slack per resource in [0, 1]; 0 means saturated.
//   SharedMemory: 1 - k*footprint/m_sm
//   Occupancy:    1 - mean over wavefronts of (w mod n_sm*k)/(n_sm*k)
//   Bandwidth:    1 - t_transfer/t_compute, clamped to [0, 1]
std::map<Resource, double> saturation(const StencilKernel& kernel, const ArchConfig& arch,
                                      const CalibrationSet& calib, const TileConfig& tile);

// Evaluates the base tile at every k in [k_min, k_max]; infeasible entries
// are flagged rather than fatal.
struct SweepEntry {
  std::int64_t k = 1;
  bool feasible = false;
  std::optional<TimeBreakdown> time;  // present iff feasible
};

struct HyperthreadingSweep {
  std::vector<SweepEntry> entries;
  std::optional<std::int64_t> best_k;  // argmin t_alg among feasible entries
};

HyperthreadingSweep hyperthreading_sweep(const StencilKernel& kernel, const ArchConfig& arch,
                                         const CalibrationSet& calib, const TileConfig& tile_base,
                                         std::int64_t k_min, std::int64_t k_max);

}  // namespace stencil_dse
