#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stencil_dse/energy_model.hpp"
#include "stencil_dse/memory_model.hpp"
#include "stencil_dse/time_model.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

enum class Objective { Time, Energy, EDP };

const char* to_string(Objective o);
Objective objective_from_string(const std::string& s);  // throws DomainError

// One tile-size parameter range: either an inclusive arithmetic progression
// or an explicit value list. Values are canonicalized (sorted, deduplicated)
// so grid declaration order never affects results.
struct ParamRange {
  std::vector<std::int64_t> values;

  static ParamRange from_min_max_step(std::int64_t min, std::int64_t max, std::int64_t step);
  static ParamRange from_values(std::vector<std::int64_t> values);
};

// Candidate grid for one strategy. t_s3 applies to 3D kernels and is ignored
// when tuning a 2D kernel.
struct TileGridSpec {
  Strategy strategy = Strategy::HexHybrid;
  ParamRange t_s1;
  ParamRange t_s2;
  std::optional<ParamRange> t_s3;
  ParamRange t_t;
  ParamRange k;
};

TileGridSpec grid_from_json(const nlohmann::json& j);               // throws ParseError
std::vector<TileGridSpec> load_grids(const std::filesystem::path&);  // object or array
nlohmann::ordered_json to_json(const TileGridSpec& g);

// Feasible candidates in deterministic order, with grid bookkeeping.
struct EnumerationResult {
  std::vector<TileConfig> tiles;        // feasible configs, canonical order
  std::int64_t lattice_points = 0;      // candidates examined
  std::int64_t feasible_count = 0;      // == tiles.size()
};

// Yields exactly the grid configs that pass type invariants (t_t even for
// HexHybrid) and the shared-memory feasibility check, in canonical
// (t_t, t_s1, t_s2, t_s3, k) order. Throws EmptyFeasibleSpace when nothing
// passes.
EnumerationResult enumerate_tiles(const StencilKernel& kernel, const ArchConfig& arch,
                                  const TileGridSpec& grid);

struct EvaluatedTile {
  TileConfig tile;
  TimeBreakdown time;
  EnergyBreakdown energy;
  FootprintReport footprint;
  double objective_value = 0.0;
};

struct TuneResult {
  EvaluatedTile best;
  std::vector<EvaluatedTile> top_k;  // ascending objective, lexicographic ties
  std::int64_t evaluated_count = 0;  // grid lattice points examined
  std::int64_t feasible_count = 0;
  Objective objective = Objective::Time;
};

// Exhaustive evaluation of the grid. Deterministic: the result is invariant
// under evaluation parallelism and grid declaration order.
TuneResult tune(const StencilKernel& kernel, const ArchConfig& arch, const CalibrationSet& calib,
                const TileGridSpec& grid, Objective objective, std::size_t top_k = 10);

// Exhaustive evaluation of an explicit candidate list (all candidates must be
// feasible). lattice_points records how many grid points the list was drawn
// from, for bookkeeping.
TuneResult tune_candidates(const StencilKernel& kernel, const ArchConfig& arch,
                           const CalibrationSet& calib, const std::vector<TileConfig>& candidates,
                           Objective objective, std::size_t top_k, std::int64_t lattice_points);

// Cross-strategy optimization: the minimum over per-strategy tune results
// (strategies with an empty feasible space are recorded as absent). Throws
// EmptyFeasibleSpace only when every strategy is empty.
struct SupertuneResult {
  TuneResult overall;             // merged winner and top-k
  std::vector<std::pair<Strategy, std::optional<TuneResult>>> per_strategy;
};

SupertuneResult supertune(const StencilKernel& kernel, const ArchConfig& arch,
                          const CalibrationSet& calib, const std::vector<TileGridSpec>& grids,
                          Objective objective, std::size_t top_k = 10);

// Restricts a HexHybrid grid to compute-bound feasible tiles, ranks them by
// the closed-form overhead (ascending, lexicographic ties) and keeps the
// first `keep`. Throws EmptyFeasibleSpace when no compute-bound tile exists.
std::vector<TileConfig> prune_by_closed_form(const StencilKernel& kernel, const ArchConfig& arch,
                                             const CalibrationSet& calib,
                                             const TileGridSpec& grid, std::size_t keep);

}  // namespace stencil_dse
