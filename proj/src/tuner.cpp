#include "stencil_dse/tuner.hpp"

#include <algorithm>
#include <set>

#include "stencil_dse/config_io.hpp"
#include "stencil_dse/errors.hpp"
#include "stencil_dse/parallel.hpp"

namespace stencil_dse {

namespace {

using nlohmann::json;

double objective_of(const EvaluatedTile& e, Objective o) {
  switch (o) {
    case Objective::Time:
      return e.time.t_alg;
    case Objective::Energy:
      return e.energy.e_total;
    case Objective::EDP:
      return e.energy.edp;
  }
  throw InternalError("unhandled objective");
}

bool evaluated_less(const EvaluatedTile& a, const EvaluatedTile& b) {
  if (a.objective_value != b.objective_value) return a.objective_value < b.objective_value;
  return tile_less(a.tile, b.tile);
}

ParamRange range_from_json(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("grid is missing parameter '") + key + "'");
  const json& r = *it;
  if (r.is_object() && r.contains("values")) {
    const json& vals = r["values"];
    if (!vals.is_array() || vals.empty()) {
      throw ParseError(std::string("grid parameter '") + key + "' values must be a non-empty array");
    }
    std::vector<std::int64_t> values;
    for (const auto& v : vals) {
      if (!v.is_number_integer()) {
        throw ParseError(std::string("grid parameter '") + key + "' values must be integers");
      }
      values.push_back(v.get<std::int64_t>());
    }
    return ParamRange::from_values(std::move(values));
  }
  if (r.is_object() && r.contains("min") && r.contains("max")) {
    const std::int64_t min = r["min"].get<std::int64_t>();
    const std::int64_t max = r["max"].get<std::int64_t>();
    const std::int64_t step = r.contains("step") ? r["step"].get<std::int64_t>() : 1;
    return ParamRange::from_min_max_step(min, max, step);
  }
  throw ParseError(std::string("grid parameter '") + key +
                   "' must be {min, max[, step]} or {values: [...]}");
}

}  // namespace

const char* to_string(Objective o) {
  switch (o) {
    case Objective::Time:
      return "time";
    case Objective::Energy:
      return "energy";
    case Objective::EDP:
      return "edp";
  }
  return "unknown";
}

Objective objective_from_string(const std::string& s) {
  if (s == "time") return Objective::Time;
  if (s == "energy") return Objective::Energy;
  if (s == "edp") return Objective::EDP;
  throw DomainError("unknown objective '" + s + "' (expected time, energy or edp)");
}

ParamRange ParamRange::from_min_max_step(std::int64_t min, std::int64_t max, std::int64_t step) {
  if (step < 1) throw ParseError("range step must be >= 1");
  if (min < 1 || max < min) throw ParseError("range must satisfy 1 <= min <= max");
  ParamRange r;
  for (std::int64_t v = min; v <= max; v += step) r.values.push_back(v);
  return r;
}

ParamRange ParamRange::from_values(std::vector<std::int64_t> values) {
  for (std::int64_t v : values) {
    if (v < 1) throw ParseError("range values must be >= 1");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw ParseError("range must contain at least one value");
  ParamRange r;
  r.values = std::move(values);
  return r;
}

TileGridSpec grid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("grid must be a JSON object");
  TileGridSpec g;
  auto it = j.find("strategy");
  if (it == j.end() || !it->is_string()) throw ParseError("grid is missing key 'strategy'");
  g.strategy = strategy_from_string(it->get<std::string>());
  g.t_s1 = range_from_json(j, "t_s1");
  g.t_s2 = range_from_json(j, "t_s2");
  if (j.contains("t_s3")) g.t_s3 = range_from_json(j, "t_s3");
  g.t_t = range_from_json(j, "t_t");
  g.k = range_from_json(j, "k");
  return g;
}

std::vector<TileGridSpec> load_grids(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  std::vector<TileGridSpec> grids;
  if (j.is_array()) {
    for (const auto& g : j) grids.push_back(grid_from_json(g));
  } else {
    grids.push_back(grid_from_json(j));
  }
  if (grids.empty()) throw ParseError("grid file contains no grids");
  std::set<Strategy> seen;
  for (const auto& g : grids) {
    if (!seen.insert(g.strategy).second) {
      throw ParseError(std::string("duplicate grid for strategy ") + to_string(g.strategy));
    }
  }
  return grids;
}

nlohmann::ordered_json to_json(const TileGridSpec& g) {
  nlohmann::ordered_json j;
  j["strategy"] = to_string(g.strategy);
  auto dump = [](const ParamRange& r) {
    nlohmann::ordered_json o;
    o["values"] = r.values;
    return o;
  };
  j["t_s1"] = dump(g.t_s1);
  j["t_s2"] = dump(g.t_s2);
  if (g.t_s3) j["t_s3"] = dump(*g.t_s3);
  j["t_t"] = dump(g.t_t);
  j["k"] = dump(g.k);
  return j;
}

EnumerationResult enumerate_tiles(const StencilKernel& kernel, const ArchConfig& arch,
                                  const TileGridSpec& grid) {
  validate(kernel);
  if (kernel.space_dims == 3 && !grid.t_s3) {
    throw DomainError("3D kernel '" + kernel.name + "' requires a t_s3 range in the grid");
  }
  const std::vector<std::int64_t> s3_values =
      kernel.space_dims == 3 ? grid.t_s3->values : std::vector<std::int64_t>{0};

  EnumerationResult result;
  // Canonical nesting follows the tie-break key order (t_t, t_s1, t_s2, t_s3, k).
  for (std::int64_t t_t : grid.t_t.values) {
    if (grid.strategy == Strategy::HexHybrid && t_t % 2 != 0) continue;
    for (std::int64_t t_s1 : grid.t_s1.values) {
      for (std::int64_t t_s2 : grid.t_s2.values) {
        for (std::int64_t t_s3 : s3_values) {
          for (std::int64_t k : grid.k.values) {
            ++result.lattice_points;
            TileConfig tile;
            tile.strategy = grid.strategy;
            tile.t_s1 = t_s1;
            tile.t_s2 = t_s2;
            if (kernel.space_dims == 3) tile.t_s3 = t_s3;
            tile.t_t = t_t;
            tile.k = k;
            if (feasible(kernel, arch, tile).feasible) {
              result.tiles.push_back(tile);
            }
          }
        }
      }
    }
  }
  result.feasible_count = static_cast<std::int64_t>(result.tiles.size());
  if (result.tiles.empty()) {
    throw EmptyFeasibleSpace("no feasible tile for kernel '" + kernel.name + "' on this grid");
  }
  return result;
}

TuneResult tune_candidates(const StencilKernel& kernel, const ArchConfig& arch,
                           const CalibrationSet& calib, const std::vector<TileConfig>& candidates,
                           Objective objective, std::size_t top_k, std::int64_t lattice_points) {
  if (candidates.empty()) {
    throw EmptyFeasibleSpace("no candidate tile for kernel '" + kernel.name + "'");
  }
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());

  std::vector<EvaluatedTile> evaluated(static_cast<std::size_t>(n));
  parallel_for(n, [&](std::int64_t i) {
    EvaluatedTile e;
    e.tile = candidates[static_cast<std::size_t>(i)];
    e.time = t_alg(kernel, arch, calib, e.tile);
    e.energy = energy_with_time(kernel, calib, e.tile, e.time);
    e.footprint = feasible(kernel, arch, e.tile);
    e.objective_value = objective_of(e, objective);
    evaluated[static_cast<std::size_t>(i)] = std::move(e);
  });

  std::sort(evaluated.begin(), evaluated.end(), evaluated_less);

  TuneResult result;
  result.objective = objective;
  result.evaluated_count = lattice_points;
  result.feasible_count = n;
  result.best = evaluated.front();
  const std::size_t keep = std::min(top_k, evaluated.size());
  result.top_k.assign(evaluated.begin(), evaluated.begin() + static_cast<std::ptrdiff_t>(keep));
  return result;
}

TuneResult tune(const StencilKernel& kernel, const ArchConfig& arch, const CalibrationSet& calib,
                const TileGridSpec& grid, Objective objective, std::size_t top_k) {
  const EnumerationResult candidates = enumerate_tiles(kernel, arch, grid);
  return tune_candidates(kernel, arch, calib, candidates.tiles, objective, top_k,
                         candidates.lattice_points);
}

SupertuneResult supertune(const StencilKernel& kernel, const ArchConfig& arch,
                          const CalibrationSet& calib, const std::vector<TileGridSpec>& grids,
                          Objective objective, std::size_t top_k) {
  if (grids.empty()) throw DomainError("supertune requires at least one grid");

  SupertuneResult result;
  std::vector<EvaluatedTile> merged;
  std::int64_t evaluated_total = 0;
  std::int64_t feasible_total = 0;

  // Grids sorted by strategy so the recorded minima have a stable order.
  std::vector<TileGridSpec> ordered = grids;
  std::sort(ordered.begin(), ordered.end(),
            [](const TileGridSpec& a, const TileGridSpec& b) { return a.strategy < b.strategy; });

  for (const auto& grid : ordered) {
    try {
      TuneResult r = tune(kernel, arch, calib, grid, objective, top_k);
      evaluated_total += r.evaluated_count;
      feasible_total += r.feasible_count;
      merged.insert(merged.end(), r.top_k.begin(), r.top_k.end());
      result.per_strategy.emplace_back(grid.strategy, std::move(r));
    } catch (const EmptyFeasibleSpace&) {
      result.per_strategy.emplace_back(grid.strategy, std::nullopt);
    }
  }

  if (merged.empty()) {
    throw EmptyFeasibleSpace("no strategy has a feasible tile for kernel '" + kernel.name + "'");
  }
  std::sort(merged.begin(), merged.end(), evaluated_less);
  if (merged.size() > top_k) merged.resize(top_k);

  result.overall.objective = objective;
  result.overall.evaluated_count = evaluated_total;
  result.overall.feasible_count = feasible_total;
  result.overall.best = merged.front();
  result.overall.top_k = std::move(merged);
  return result;
}

std::vector<TileConfig> prune_by_closed_form(const StencilKernel& kernel, const ArchConfig& arch,
                                             const CalibrationSet& calib,
                                             const TileGridSpec& grid, std::size_t keep) {
  if (grid.strategy != Strategy::HexHybrid) {
    throw DomainError("prune_by_closed_form applies to hex_hybrid grids only");
  }
  const EnumerationResult candidates = enumerate_tiles(kernel, arch, grid);

  struct Ranked {
    TileConfig tile;
    double overhead;
  };
  std::vector<Ranked> compute_bound;
  for (const auto& tile : candidates.tiles) {
    if (t_prism(kernel, arch, calib, tile).compute_bound) {
      compute_bound.push_back({tile, overhead_closed_form(kernel, calib, tile)});
    }
  }
  if (compute_bound.empty()) {
    throw EmptyFeasibleSpace("no compute-bound feasible tile for kernel '" + kernel.name + "'");
  }
  std::sort(compute_bound.begin(), compute_bound.end(), [](const Ranked& a, const Ranked& b) {
    if (a.overhead != b.overhead) return a.overhead < b.overhead;
    return tile_less(a.tile, b.tile);
  });

  std::vector<TileConfig> kept;
  const std::size_t limit = std::min(keep, compute_bound.size());
  kept.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) kept.push_back(compute_bound[i].tile);
  return kept;
}

}  // namespace stencil_dse
