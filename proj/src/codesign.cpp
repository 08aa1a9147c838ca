#include "stencil_dse/codesign.hpp"

#include <algorithm>
#include <cmath>

#include "stencil_dse/config_io.hpp"
#include "stencil_dse/errors.hpp"
#include "stencil_dse/parallel.hpp"

namespace stencil_dse {

namespace {

using nlohmann::json;

ParamRange arch_range(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("arch space is missing parameter '") + key + "'");
  const json& r = *it;
  if (r.is_object() && r.contains("values")) {
    std::vector<std::int64_t> values;
    for (const auto& v : r["values"]) values.push_back(v.get<std::int64_t>());
    return ParamRange::from_values(std::move(values));
  }
  if (r.is_object() && r.contains("min") && r.contains("max")) {
    return ParamRange::from_min_max_step(r["min"].get<std::int64_t>(),
                                         r["max"].get<std::int64_t>(),
                                         r.contains("step") ? r["step"].get<std::int64_t>() : 1);
  }
  throw ParseError(std::string("arch space parameter '") + key +
                   "' must be {min, max[, step]} or {values: [...]}");
}

// l2_kib may legitimately contain 0, which ParamRange (tile-oriented)
// rejects; parse it separately.
ParamRange arch_range_allow_zero(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("arch space is missing parameter '") + key + "'");
  const json& r = *it;
  std::vector<std::int64_t> values;
  if (r.is_object() && r.contains("values")) {
    for (const auto& v : r["values"]) values.push_back(v.get<std::int64_t>());
  } else if (r.is_object() && r.contains("min") && r.contains("max")) {
    const std::int64_t step = r.contains("step") ? r["step"].get<std::int64_t>() : 1;
    if (step < 1) throw ParseError("range step must be >= 1");
    for (std::int64_t v = r["min"].get<std::int64_t>(); v <= r["max"].get<std::int64_t>();
         v += step) {
      values.push_back(v);
    }
  } else {
    throw ParseError(std::string("arch space parameter '") + key + "' is malformed");
  }
  for (std::int64_t v : values) {
    if (v < 0) throw ParseError(std::string("arch space parameter '") + key + "' must be >= 0");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw ParseError(std::string("arch space parameter '") + key + "' is empty");
  ParamRange out;
  out.values = std::move(values);
  return out;
}

bool arch_key_less(const ArchConfig& a, const ArchConfig& b) {
  return a.order_key() < b.order_key();
}

}  // namespace

ArchGridSpec arch_grid_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("arch space must be a JSON object");
  ArchGridSpec s;
  s.n_sm = arch_range(j, "n_sm");
  s.n_v = arch_range(j, "n_v");
  s.m_sm_kib = arch_range(j, "m_sm_kib");
  s.l2_kib = arch_range_allow_zero(j, "l2_kib");
  s.mem_ctrl_count = arch_range(j, "mem_ctrl_count");
  auto it = j.find("bw_global_gb_s");
  if (it == j.end() || !it->is_number()) {
    throw ParseError("arch space is missing numeric key 'bw_global_gb_s'");
  }
  s.bw_global_gb_s = it->get<double>();
  if (!std::isfinite(s.bw_global_gb_s) || s.bw_global_gb_s <= 0.0) {
    throw ParseError("'bw_global_gb_s' must be positive");
  }
  return s;
}

ArchGridSpec load_arch_grid(const std::filesystem::path& path) {
  return arch_grid_from_json(read_json_file(path));
}

std::vector<std::pair<ArchConfig, double>> enumerate_archs(const ArchGridSpec& space,
                                                           const AreaCoeffs& coeffs,
                                                           double budget_mm2) {
  validate(coeffs);
  std::vector<std::pair<ArchConfig, double>> out;
  for (std::int64_t n_sm : space.n_sm.values) {
    for (std::int64_t n_v : space.n_v.values) {
      for (std::int64_t m_sm_kib : space.m_sm_kib.values) {
        for (std::int64_t l2_kib : space.l2_kib.values) {
          for (std::int64_t mc : space.mem_ctrl_count.values) {
            ArchConfig a;
            a.n_sm = n_sm;
            a.n_v = n_v;
            a.m_sm = m_sm_kib * 1024;
            a.l2_bytes = l2_kib * 1024;
            a.mem_ctrl_count = mc;
            a.bw_global = space.bw_global_gb_s;
            validate(a);
            const double mm2 = area(a, coeffs);
            if (mm2 <= budget_mm2) out.emplace_back(a, mm2);
          }
        }
      }
    }
  }
  if (out.empty()) {
    throw EmptyDesignSpace("no architecture in the grid fits the budget of " +
                           std::to_string(budget_mm2) + " mm^2");
  }
  return out;
}

std::vector<DesignPoint> codesign(const WorkloadSuite& suite, const ArchGridSpec& space,
                                  const AreaCoeffs& coeffs, const CalibrationSet& calib,
                                  const std::vector<TileGridSpec>& grids, double budget_mm2,
                                  Objective objective, std::size_t prune_keep) {
  validate(suite);
  if (grids.empty()) throw DomainError("codesign requires at least one tile grid");
  const auto archs = enumerate_archs(space, coeffs, budget_mm2);

  std::vector<DesignPoint> points(archs.size());
  parallel_for(static_cast<std::int64_t>(archs.size()), [&](std::int64_t i) {
    const auto& [arch, mm2] = archs[static_cast<std::size_t>(i)];
    DesignPoint dp;
    dp.arch = arch;
    dp.area_mm2 = mm2;
    dp.weighted_gflops = 0.0;
    for (const auto& entry : suite.entries) {
      DesignPoint::PerKernel pk;
      pk.kernel = entry.kernel.name;

      // Per-strategy minima, merged across strategies. With pruning, each
      // HexHybrid grid is narrowed to the closed-form shortlist first; when
      // the shortlist is empty (no compute-bound tile) the full grid is kept
      // so transfer-bound kernels are still tuned.
      std::optional<TuneResult> best;
      for (const auto& grid : grids) {
        std::vector<TileConfig> candidates;
        try {
          if (prune_keep > 0 && grid.strategy == Strategy::HexHybrid) {
            try {
              candidates = prune_by_closed_form(entry.kernel, arch, calib, grid, prune_keep);
            } catch (const EmptyFeasibleSpace&) {
              candidates = enumerate_tiles(entry.kernel, arch, grid).tiles;
            }
          } else {
            candidates = enumerate_tiles(entry.kernel, arch, grid).tiles;
          }
        } catch (const EmptyFeasibleSpace&) {
          continue;
        }
        TuneResult r = tune_candidates(entry.kernel, arch, calib, candidates, objective, 1,
                                       static_cast<std::int64_t>(candidates.size()));
        if (!best || r.best.objective_value < best->best.objective_value ||
            (r.best.objective_value == best->best.objective_value &&
             tile_less(r.best.tile, best->best.tile))) {
          best = std::move(r);
        }
      }

      if (best) {
        pk.best_tile = best->best.tile;
        pk.gflops = best->best.time.gflops;
      } else {
        pk.best_tile = std::nullopt;
        pk.gflops = 0.0;
      }
      dp.weighted_gflops += entry.weight * pk.gflops;
      dp.per_kernel.push_back(std::move(pk));
    }
    points[static_cast<std::size_t>(i)] = std::move(dp);
  });

  std::sort(points.begin(), points.end(),
            [](const DesignPoint& a, const DesignPoint& b) { return arch_key_less(a.arch, b.arch); });
  return points;
}

ParetoSet pareto(const std::vector<DesignPoint>& points) {
  if (points.empty()) return {};

  // Sort by (area asc, gflops desc, arch key asc); one sweep keeps a point
  // iff it strictly improves the best gflops seen so far. Equal (area,
  // gflops) pairs resolve to the lexicographically smallest architecture.
  std::vector<const DesignPoint*> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](const DesignPoint* a, const DesignPoint* b) {
    if (a->area_mm2 != b->area_mm2) return a->area_mm2 < b->area_mm2;
    if (a->weighted_gflops != b->weighted_gflops) return a->weighted_gflops > b->weighted_gflops;
    return arch_key_less(a->arch, b->arch);
  });

  ParetoSet frontier;
  double best_gflops = -1.0;
  for (const DesignPoint* p : sorted) {
    if (p->weighted_gflops > best_gflops) {
      frontier.points.push_back(*p);
      best_gflops = p->weighted_gflops;
    }
  }
  return frontier;
}

ResourceAllocation resource_allocation(const DesignPoint& point, const AreaCoeffs& coeffs) {
  const double total = area(point.arch, coeffs);
  if (!(total > 0.0)) throw DomainError("resource_allocation requires a positive die area");
  const ArchConfig& a = point.arch;
  ResourceAllocation ra;
  ra.frac_memory = (static_cast<double>(a.n_sm) * coeffs.a_shmem *
                        static_cast<double>(a.m_sm_kib()) +
                    coeffs.a_l2 * static_cast<double>(a.l2_kib())) /
                   total;
  ra.frac_vector =
      static_cast<double>(a.n_sm) * coeffs.a_lane * static_cast<double>(a.n_v) / total;
  ra.frac_other = (coeffs.a_fixed + static_cast<double>(a.n_sm) * coeffs.a_sm_fixed +
                   coeffs.a_mc * static_cast<double>(a.mem_ctrl_count)) /
                  total;
  return ra;
}

}  // namespace stencil_dse
