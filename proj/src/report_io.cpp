#include "stencil_dse/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

namespace {

using nlohmann::ordered_json;

std::string tile_column(const TileConfig& t) {
  // Compact tile spelling for CSV cells: strategy:t_t/t_s1/t_s2[/t_s3]:k
  std::string s = to_string(t.strategy);
  s += ":" + std::to_string(t.t_t) + "/" + std::to_string(t.t_s1) + "/" + std::to_string(t.t_s2);
  if (t.t_s3) s += "/" + std::to_string(*t.t_s3);
  s += ":" + std::to_string(t.k);
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

ordered_json to_json(const TimeBreakdown& t) {
  ordered_json j;
  j["t_alg_ns"] = t.t_alg;
  j["t_ideal_ns"] = t.t_ideal;
  j["t_overhead_ns"] = t.t_overhead;
  j["t_sync_total_ns"] = t.t_sync_total;
  j["t_compute_total_ns"] = t.t_compute_total;
  j["t_transfer_total_ns"] = t.t_transfer_total;
  j["t_prism_ns"] = t.t_prism;
  j["compute_bound"] = t.compute_bound;
  j["gflops"] = t.gflops;
  return j;
}

ordered_json to_json(const EnergyBreakdown& e) {
  ordered_json j;
  j["e_dynamic_compute_nj"] = e.e_dynamic_compute;
  j["e_dynamic_memory_nj"] = e.e_dynamic_memory;
  j["e_static_nj"] = e.e_static;
  j["e_total_nj"] = e.e_total;
  j["edp_nj_ns"] = e.edp;
  return j;
}

ordered_json to_json(const FootprintReport& f) {
  ordered_json j;
  j["bytes_per_tile"] = f.bytes_per_tile;
  j["bytes_with_k"] = f.bytes_with_k;
  j["traffic_bytes_per_tile"] = f.traffic_bytes_per_tile;
  j["feasible"] = f.feasible;
  j["binding_constraint"] = to_string(f.binding_constraint);
  return j;
}

ordered_json predict_json(const TimeBreakdown& t, const EnergyBreakdown& e,
                          const FootprintReport& f) {
  ordered_json j;
  j["time"] = to_json(t);
  j["energy"] = to_json(e);
  j["footprint"] = to_json(f);
  return j;
}

ordered_json to_json(const EvaluatedTile& e) {
  ordered_json j;
  j["tile"] = to_json(e.tile);
  j["objective_value"] = e.objective_value;
  j["time"] = to_json(e.time);
  j["energy"] = to_json(e.energy);
  j["footprint"] = to_json(e.footprint);
  return j;
}

ordered_json to_json(const TuneResult& r) {
  ordered_json j;
  j["objective"] = to_string(r.objective);
  j["evaluated_count"] = r.evaluated_count;
  j["feasible_count"] = r.feasible_count;
  j["best"] = to_json(r.best);
  ordered_json top = ordered_json::array();
  for (const auto& e : r.top_k) top.push_back(to_json(e));
  j["top_k"] = top;
  return j;
}

ordered_json to_json(const SupertuneResult& r) {
  ordered_json j;
  j["winner_strategy"] = to_string(r.overall.best.tile.strategy);
  j["overall"] = to_json(r.overall);
  ordered_json per = ordered_json::array();
  for (const auto& [strategy, result] : r.per_strategy) {
    ordered_json s;
    s["strategy"] = to_string(strategy);
    if (result) {
      s["feasible"] = true;
      s["best_objective_value"] = result->best.objective_value;
      s["best"] = to_json(result->best);
    } else {
      s["feasible"] = false;
    }
    per.push_back(std::move(s));
  }
  j["per_strategy"] = per;
  return j;
}

ordered_json to_json(const BottleneckReport& r) {
  ordered_json j;
  ordered_json components;
  components["sync_ns"] = r.sync_ns;
  components["transfer_excess_ns"] = r.transfer_excess_ns;
  components["padding_ns"] = r.padding_ns;
  components["quantization_ns"] = r.quantization_ns;
  j["components"] = components;
  j["overhead_total_ns"] = r.overhead_total_ns;
  ordered_json binding = ordered_json::array();
  for (Resource res : r.binding_resources) binding.push_back(to_string(res));
  j["binding_resources"] = binding;
  ordered_json slack;
  for (const auto& [res, s] : r.slack) slack[to_string(res)] = s;
  j["slack"] = slack;
  j["time"] = to_json(r.time);
  return j;
}

ordered_json to_json(const HyperthreadingSweep& s) {
  ordered_json j;
  ordered_json entries = ordered_json::array();
  for (const auto& e : s.entries) {
    ordered_json row;
    row["k"] = e.k;
    row["feasible"] = e.feasible;
    if (e.time) row["time"] = to_json(*e.time);
    entries.push_back(std::move(row));
  }
  j["entries"] = entries;
  if (s.best_k) j["best_k"] = *s.best_k;
  return j;
}

ordered_json to_json(const DesignPoint& p) {
  ordered_json j;
  j["arch"] = to_json(p.arch);
  j["area_mm2"] = p.area_mm2;
  j["weighted_gflops"] = p.weighted_gflops;
  ordered_json per = ordered_json::array();
  for (const auto& pk : p.per_kernel) {
    ordered_json row;
    row["kernel"] = pk.kernel;
    row["gflops"] = pk.gflops;
    if (pk.best_tile) row["best_tile"] = to_json(*pk.best_tile);
    per.push_back(std::move(row));
  }
  j["per_kernel"] = per;
  return j;
}

ordered_json to_json(const ParetoSet& p) {
  ordered_json j = ordered_json::array();
  for (const auto& point : p.points) j.push_back(to_json(point));
  return j;
}

std::string tune_csv(const TuneResult& r) {
  std::ostringstream out;
  out << "rank,objective_value,strategy,t_t,t_s1,t_s2,t_s3,k,t_alg_ns,gflops,"
         "e_total_nj,edp_nj_ns,footprint_bytes,compute_bound\n";
  int rank = 1;
  for (const auto& e : r.top_k) {
    out << rank++ << ',' << format_double(e.objective_value) << ',' << to_string(e.tile.strategy)
        << ',' << e.tile.t_t << ',' << e.tile.t_s1 << ',' << e.tile.t_s2 << ','
        << e.tile.t_s3_or(0) << ',' << e.tile.k << ',' << format_double(e.time.t_alg) << ','
        << format_double(e.time.gflops) << ',' << format_double(e.energy.e_total) << ','
        << format_double(e.energy.edp) << ',' << e.footprint.bytes_per_tile << ','
        << (e.time.compute_bound ? 1 : 0) << '\n';
  }
  return out.str();
}

namespace {

void design_point_row(std::ostringstream& out, const DesignPoint& p,
                      const std::vector<std::string>& kernel_names) {
  out << format_double(p.area_mm2) << ',' << format_double(p.weighted_gflops) << ',' << p.arch.n_sm
      << ',' << p.arch.n_v << ',' << p.arch.m_sm_kib() << ',' << p.arch.l2_kib() << ','
      << p.arch.mem_ctrl_count;
  for (const auto& name : kernel_names) {
    const DesignPoint::PerKernel* found = nullptr;
    for (const auto& pk : p.per_kernel) {
      if (pk.kernel == name) {
        found = &pk;
        break;
      }
    }
    if (found == nullptr) throw InternalError("design point lacks kernel '" + name + "'");
    out << ',' << format_double(found->gflops) << ','
        << (found->best_tile ? tile_column(*found->best_tile) : "none");
  }
  out << '\n';
}

std::string design_header(const std::vector<std::string>& kernel_names) {
  std::string h = "area_mm2,weighted_gflops,n_sm,n_v,m_sm_kib,l2_kib,mem_ctrl_count";
  for (const auto& name : kernel_names) {
    h += "," + name + "_gflops," + name + "_best_tile";
  }
  return h + "\n";
}

}  // namespace

std::string design_points_csv(const std::vector<DesignPoint>& points,
                              const std::vector<std::string>& kernel_names) {
  std::ostringstream out;
  out << design_header(kernel_names);
  for (const auto& p : points) design_point_row(out, p, kernel_names);
  return out.str();
}

std::string pareto_csv(const ParetoSet& frontier, const std::vector<std::string>& kernel_names) {
  return design_points_csv(frontier.points, kernel_names);
}

std::string resource_allocation_csv(const std::vector<DesignPoint>& points,
                                    const AreaCoeffs& coeffs) {
  std::ostringstream out;
  out << "area_mm2,weighted_gflops,n_sm,n_v,m_sm_kib,frac_memory,frac_vector,frac_other\n";
  for (const auto& p : points) {
    const ResourceAllocation ra = resource_allocation(p, coeffs);
    out << format_double(p.area_mm2) << ',' << format_double(p.weighted_gflops) << ','
        << p.arch.n_sm << ',' << p.arch.n_v << ',' << p.arch.m_sm_kib() << ','
        << format_double(ra.frac_memory) << ',' << format_double(ra.frac_vector) << ','
        << format_double(ra.frac_other) << '\n';
  }
  return out.str();
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CSV file '" + path.string() + "'");
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw ParseError("CSV file '" + path.string() + "' has no header");
  return table;
}

std::vector<DesignPoint> design_points_from_csv(const CsvTable& table) {
  auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      if (table.header[i] == name) return i;
    }
    throw ParseError("points CSV is missing column '" + name + "'");
  };
  const std::size_t c_area = column("area_mm2");
  const std::size_t c_gflops = column("weighted_gflops");
  const std::size_t c_nsm = column("n_sm");
  const std::size_t c_nv = column("n_v");
  const std::size_t c_msm = column("m_sm_kib");
  const std::size_t c_l2 = column("l2_kib");
  const std::size_t c_mc = column("mem_ctrl_count");

  std::vector<DesignPoint> points;
  for (const auto& row : table.rows) {
    if (row.size() < table.header.size()) throw ParseError("points CSV has a short row");
    try {
      DesignPoint p;
      p.area_mm2 = std::stod(row[c_area]);
      p.weighted_gflops = std::stod(row[c_gflops]);
      p.arch.n_sm = std::stoll(row[c_nsm]);
      p.arch.n_v = std::stoll(row[c_nv]);
      p.arch.m_sm = std::stoll(row[c_msm]) * 1024;
      p.arch.l2_bytes = std::stoll(row[c_l2]) * 1024;
      p.arch.mem_ctrl_count = std::stoll(row[c_mc]);
      points.push_back(std::move(p));
    } catch (const std::exception&) {
      throw ParseError("points CSV has a malformed numeric cell");
    }
  }
  if (points.empty()) throw ParseError("points CSV contains no rows");
  return points;
}

std::vector<std::size_t> pareto_row_indices(const CsvTable& table) {
  const std::vector<DesignPoint> points = design_points_from_csv(table);
  const ParetoSet frontier = pareto(points);

  std::vector<std::size_t> indices;
  std::vector<bool> used(points.size(), false);
  for (const auto& fp : frontier.points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (used[i]) continue;
      if (points[i].area_mm2 == fp.area_mm2 &&
          points[i].weighted_gflops == fp.weighted_gflops &&
          points[i].arch.order_key() == fp.arch.order_key()) {
        indices.push_back(i);
        used[i] = true;
        break;
      }
    }
  }
  if (indices.size() != frontier.points.size()) {
    throw InternalError("pareto frontier points could not be matched back to CSV rows");
  }
  return indices;
}

}  // namespace stencil_dse
