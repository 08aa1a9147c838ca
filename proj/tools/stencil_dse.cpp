// stencil-dse: analytical design-space exploration for GPU stencil tilings.
//
// Subcommands: predict, tune, supertune, codesign, bottleneck,
// calibrate-area, pareto. All file formats are documented in README.md.
// Exit codes: 0 success, 2 infeasible/empty space, 3 input validation error,
// 4 internal invariant breach.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stencil_dse/area_model.hpp"
#include "stencil_dse/bottleneck.hpp"
#include "stencil_dse/codesign.hpp"
#include "stencil_dse/config_io.hpp"
#include "stencil_dse/errors.hpp"
#include "stencil_dse/report_io.hpp"
#include "stencil_dse/tuner.hpp"

namespace sd = stencil_dse;

namespace {

void emit(const nlohmann::ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    sd::write_text_file(out_path, text);
  }
}

std::pair<std::int64_t, std::int64_t> parse_k_range(const std::string& spec) {
  const auto pos = spec.find("..");
  if (pos == std::string::npos) {
    throw sd::DomainError("--sweep-k expects a range like 1..8");
  }
  try {
    const std::int64_t lo = std::stoll(spec.substr(0, pos));
    const std::int64_t hi = std::stoll(spec.substr(pos + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw sd::DomainError("--sweep-k expects a range like 1..8");
  }
}

std::vector<std::string> split_csv_list(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Analytical design-space exploration for GPU stencil tilings"};
  app.require_subcommand(1);

  std::string kernel_path, arch_path, calib_path, tile_path, grid_path, out_path;
  std::string out_json_path, out_csv_path;
  std::string objective_name = "time";
  std::size_t top_k = 10;

  // ---- predict ----
  auto* predict = app.add_subcommand("predict", "Evaluate one (kernel, arch, tile) point");
  predict->add_option("--kernel", kernel_path)->required();
  predict->add_option("--arch", arch_path)->required();
  predict->add_option("--calib", calib_path)->required();
  predict->add_option("--tile", tile_path)->required();
  predict->add_option("--out", out_path, "Output JSON path (default stdout)");

  // ---- tune ----
  auto* tune_cmd = app.add_subcommand("tune", "Exhaustive tile-size tuning on one grid");
  tune_cmd->add_option("--kernel", kernel_path)->required();
  tune_cmd->add_option("--arch", arch_path)->required();
  tune_cmd->add_option("--calib", calib_path)->required();
  tune_cmd->add_option("--grid", grid_path)->required();
  tune_cmd->add_option("--objective", objective_name, "time | energy | edp");
  tune_cmd->add_option("--top-k", top_k, "Entries to keep in the ranking");
  tune_cmd->add_option("--out-json", out_json_path, "TuneResult JSON path (default stdout)");
  tune_cmd->add_option("--out-csv", out_csv_path, "Top-K CSV path");

  // ---- supertune ----
  auto* supertune_cmd =
      app.add_subcommand("supertune", "Tuning across strategies (min over per-strategy tunes)");
  supertune_cmd->add_option("--kernel", kernel_path)->required();
  supertune_cmd->add_option("--arch", arch_path)->required();
  supertune_cmd->add_option("--calib", calib_path)->required();
  supertune_cmd->add_option("--grid", grid_path, "Grid file with one grid per strategy")
      ->required();
  supertune_cmd->add_option("--objective", objective_name, "time | energy | edp");
  supertune_cmd->add_option("--top-k", top_k, "Entries to keep in the ranking");
  supertune_cmd->add_option("--out-json", out_json_path, "Result JSON path (default stdout)");
  supertune_cmd->add_option("--out-csv", out_csv_path, "Merged top-K CSV path");

  // ---- codesign ----
  std::string suite_path, space_path, coeffs_path;
  std::string out_points_path, out_pareto_csv_path, out_pareto_json_path, out_alloc_path;
  double budget = 0.0;
  std::size_t prune_keep = 0;
  auto* codesign_cmd =
      app.add_subcommand("codesign", "Architecture search under an area budget");
  codesign_cmd->add_option("--suite", suite_path)->required();
  codesign_cmd->add_option("--space", space_path)->required();
  codesign_cmd->add_option("--coeffs", coeffs_path, "Area coefficients JSON")->required();
  codesign_cmd->add_option("--calib", calib_path)->required();
  codesign_cmd->add_option("--grid", grid_path, "Tile grid file (one grid per strategy)")
      ->required();
  codesign_cmd->add_option("--budget", budget, "Area budget in mm^2")->required();
  codesign_cmd->add_option("--objective", objective_name, "time | energy | edp");
  codesign_cmd->add_option("--prune-keep", prune_keep,
                           "Closed-form pruner shortlist size (0 = exact)");
  codesign_cmd->add_option("--out-points", out_points_path, "All DesignPoints CSV");
  codesign_cmd->add_option("--out-pareto-csv", out_pareto_csv_path, "Pareto frontier CSV");
  codesign_cmd->add_option("--out-pareto-json", out_pareto_json_path, "Pareto frontier JSON");
  codesign_cmd->add_option("--out-alloc", out_alloc_path, "Resource-allocation CSV");

  // ---- bottleneck ----
  std::string sweep_spec;
  auto* bottleneck_cmd =
      app.add_subcommand("bottleneck", "Overhead decomposition and resource slack");
  bottleneck_cmd->add_option("--kernel", kernel_path)->required();
  bottleneck_cmd->add_option("--arch", arch_path)->required();
  bottleneck_cmd->add_option("--calib", calib_path)->required();
  bottleneck_cmd->add_option("--tile", tile_path)->required();
  bottleneck_cmd->add_option("--sweep-k", sweep_spec, "Hyperthreading sweep range, e.g. 1..8");
  bottleneck_cmd->add_option("--out", out_path, "Output JSON path (default stdout)");

  // ---- calibrate-area ----
  std::string anchors_path, free_list, fixed_path;
  auto* calibrate_cmd = app.add_subcommand("calibrate-area", "Fit area coefficients to anchors");
  calibrate_cmd->add_option("--anchors", anchors_path)->required();
  calibrate_cmd->add_option("--free", free_list, "Comma-separated coefficient names")->required();
  calibrate_cmd->add_option("--fixed", fixed_path, "AreaCoeffs JSON holding fixed values");
  calibrate_cmd->add_option("--out", out_path, "Fitted AreaCoeffs JSON path (default stdout)");

  // ---- pareto ----
  std::string points_path;
  auto* pareto_cmd = app.add_subcommand("pareto", "Dominance filter over a design-point CSV");
  pareto_cmd->add_option("--points", points_path)->required();
  pareto_cmd->add_option("--out", out_path, "Frontier CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (predict->parsed()) {
    const auto kernel = sd::load_kernel(kernel_path);
    const auto arch = sd::load_arch(arch_path);
    const auto calib = sd::load_calibration(calib_path);
    const auto tile = sd::load_tile(tile_path);
    const auto time = sd::t_alg(kernel, arch, calib, tile);
    const auto en = sd::energy_with_time(kernel, calib, tile, time);
    const auto fp = sd::feasible(kernel, arch, tile);
    emit(sd::predict_json(time, en, fp), out_path);
    return 0;
  }

  if (tune_cmd->parsed() || supertune_cmd->parsed()) {
    const auto kernel = sd::load_kernel(kernel_path);
    const auto arch = sd::load_arch(arch_path);
    const auto calib = sd::load_calibration(calib_path);
    const auto grids = sd::load_grids(grid_path);
    const auto objective = sd::objective_from_string(objective_name);
    if (tune_cmd->parsed()) {
      if (grids.size() != 1) {
        throw sd::DomainError("tune expects exactly one grid; use supertune for several");
      }
      const auto result = sd::tune(kernel, arch, calib, grids.front(), objective, top_k);
      emit(sd::to_json(result), out_json_path);
      if (!out_csv_path.empty()) sd::write_text_file(out_csv_path, sd::tune_csv(result));
    } else {
      const auto result = sd::supertune(kernel, arch, calib, grids, objective, top_k);
      emit(sd::to_json(result), out_json_path);
      if (!out_csv_path.empty()) sd::write_text_file(out_csv_path, sd::tune_csv(result.overall));
    }
    return 0;
  }

  if (codesign_cmd->parsed()) {
    const auto suite = sd::load_suite(suite_path);
    const auto space = sd::load_arch_grid(space_path);
    const auto coeffs = sd::load_area_coeffs(coeffs_path);
    const auto calib = sd::load_calibration(calib_path);
    const auto grids = sd::load_grids(grid_path);
    const auto objective = sd::objective_from_string(objective_name);
    const auto points =
        sd::codesign(suite, space, coeffs, calib, grids, budget, objective, prune_keep);
    const auto frontier = sd::pareto(points);

    std::vector<std::string> kernel_names;
    for (const auto& e : suite.entries) kernel_names.push_back(e.kernel.name);
    if (!out_points_path.empty()) {
      sd::write_text_file(out_points_path, sd::design_points_csv(points, kernel_names));
    }
    if (!out_pareto_csv_path.empty()) {
      sd::write_text_file(out_pareto_csv_path, sd::pareto_csv(frontier, kernel_names));
    }
    if (!out_alloc_path.empty()) {
      sd::write_text_file(out_alloc_path, sd::resource_allocation_csv(points, coeffs));
    }
    emit(sd::to_json(frontier), out_pareto_json_path);
    return 0;
  }

  if (bottleneck_cmd->parsed()) {
    const auto kernel = sd::load_kernel(kernel_path);
    const auto arch = sd::load_arch(arch_path);
    const auto calib = sd::load_calibration(calib_path);
    const auto tile = sd::load_tile(tile_path);
    const auto report = sd::decompose(kernel, arch, calib, tile);
    nlohmann::ordered_json j = sd::to_json(report);
    if (!sweep_spec.empty()) {
      const auto [lo, hi] = parse_k_range(sweep_spec);
      j["hyperthreading_sweep"] = sd::to_json(sd::hyperthreading_sweep(kernel, arch, calib, tile, lo, hi));
    }
    emit(j, out_path);
    return 0;
  }

  if (calibrate_cmd->parsed()) {
    const auto anchors = sd::load_anchors(anchors_path);
    const auto free_names = split_csv_list(free_list);
    sd::AreaCoeffs fixed;
    if (!fixed_path.empty()) fixed = sd::load_area_coeffs(fixed_path);
    const auto fitted = sd::calibrate(anchors, free_names, fixed);
    emit(sd::to_json(fitted), out_path);
    return 0;
  }

  if (pareto_cmd->parsed()) {
    const auto table = sd::read_csv(points_path);
    const auto surviving = sd::pareto_row_indices(table);

    // Preserve the input rows verbatim: emit exactly the surviving lines.
    std::ostringstream out;
    for (const auto& cell : table.header) {
      if (&cell != &table.header.front()) out << ',';
      out << cell;
    }
    out << '\n';
    for (std::size_t idx : surviving) {
      const auto& row = table.rows[idx];
      for (const auto& cell : row) {
        if (&cell != &row.front()) out << ',';
        out << cell;
      }
      out << '\n';
    }
    if (out_path.empty()) {
      std::cout << out.str();
    } else {
      sd::write_text_file(out_path, out.str());
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sd::InfeasibleError& e) {
    std::fprintf(stderr, "stencil-dse: %s\n", e.what());
    return 2;
  } catch (const sd::EmptyFeasibleSpace& e) {
    std::fprintf(stderr, "stencil-dse: %s\n", e.what());
    return 2;
  } catch (const sd::EmptyDesignSpace& e) {
    std::fprintf(stderr, "stencil-dse: %s\n", e.what());
    return 2;
  } catch (const sd::InternalError& e) {
    std::fprintf(stderr, "stencil-dse: %s\n", e.what());
    return 4;
  } catch (const sd::Error& e) {
    // ParseError, ValidationError, DomainError, SizeError, RankError,
    // NegativeCoeffError: the input is at fault.
    std::fprintf(stderr, "stencil-dse: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "stencil-dse: InternalError: %s\n", e.what());
    return 4;
  }
}
