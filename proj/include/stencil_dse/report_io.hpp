#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stencil_dse/bottleneck.hpp"
#include "stencil_dse/codesign.hpp"
#include "stencil_dse/tuner.hpp"

namespace stencil_dse {

// Deterministic double formatting for CSV output ("%.10g").
std::string format_double(double v);

nlohmann::ordered_json to_json(const TimeBreakdown& t);
nlohmann::ordered_json to_json(const EnergyBreakdown& e);
nlohmann::ordered_json to_json(const FootprintReport& f);
nlohmann::ordered_json to_json(const EvaluatedTile& e);
nlohmann::ordered_json to_json(const TuneResult& r);
nlohmann::ordered_json to_json(const SupertuneResult& r);
nlohmann::ordered_json to_json(const BottleneckReport& r);
nlohmann::ordered_json to_json(const HyperthreadingSweep& s);
nlohmann::ordered_json to_json(const DesignPoint& p);
nlohmann::ordered_json to_json(const ParetoSet& p);

// predict subcommand payload: time + energy + footprint for one point.
nlohmann::ordered_json predict_json(const TimeBreakdown& t, const EnergyBreakdown& e,
                                    const FootprintReport& f);

// CSV tables. kernel_names fixes the per-kernel column set (suite order).
std::string tune_csv(const TuneResult& r);
std::string design_points_csv(const std::vector<DesignPoint>& points,
                              const std::vector<std::string>& kernel_names);
std::string pareto_csv(const ParetoSet& frontier, const std::vector<std::string>& kernel_names);
std::string resource_allocation_csv(const std::vector<DesignPoint>& points,
                                    const AreaCoeffs& coeffs);

// Reads a design-point CSV (as produced above) back for the pareto
// subcommand; per-kernel columns are preserved verbatim.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable read_csv(const std::filesystem::path& path);
std::vector<DesignPoint> design_points_from_csv(const CsvTable& table);

// Indices of the table rows that survive the dominance filter, in frontier
// order (area ascending).
std::vector<std::size_t> pareto_row_indices(const CsvTable& table);

}  // namespace stencil_dse
