#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "stencil_dse/types.hpp"

namespace stencil_dse {

// All loaders validate the resulting value before returning it; no invalid
// value escapes this module. File-level problems throw ParseError, invariant
// violations throw ValidationError naming the field.

StencilKernel load_kernel(const std::filesystem::path& path);
ArchConfig load_arch(const std::filesystem::path& path);
CalibrationSet load_calibration(const std::filesystem::path& path);
TileConfig load_tile(const std::filesystem::path& path);
AreaCoeffs load_area_coeffs(const std::filesystem::path& path);

// Suite files reference kernel files by path, resolved relative to the suite
// file's directory. Weights are normalized to sum to 1.
WorkloadSuite load_suite(const std::filesystem::path& path);

// Parse from an in-memory JSON value (used by the loaders and by tests).
StencilKernel kernel_from_json(const nlohmann::json& j);
ArchConfig arch_from_json(const nlohmann::json& j);
CalibrationSet calibration_from_json(const nlohmann::json& j);
TileConfig tile_from_json(const nlohmann::json& j);
AreaCoeffs area_coeffs_from_json(const nlohmann::json& j);

// Serialization, inverse of the *_from_json parsers up to value equality.
nlohmann::ordered_json to_json(const StencilKernel& k);
nlohmann::ordered_json to_json(const ArchConfig& a);
nlohmann::ordered_json to_json(const CalibrationSet& c);
nlohmann::ordered_json to_json(const TileConfig& t);
nlohmann::ordered_json to_json(const AreaCoeffs& c);

// Area-calibration anchors: a JSON array of {arch: path, area_mm2}, arch
// paths resolved relative to the anchor file's directory.
struct AreaAnchor {
  ArchConfig arch;
  double area_mm2 = 0.0;
};
std::vector<AreaAnchor> load_anchors(const std::filesystem::path& path);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace stencil_dse
