#include "stencil_dse/config_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

namespace {

using nlohmann::json;

const json& get_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'");
  return *it;
}

std::int64_t get_int(const json& j, const char* key) {
  const json& v = get_field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("key '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

double get_number(const json& j, const char* key) {
  const json& v = get_field(j, key);
  if (!v.is_number()) throw ParseError(std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = get_field(j, key);
  if (!v.is_string()) throw ParseError(std::string("key '") + key + "' must be a string");
  return v.get<std::string>();
}

void expect_object(const json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
  }
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file '" + path.string() + "' for writing");
  out << text;
  if (!out) throw ParseError("failed writing '" + path.string() + "'");
}

StencilKernel kernel_from_json(const json& j) {
  expect_object(j, "kernel");
  StencilKernel k;
  k.name = get_string(j, "name");
  k.space_dims = static_cast<int>(get_int(j, "space_dims"));
  const json& sizes = get_field(j, "sizes");
  if (!sizes.is_array() || sizes.empty() || sizes.size() > 3) {
    throw ParseError("key 'sizes' must be an array of 2 or 3 integers");
  }
  for (const auto& s : sizes) {
    if (!s.is_number_integer()) throw ParseError("key 'sizes' must contain integers");
  }
  k.s1 = sizes.at(0).get<std::int64_t>();
  if (sizes.size() >= 2) k.s2 = sizes.at(1).get<std::int64_t>();
  if (sizes.size() == 3) k.s3 = sizes.at(2).get<std::int64_t>();
  if (sizes.size() < 2) throw ParseError("key 'sizes' must contain at least two entries");
  k.time_steps = get_int(j, "time_steps");
  k.stencil_order = get_int(j, "stencil_order");
  k.ops_per_point = get_int(j, "ops_per_point");
  k.bytes_per_element = get_int(j, "bytes_per_element");
  k.live_buffers = get_int(j, "live_buffers");
  validate(k);
  return k;
}

ArchConfig arch_from_json(const json& j) {
  expect_object(j, "arch");
  ArchConfig a;
  a.n_sm = get_int(j, "n_sm");
  a.n_v = get_int(j, "n_v");
  const std::int64_t m_sm_kib = get_int(j, "m_sm_kib");
  if (m_sm_kib < 0) throw ValidationError("m_sm", "must be >= 1 KiB");
  a.m_sm = m_sm_kib * 1024;
  a.bw_global = get_number(j, "bw_global_gb_s");  // GB/s == bytes/ns
  const std::int64_t l2_kib = get_int(j, "l2_kib");
  if (l2_kib < 0) throw ValidationError("l2_bytes", "must be >= 0");
  a.l2_bytes = l2_kib * 1024;
  a.mem_ctrl_count = get_int(j, "mem_ctrl_count");
  validate(a);
  return a;
}

AreaCoeffs area_coeffs_from_json(const json& j) {
  expect_object(j, "area_coeffs");
  AreaCoeffs c;
  c.a_fixed = get_number(j, "a_fixed");
  c.a_sm_fixed = get_number(j, "a_sm_fixed");
  c.a_lane = get_number(j, "a_lane");
  c.a_shmem = get_number(j, "a_shmem_kib");
  c.a_l2 = get_number(j, "a_l2_kib");
  c.a_mc = get_number(j, "a_mc");
  validate(c);
  return c;
}

CalibrationSet calibration_from_json(const json& j) {
  expect_object(j, "calibration");
  CalibrationSet c;
  c.c_iter = get_number(j, "c_iter_ns");
  c.t_sync = get_number(j, "t_sync_ns");
  c.e_op = get_number(j, "e_op_pj") * 1e-3;      // pJ -> nJ
  c.e_glob = get_number(j, "e_glob_pj_b") * 1e-3;
  c.e_sh = get_number(j, "e_sh_pj_b") * 1e-3;
  c.p_static = get_number(j, "p_static_w");
  c.area_coeffs = area_coeffs_from_json(get_field(j, "area_coeffs"));
  validate(c);
  return c;
}

TileConfig tile_from_json(const json& j) {
  expect_object(j, "tile");
  TileConfig t;
  t.strategy = strategy_from_string(get_string(j, "strategy"));
  t.t_s1 = get_int(j, "t_s1");
  t.t_s2 = get_int(j, "t_s2");
  if (j.contains("t_s3")) t.t_s3 = get_int(j, "t_s3");
  t.t_t = get_int(j, "t_t");
  t.k = get_int(j, "k");
  validate(t);
  return t;
}

StencilKernel load_kernel(const std::filesystem::path& path) {
  return kernel_from_json(read_json_file(path));
}

ArchConfig load_arch(const std::filesystem::path& path) {
  return arch_from_json(read_json_file(path));
}

CalibrationSet load_calibration(const std::filesystem::path& path) {
  return calibration_from_json(read_json_file(path));
}

TileConfig load_tile(const std::filesystem::path& path) {
  return tile_from_json(read_json_file(path));
}

AreaCoeffs load_area_coeffs(const std::filesystem::path& path) {
  return area_coeffs_from_json(read_json_file(path));
}

WorkloadSuite load_suite(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) {
    throw ParseError("suite file must be a JSON array of {kernel, weight}");
  }
  if (j.empty()) throw ValidationError("entries", "suite must contain at least one kernel");
  const std::filesystem::path base = path.parent_path();
  WorkloadSuite suite;
  double total = 0.0;
  for (const auto& entry : j) {
    expect_object(entry, "suite entry");
    WorkloadSuite::Entry e;
    std::filesystem::path kpath = get_string(entry, "kernel");
    if (kpath.is_relative()) kpath = base / kpath;
    e.kernel = load_kernel(kpath);
    e.weight = get_number(entry, "weight");
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw ValidationError("weight", "must be > 0");
    }
    total += e.weight;
    suite.entries.push_back(std::move(e));
  }
  for (auto& e : suite.entries) e.weight /= total;
  validate(suite);
  return suite;
}

std::vector<AreaAnchor> load_anchors(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_array() || j.empty()) {
    throw ParseError("anchor file must be a non-empty JSON array of {arch, area_mm2}");
  }
  const std::filesystem::path base = path.parent_path();
  std::vector<AreaAnchor> anchors;
  for (const auto& entry : j) {
    expect_object(entry, "anchor entry");
    AreaAnchor a;
    std::filesystem::path apath = get_string(entry, "arch");
    if (apath.is_relative()) apath = base / apath;
    a.arch = load_arch(apath);
    a.area_mm2 = get_number(entry, "area_mm2");
    if (!std::isfinite(a.area_mm2) || a.area_mm2 <= 0.0) {
      throw ValidationError("area_mm2", "must be > 0");
    }
    anchors.push_back(std::move(a));
  }
  return anchors;
}

nlohmann::ordered_json to_json(const StencilKernel& k) {
  nlohmann::ordered_json j;
  j["name"] = k.name;
  j["space_dims"] = k.space_dims;
  std::vector<std::int64_t> sizes{k.s1, k.s2};
  if (k.s3) sizes.push_back(*k.s3);
  j["sizes"] = sizes;
  j["time_steps"] = k.time_steps;
  j["stencil_order"] = k.stencil_order;
  j["ops_per_point"] = k.ops_per_point;
  j["bytes_per_element"] = k.bytes_per_element;
  j["live_buffers"] = k.live_buffers;
  return j;
}

nlohmann::ordered_json to_json(const ArchConfig& a) {
  nlohmann::ordered_json j;
  j["n_sm"] = a.n_sm;
  j["n_v"] = a.n_v;
  j["m_sm_kib"] = a.m_sm_kib();
  j["bw_global_gb_s"] = a.bw_global;
  j["l2_kib"] = a.l2_kib();
  j["mem_ctrl_count"] = a.mem_ctrl_count;
  return j;
}

nlohmann::ordered_json to_json(const AreaCoeffs& c) {
  nlohmann::ordered_json j;
  j["a_fixed"] = c.a_fixed;
  j["a_sm_fixed"] = c.a_sm_fixed;
  j["a_lane"] = c.a_lane;
  j["a_shmem_kib"] = c.a_shmem;
  j["a_l2_kib"] = c.a_l2;
  j["a_mc"] = c.a_mc;
  return j;
}

nlohmann::ordered_json to_json(const CalibrationSet& c) {
  nlohmann::ordered_json j;
  j["c_iter_ns"] = c.c_iter;
  j["t_sync_ns"] = c.t_sync;
  j["e_op_pj"] = c.e_op * 1e3;
  j["e_glob_pj_b"] = c.e_glob * 1e3;
  j["e_sh_pj_b"] = c.e_sh * 1e3;
  j["p_static_w"] = c.p_static;
  j["area_coeffs"] = to_json(c.area_coeffs);
  return j;
}

nlohmann::ordered_json to_json(const TileConfig& t) {
  nlohmann::ordered_json j;
  j["strategy"] = to_string(t.strategy);
  j["t_s1"] = t.t_s1;
  j["t_s2"] = t.t_s2;
  if (t.t_s3) j["t_s3"] = *t.t_s3;
  j["t_t"] = t.t_t;
  j["k"] = t.k;
  return j;
}

}  // namespace stencil_dse
