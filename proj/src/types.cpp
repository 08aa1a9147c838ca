#include "stencil_dse/types.hpp"

#include <cctype>
#include <cmath>

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::HexHybrid:
      return "hex_hybrid";
    case Strategy::RectWavefront:
      return "rect_wavefront";
  }
  return "unknown";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "hex_hybrid") return Strategy::HexHybrid;
  if (s == "rect_wavefront") return Strategy::RectWavefront;
  throw DomainError("unknown strategy '" + s + "' (expected hex_hybrid or rect_wavefront)");
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

void require(bool ok, const char* field, const std::string& message) {
  if (!ok) throw ValidationError(field, message);
}

}  // namespace

void validate(const StencilKernel& k) {
  require(is_identifier(k.name), "name", "must be a non-empty identifier");
  require(k.space_dims == 2 || k.space_dims == 3, "space_dims", "must be 2 or 3");
  require(k.s1 >= 1, "sizes", "all sizes must be >= 1");
  require(k.s2 >= 1, "sizes", "all sizes must be >= 1");
  if (k.space_dims == 3) {
    require(k.s3.has_value(), "sizes", "3D kernel requires three sizes");
    require(*k.s3 >= 1, "sizes", "all sizes must be >= 1");
  } else {
    require(!k.s3.has_value(), "sizes", "2D kernel takes exactly two sizes");
  }
  require(k.time_steps >= 1, "time_steps", "must be >= 1");
  require(k.stencil_order >= 0, "stencil_order", "must be >= 0");
  const std::int64_t halo = 2 * k.stencil_order;
  require(k.s1 > halo, "sizes", "sizes must exceed 2*stencil_order");
  require(k.s2 > halo, "sizes", "sizes must exceed 2*stencil_order");
  if (k.s3) require(*k.s3 > halo, "sizes", "sizes must exceed 2*stencil_order");
  require(k.ops_per_point >= 1, "ops_per_point", "must be >= 1");
  require(k.bytes_per_element == 4 || k.bytes_per_element == 8, "bytes_per_element",
          "must be 4 or 8");
  require(k.live_buffers >= 1, "live_buffers", "must be >= 1");
}

std::array<double, 6> ArchConfig::order_key() const {
  return {static_cast<double>(n_sm), static_cast<double>(n_v), static_cast<double>(m_sm),
          static_cast<double>(l2_bytes), static_cast<double>(mem_ctrl_count), bw_global};
}

void validate(const ArchConfig& a) {
  require(a.n_sm >= 1, "n_sm", "must be >= 1");
  require(a.n_v >= 1, "n_v", "must be >= 1");
  require(a.n_v % 32 == 0, "n_v", "must be multiple of 32");
  require(a.m_sm >= 1, "m_sm", "must be >= 1");
  require(a.m_sm % 1024 == 0, "m_sm", "must be multiple of 1024");
  require(std::isfinite(a.bw_global) && a.bw_global > 0.0, "bw_global",
          "must be positive and finite");
  require(a.l2_bytes >= 0, "l2_bytes", "must be >= 0");
  require(a.mem_ctrl_count >= 1, "mem_ctrl_count", "must be >= 1");
}

std::array<std::int64_t, 6> TileConfig::tie_key() const {
  return {static_cast<std::int64_t>(strategy), t_t, t_s1, t_s2, t_s3_or(0), k};
}

bool tile_less(const TileConfig& a, const TileConfig& b) { return a.tie_key() < b.tie_key(); }
bool tile_equal(const TileConfig& a, const TileConfig& b) { return a.tie_key() == b.tie_key(); }

void validate(const TileConfig& t) {
  require(t.t_s1 >= 1, "t_s1", "must be >= 1");
  require(t.t_s2 >= 1, "t_s2", "must be >= 1");
  if (t.t_s3) require(*t.t_s3 >= 1, "t_s3", "must be >= 1");
  require(t.t_t >= 1, "t_t", "must be >= 1");
  require(t.k >= 1, "k", "must be >= 1");
  if (t.strategy == Strategy::HexHybrid) {
    require(t.t_t % 2 == 0, "t_t", "must be even for hex_hybrid");
  }
}

double AreaCoeffs::get(int index) const {
  switch (index) {
    case 0: return a_fixed;
    case 1: return a_sm_fixed;
    case 2: return a_lane;
    case 3: return a_shmem;
    case 4: return a_l2;
    case 5: return a_mc;
  }
  throw DomainError("area coefficient index out of range");
}

void AreaCoeffs::set(int index, double value) {
  switch (index) {
    case 0: a_fixed = value; return;
    case 1: a_sm_fixed = value; return;
    case 2: a_lane = value; return;
    case 3: a_shmem = value; return;
    case 4: a_l2 = value; return;
    case 5: a_mc = value; return;
  }
  throw DomainError("area coefficient index out of range");
}

const std::array<std::string, AreaCoeffs::kCount>& area_coeff_names() {
  static const std::array<std::string, AreaCoeffs::kCount> names = {
      "a_fixed", "a_sm_fixed", "a_lane", "a_shmem", "a_l2", "a_mc"};
  return names;
}

int area_coeff_index(const std::string& name) {
  const auto& names = area_coeff_names();
  for (int i = 0; i < AreaCoeffs::kCount; ++i) {
    if (names[i] == name) return i;
  }
  throw DomainError("unknown area coefficient '" + name + "'");
}

void validate(const AreaCoeffs& c) {
  const auto& names = area_coeff_names();
  for (int i = 0; i < AreaCoeffs::kCount; ++i) {
    require(std::isfinite(c.get(i)) && c.get(i) >= 0.0, names[i].c_str(), "must be >= 0");
  }
  require(c.a_fixed + c.a_sm_fixed + c.a_lane > 0.0, "area_coeffs",
          "a_fixed + a_sm_fixed + a_lane must be > 0 (non-degenerate die)");
}

void validate(const CalibrationSet& c) {
  require(std::isfinite(c.c_iter) && c.c_iter > 0.0, "c_iter", "must be > 0");
  require(std::isfinite(c.t_sync) && c.t_sync >= 0.0, "t_sync", "must be >= 0");
  require(std::isfinite(c.e_op) && c.e_op >= 0.0, "e_op", "must be >= 0");
  require(std::isfinite(c.e_glob) && c.e_glob >= 0.0, "e_glob", "must be >= 0");
  require(std::isfinite(c.e_sh) && c.e_sh >= 0.0, "e_sh", "must be >= 0");
  require(std::isfinite(c.p_static) && c.p_static >= 0.0, "p_static", "must be >= 0");
  validate(c.area_coeffs);
}

void validate(const WorkloadSuite& s) {
  require(!s.entries.empty(), "entries", "suite must contain at least one kernel");
  double sum = 0.0;
  for (const auto& e : s.entries) {
    validate(e.kernel);
    require(std::isfinite(e.weight) && e.weight > 0.0, "weight", "must be > 0");
    sum += e.weight;
  }
  require(std::fabs(sum - 1.0) < 1e-9, "weight", "weights must be normalized to sum to 1");
}

}  // namespace stencil_dse
