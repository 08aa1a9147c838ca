#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stencil_dse {

// Unit conventions, used consistently across the toolkit:
//   time    nanoseconds        (1 W == 1 nJ/ns, 1 GB/s == 1 byte/ns)
//   memory  bytes internally, KiB in configuration files
//   energy  nanojoules internally, picojoules in configuration files
//   area    mm^2
//   rate    GFLOP/s == operations per nanosecond

enum class Strategy {
  HexHybrid,      // hexagonal tiles in the (time, s1) plane, rectangular in s2/s3
  RectWavefront,  // time-skewed rectangular tiles executed along diagonals
};

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);  // throws DomainError

// ---------------------------------------------------------------------------
// A stencil program's shape. ops_per_point and live_buffers are declared per
// kernel rather than derived from source code; the toolkit never parses loop
// bodies.
// ---------------------------------------------------------------------------
struct StencilKernel {
  std::string name;
  int space_dims = 2;                  // 2 or 3
  std::int64_t s1 = 1;                 // grid points, first space dimension
  std::int64_t s2 = 1;
  std::optional<std::int64_t> s3;      // present iff space_dims == 3
  std::int64_t time_steps = 1;         // T
  std::int64_t stencil_order = 0;      // halo width r, in points
  std::int64_t ops_per_point = 1;      // flops per grid-point update
  std::int64_t bytes_per_element = 4;  // 4 or 8
  std::int64_t live_buffers = 1;       // concurrently resident grid copies

  std::int64_t s3_or(std::int64_t fallback) const { return s3 ? *s3 : fallback; }
  std::int64_t space_points() const { return s1 * s2 * s3_or(1); }
  std::int64_t iteration_points() const { return space_points() * time_steps; }
};

// Throws ValidationError naming the offending field.
void validate(const StencilKernel& k);

// ---------------------------------------------------------------------------
// An accelerator configuration. bw_global is the aggregate global-memory
// bandwidth in bytes per nanosecond, numerically equal to the GB/s value
// read from configuration files.
// ---------------------------------------------------------------------------
struct ArchConfig {
  std::int64_t n_sm = 1;            // streaming multiprocessors
  std::int64_t n_v = 32;            // vector lanes per SM, multiple of 32
  std::int64_t m_sm = 1024;         // shared-memory bytes per SM, multiple of 1024
  double bw_global = 1.0;           // bytes per nanosecond
  std::int64_t l2_bytes = 0;
  std::int64_t mem_ctrl_count = 1;

  std::int64_t m_sm_kib() const { return m_sm / 1024; }
  std::int64_t l2_kib() const { return l2_bytes / 1024; }

  // Lexicographic identity used for deterministic ordering and tie-breaks.
  std::array<double, 6> order_key() const;
};

void validate(const ArchConfig& a);

// ---------------------------------------------------------------------------
// One transformation instance: strategy, tile extents, hyperthreading factor.
// k is the number of tiles resident on one SM at a time, sharing its lanes
// and its shared memory.
// ---------------------------------------------------------------------------
struct TileConfig {
  Strategy strategy = Strategy::HexHybrid;
  std::int64_t t_s1 = 1;
  std::int64_t t_s2 = 1;
  std::optional<std::int64_t> t_s3;  // present for 3D kernels
  std::int64_t t_t = 2;              // even for HexHybrid
  std::int64_t k = 1;

  std::int64_t t_s3_or(std::int64_t fallback) const { return t_s3 ? *t_s3 : fallback; }

  // Deterministic tie-break key: (strategy, t_t, t_s1, t_s2, t_s3, k).
  std::array<std::int64_t, 6> tie_key() const;
};

void validate(const TileConfig& t);
bool tile_less(const TileConfig& a, const TileConfig& b);
bool tile_equal(const TileConfig& a, const TileConfig& b);

// ---------------------------------------------------------------------------
// Calibration constants. c_iter is the measured per-lane cost of one
// loop-body iteration once its operands are staged in shared memory.
// ---------------------------------------------------------------------------
struct AreaCoeffs {
  double a_fixed = 0.0;     // mm^2, die overhead independent of configuration
  double a_sm_fixed = 0.0;  // mm^2 per SM
  double a_lane = 0.0;      // mm^2 per vector lane
  double a_shmem = 0.0;     // mm^2 per KiB of shared memory
  double a_l2 = 0.0;        // mm^2 per KiB of L2
  double a_mc = 0.0;        // mm^2 per memory controller

  static constexpr int kCount = 6;
  double get(int index) const;
  void set(int index, double value);
};

// Coefficient names in canonical index order.
const std::array<std::string, AreaCoeffs::kCount>& area_coeff_names();
int area_coeff_index(const std::string& name);  // throws DomainError

void validate(const AreaCoeffs& c);

struct CalibrationSet {
  double c_iter = 1.0;    // ns, > 0
  double t_sync = 0.0;    // ns per wavefront synchronization
  double e_op = 0.0;      // nJ per operation
  double e_glob = 0.0;    // nJ per global-memory byte
  double e_sh = 0.0;      // nJ per shared-memory byte
  double p_static = 0.0;  // W
  AreaCoeffs area_coeffs;
};

void validate(const CalibrationSet& c);

// ---------------------------------------------------------------------------
// A weighted set of kernels. Weights are normalized to sum to 1 at load time
// so downstream weighted means need no renormalization.
// ---------------------------------------------------------------------------
struct WorkloadSuite {
  struct Entry {
    StencilKernel kernel;
    double weight = 1.0;
  };
  std::vector<Entry> entries;
};

void validate(const WorkloadSuite& s);

}  // namespace stencil_dse
