#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "stencil_dse/types.hpp"

namespace stencil_dse {

// ---------------------------------------------------------------------------
// Model schedule: wavefront count, per-wavefront tile counts and the nominal
// tile volume used by the execution-time and energy models. Partial boundary
// tiles are charged at full volume.
// ---------------------------------------------------------------------------
struct WavefrontSchedule {
  std::int64_t n_w = 0;                            // number of wavefronts
  std::vector<std::int64_t> tiles_per_wavefront;   // w per wavefront, length n_w
  std::int64_t tile_volume = 0;                    // iteration points per full tile
  std::int64_t total_points_enumerated = 0;        // >= S1*S2*(S3)*T

  std::int64_t total_tiles() const;
};

// Area of a slope +/-1 hexagon of time height t_t whose width grows from
// t_s1 to t_s1 + t_t: t_t * (t_s1 + t_t/2). Requires t_t even and >= 2.
std::int64_t points_per_hex(std::int64_t t_s1, std::int64_t t_t);

// Deterministic, pure. Throws DomainError when the tile's dimensionality
// does not match the kernel's.
WavefrontSchedule schedule(const StencilKernel& kernel, const TileConfig& tile);

// ---------------------------------------------------------------------------
// Concrete tile assignment. The geometric wavefront index is a legal
// execution order (every inter-tile dependence crosses to a strictly earlier
// index); it is finer-grained than the model schedule above, which folds the
// two alternating hexagon phases into one modeled wavefront.
//
// HexHybrid partitions the (t, s1) plane into two interleaved families of
// congruent hexagons; remaining space dimensions are tiled rectangularly on
// coordinates skewed by stencil_order per time step, and each skewed tile
// index shifts the wavefront so cross-tile dependences stay ordered.
// RectWavefront applies a unit time skew to every space dimension and
// executes the rectangular tile grid along diagonals.
// ---------------------------------------------------------------------------
struct TileId {
  std::int64_t wavefront = 0;
  // HexHybrid: (hexagon column, s2 tile, s3 tile).
  // RectWavefront: (s1 tile, s2 tile, s3 tile).
  std::array<std::int64_t, 3> pos{0, 0, 0};

  auto operator<=>(const TileId&) const = default;
};

struct Point {
  std::int64_t t = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::int64_t s3 = 0;  // ignored for 2D kernels
};

// Total on valid points; the induced map is a partition of the iteration
// space and each tile holds at most tile_volume points.
TileId assign_tile(const Point& p, const TileConfig& tile, const StencilKernel& kernel);

// ---------------------------------------------------------------------------
// Brute-force dependence oracle. Checks that for every point at time t >= 1
// every source (t-1, s +/- delta), |delta_i| <= stencil_order, lies in the
// same tile or in a tile of a strictly earlier wavefront.
// ---------------------------------------------------------------------------
struct LegalityViolation {
  Point point;
  Point source;
  TileId point_tile;
  TileId source_tile;
};

struct LegalityReport {
  std::int64_t points_checked = 0;
  std::int64_t dependences_checked = 0;
  std::int64_t violation_count = 0;
  std::vector<LegalityViolation> samples;  // first few violations

  bool legal() const { return violation_count == 0; }
};

inline constexpr std::int64_t kBruteForceLimit = 1'000'000;

// Throws SizeError when the iteration space exceeds kBruteForceLimit points.
LegalityReport check_legality(const StencilKernel& kernel, const TileConfig& tile);

// Number of distinct hexagonal tiles intersecting the (t, s1) plane of the
// kernel's iteration space, counted by brute-force enumeration. Used by the
// tiling-density check. Throws SizeError beyond kBruteForceLimit plane
// points and DomainError for RectWavefront tiles.
std::int64_t hex_plane_tile_count(const StencilKernel& kernel, const TileConfig& tile);

}  // namespace stencil_dse
