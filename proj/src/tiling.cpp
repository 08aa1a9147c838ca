#include "stencil_dse/tiling.hpp"

#include <algorithm>
#include <unordered_set>

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Checks strategy/dimension preconditions shared by schedule and assign_tile.
void check_tile_for_kernel(const StencilKernel& kernel, const TileConfig& tile) {
  validate(kernel);
  validate(tile);
  if (kernel.space_dims == 3 && !tile.t_s3) {
    throw DomainError("3D kernel '" + kernel.name + "' requires a t_s3 tile extent");
  }
  if (kernel.space_dims == 2 && tile.t_s3) {
    throw DomainError("2D kernel '" + kernel.name + "' takes no t_s3 tile extent");
  }
}

// Two-phase hexagonal partition of the (t, x) plane.
//
// Phase A hexagons sit on time bands [b*t_t, (b+1)*t_t); phase B hexagons are
// offset by (t_t/2, t_s1 + t_t/2). Both families share the horizontal period
// W = 2*t_s1 + t_t. In shifted coordinates x' = x + t_s1 the row at time t
// decomposes exactly into
//   A intervals [h*W - e,          h*W + t_s1 + e)          e  = min(tau, t_t - tau)
//   B intervals [h*W + mu - e',    h*W + mu + t_s1 + e')    e' = t_t/2 - e
// with tau = t mod t_t and mu = t_s1 + t_t/2. The x shift places the
// boundary half-hexagons of phase B at wavefront 0 so the origin belongs to
// the first wavefront's first tile.
//
// Geometric wavefronts alternate B(-1), A(0), B(0), A(1), ...; a dependence
// with |delta| <= 1 never crosses to a later index (sides have slope 1).
struct HexPlane {
  std::int64_t t_t, m, w_period, t_s1, mu;

  explicit HexPlane(const TileConfig& tile)
      : t_t(tile.t_t),
        m(tile.t_t / 2),
        w_period(2 * tile.t_s1 + tile.t_t),
        t_s1(tile.t_s1),
        mu(tile.t_s1 + tile.t_t / 2) {}

  // (wavefront, column) of the hexagon containing plane point (t, x).
  std::pair<std::int64_t, std::int64_t> locate(std::int64_t t, std::int64_t x) const {
    const std::int64_t xs = x + t_s1;
    const std::int64_t tau = t - floor_div(t, t_t) * t_t;
    const std::int64_t e = std::min(tau, t_t - tau);
    const std::int64_t h_a = floor_div(xs + e, w_period);
    const std::int64_t rem = xs + e - h_a * w_period;
    if (rem < t_s1 + 2 * e) {
      const std::int64_t band = floor_div(t, t_t);
      return {2 * band + 1, h_a};
    }
    const std::int64_t ep = m - e;
    const std::int64_t band = floor_div(t - m, t_t);
    const std::int64_t h_b = floor_div(xs - mu + ep, w_period);
    return {2 * band + 2, h_b};
  }
};

}  // namespace

std::int64_t WavefrontSchedule::total_tiles() const {
  std::int64_t n = 0;
  for (std::int64_t w : tiles_per_wavefront) n += w;
  return n;
}

std::int64_t points_per_hex(std::int64_t t_s1, std::int64_t t_t) {
  if (t_t < 2 || t_t % 2 != 0) {
    throw DomainError("points_per_hex requires an even time height >= 2");
  }
  if (t_s1 < 1) throw DomainError("points_per_hex requires t_s1 >= 1");
  return t_t * (t_s1 + t_t / 2);
}

WavefrontSchedule schedule(const StencilKernel& kernel, const TileConfig& tile) {
  check_tile_for_kernel(kernel, tile);

  WavefrontSchedule sched;
  const std::int64_t s3 = kernel.s3_or(1);
  const std::int64_t t_s3 = tile.t_s3_or(1);

  if (tile.strategy == Strategy::HexHybrid) {
    sched.n_w = ceil_div(kernel.time_steps, tile.t_t) + 1;
    const std::int64_t w = (ceil_div(kernel.s1, tile.t_s1 + tile.t_t) + 1) *
                           ceil_div(kernel.s2, tile.t_s2) * ceil_div(s3, t_s3);
    sched.tiles_per_wavefront.assign(static_cast<std::size_t>(sched.n_w), w);
    sched.tile_volume = points_per_hex(tile.t_s1, tile.t_t) * tile.t_s2 * t_s3;
  } else {
    const std::int64_t c_t = ceil_div(kernel.time_steps, tile.t_t);
    const std::int64_t c_1 = ceil_div(kernel.s1, tile.t_s1);
    const std::int64_t c_2 = ceil_div(kernel.s2, tile.t_s2);
    const std::int64_t c_3 = ceil_div(s3, t_s3);
    sched.n_w = c_t + c_1 - 1;
    sched.tiles_per_wavefront.reserve(static_cast<std::size_t>(sched.n_w));
    for (std::int64_t d = 0; d < sched.n_w; ++d) {
      const std::int64_t lo = std::max<std::int64_t>(0, d - (c_1 - 1));
      const std::int64_t hi = std::min(d, c_t - 1);
      sched.tiles_per_wavefront.push_back((hi - lo + 1) * c_2 * c_3);
    }
    sched.tile_volume = tile.t_t * tile.t_s1 * tile.t_s2 * t_s3;
  }

  // The model never enumerates fewer points than the iteration space holds;
  // boundary-padded partial tiles are charged at full volume.
  sched.total_points_enumerated =
      std::max(sched.total_tiles() * sched.tile_volume, kernel.iteration_points());
  return sched;
}

TileId assign_tile(const Point& p, const TileConfig& tile, const StencilKernel& kernel) {
  const std::int64_t r = kernel.stencil_order;
  TileId id;
  if (tile.strategy == Strategy::HexHybrid) {
    const HexPlane plane(tile);
    const auto [wf_hex, column] = plane.locate(p.t, p.s1);
    const std::int64_t j2 = floor_div(p.s2 + r * p.t, tile.t_s2);
    const std::int64_t j3 =
        kernel.space_dims == 3 ? floor_div(p.s3 + r * p.t, tile.t_s3_or(1)) : 0;
    id.wavefront = wf_hex + j2 + j3;
    id.pos = {column, j2, j3};
  } else {
    const std::int64_t i_t = floor_div(p.t, tile.t_t);
    const std::int64_t j1 = floor_div(p.s1 + p.t, tile.t_s1);
    const std::int64_t j2 = floor_div(p.s2 + p.t, tile.t_s2);
    const std::int64_t j3 = kernel.space_dims == 3 ? floor_div(p.s3 + p.t, tile.t_s3_or(1)) : 0;
    id.wavefront = i_t + j1 + j2 + j3;
    id.pos = {j1, j2, j3};
  }
  return id;
}

LegalityReport check_legality(const StencilKernel& kernel, const TileConfig& tile) {
  check_tile_for_kernel(kernel, tile);
  if (kernel.iteration_points() > kBruteForceLimit) {
    throw SizeError("iteration space exceeds the brute-force limit of " +
                    std::to_string(kBruteForceLimit) + " points");
  }

  const std::int64_t r = kernel.stencil_order;
  const std::int64_t s3_extent = kernel.s3_or(1);
  const bool is3d = kernel.space_dims == 3;
  constexpr std::size_t kMaxSamples = 16;

  LegalityReport report;
  for (std::int64_t t = 0; t < kernel.time_steps; ++t) {
    for (std::int64_t x1 = 0; x1 < kernel.s1; ++x1) {
      for (std::int64_t x2 = 0; x2 < kernel.s2; ++x2) {
        for (std::int64_t x3 = 0; x3 < s3_extent; ++x3) {
          const Point p{t, x1, x2, x3};
          ++report.points_checked;
          if (t == 0 || r == 0) continue;
          const TileId pid = assign_tile(p, tile, kernel);
          for (std::int64_t d1 = -r; d1 <= r; ++d1) {
            const std::int64_t y1 = x1 + d1;
            if (y1 < 0 || y1 >= kernel.s1) continue;
            for (std::int64_t d2 = -r; d2 <= r; ++d2) {
              const std::int64_t y2 = x2 + d2;
              if (y2 < 0 || y2 >= kernel.s2) continue;
              const std::int64_t d3lim = is3d ? r : 0;
              for (std::int64_t d3 = -d3lim; d3 <= d3lim; ++d3) {
                const std::int64_t y3 = x3 + d3;
                if (y3 < 0 || y3 >= s3_extent) continue;
                const Point src{t - 1, y1, y2, y3};
                ++report.dependences_checked;
                const TileId sid = assign_tile(src, tile, kernel);
                if (sid == pid || sid.wavefront < pid.wavefront) continue;
                ++report.violation_count;
                if (report.samples.size() < kMaxSamples) {
                  report.samples.push_back({p, src, pid, sid});
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

std::int64_t hex_plane_tile_count(const StencilKernel& kernel, const TileConfig& tile) {
  check_tile_for_kernel(kernel, tile);
  if (tile.strategy != Strategy::HexHybrid) {
    throw DomainError("hex_plane_tile_count applies to hex_hybrid tiles only");
  }
  if (kernel.time_steps * kernel.s1 > kBruteForceLimit) {
    throw SizeError("(t, s1) plane exceeds the brute-force limit of " +
                    std::to_string(kBruteForceLimit) + " points");
  }

  const HexPlane plane(tile);
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t t = 0; t < kernel.time_steps; ++t) {
    for (std::int64_t x = 0; x < kernel.s1; ++x) {
      const auto [wf, column] = plane.locate(t, x);
      // Columns are bounded by |x|/W + 2, far below 2^31; pack (wf, column).
      seen.insert(wf * (1ll << 32) + (column + (1ll << 30)));
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace stencil_dse
