#pragma once

#include <cstdint>

#include "stencil_dse/types.hpp"

namespace stencil_dse {

enum class BindingConstraint {
  None,          // tile fits; feasible
  HalfCapacity,  // one tile exceeds half the shared-memory capacity
  KCapacity,     // k resident tiles exceed the full capacity
};

const char* to_string(BindingConstraint c);

struct FootprintReport {
  std::int64_t bytes_per_tile = 0;
  std::int64_t bytes_with_k = 0;            // k * bytes_per_tile
  std::int64_t traffic_bytes_per_tile = 0;  // global bytes moved per tile
  bool feasible = false;
  BindingConstraint binding_constraint = BindingConstraint::None;
};

// Shared-memory bytes one tile requires. Halo of width stencil_order is
// counted on both faces of each space extent; reuse across the tile's time
// steps is internal to shared memory and free.
//   HexHybrid:      buffers * bytes * (t_s1 + t_t + 2r) * (t_s2 + 2r) [* (t_s3 + 2r)]
//   RectWavefront:  buffers * bytes * (t_s1 + 2r)       * (t_s2 + 2r) [* (t_s3 + 2r)]
std::int64_t footprint(const StencilKernel& kernel, const TileConfig& tile);

// Global traffic per tile: the input slab (footprint extents, one buffer) is
// loaded once and the interior slab is written back once (owner-computes,
// halo excluded).
std::int64_t tile_traffic(const StencilKernel& kernel, const TileConfig& tile);

// Feasible iff footprint <= m_sm/2 and k*footprint <= m_sm; the half-capacity
// rule is checked first.
FootprintReport feasible(const StencilKernel& kernel, const ArchConfig& arch,
                         const TileConfig& tile);

}  // namespace stencil_dse
