#include "stencil_dse/memory_model.hpp"

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

namespace {

// Extent of the loaded slab along the hex/skewed dimension.
std::int64_t s1_slab_extent(const StencilKernel& kernel, const TileConfig& tile) {
  const std::int64_t halo = 2 * kernel.stencil_order;
  if (tile.strategy == Strategy::HexHybrid) return tile.t_s1 + tile.t_t + halo;
  return tile.t_s1 + halo;
}

}  // namespace

const char* to_string(BindingConstraint c) {
  switch (c) {
    case BindingConstraint::None:
      return "None";
    case BindingConstraint::HalfCapacity:
      return "HalfCapacity";
    case BindingConstraint::KCapacity:
      return "KCapacity";
  }
  return "unknown";
}

std::int64_t footprint(const StencilKernel& kernel, const TileConfig& tile) {
  const std::int64_t halo = 2 * kernel.stencil_order;
  std::int64_t cells = s1_slab_extent(kernel, tile) * (tile.t_s2 + halo);
  if (kernel.space_dims == 3) cells *= tile.t_s3_or(1) + halo;
  return kernel.live_buffers * kernel.bytes_per_element * cells;
}

std::int64_t tile_traffic(const StencilKernel& kernel, const TileConfig& tile) {
  const std::int64_t halo = 2 * kernel.stencil_order;
  std::int64_t in_cells = s1_slab_extent(kernel, tile) * (tile.t_s2 + halo);
  std::int64_t out_cells = (s1_slab_extent(kernel, tile) - halo) * tile.t_s2;
  if (kernel.space_dims == 3) {
    in_cells *= tile.t_s3_or(1) + halo;
    out_cells *= tile.t_s3_or(1);
  }
  return kernel.bytes_per_element * (in_cells + out_cells);
}

FootprintReport feasible(const StencilKernel& kernel, const ArchConfig& arch,
                         const TileConfig& tile) {
  FootprintReport report;
  report.bytes_per_tile = footprint(kernel, tile);
  report.bytes_with_k = tile.k * report.bytes_per_tile;
  report.traffic_bytes_per_tile = tile_traffic(kernel, tile);
  if (report.bytes_per_tile > arch.m_sm / 2) {
    report.feasible = false;
    report.binding_constraint = BindingConstraint::HalfCapacity;
  } else if (report.bytes_with_k > arch.m_sm) {
    report.feasible = false;
    report.binding_constraint = BindingConstraint::KCapacity;
  } else {
    report.feasible = true;
    report.binding_constraint = BindingConstraint::None;
  }
  return report;
}

}  // namespace stencil_dse
