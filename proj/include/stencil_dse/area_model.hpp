#pragma once

#include <string>
#include <vector>

#include "stencil_dse/config_io.hpp"
#include "stencil_dse/types.hpp"

namespace stencil_dse {

// Parametric die area in mm^2:
//   a_fixed + n_sm*(a_sm_fixed + a_lane*n_v + a_shmem*m_sm_kib)
//           + a_l2*l2_kib + a_mc*mem_ctrl_count
double area(const ArchConfig& arch, const AreaCoeffs& coeffs);

// Per-coefficient contribution of one configuration (the model is linear in
// the coefficients); index order matches area_coeff_names().
std::array<double, AreaCoeffs::kCount> area_basis(const ArchConfig& arch);

// Least-squares fit of the named free coefficients against measured die
// areas, holding the remaining coefficients at their values in `fixed`.
//
// Throws RankError when |anchors| < |free| or the induced linear system is
// rank deficient, and NegativeCoeffError when a fitted coefficient comes out
// negative (the fit is rejected).
AreaCoeffs calibrate(const std::vector<AreaAnchor>& anchors,
                     const std::vector<std::string>& free_names, const AreaCoeffs& fixed);

}  // namespace stencil_dse
