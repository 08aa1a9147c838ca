#include "stencil_dse/area_model.hpp"

#include <algorithm>
#include <cmath>

#include "stencil_dse/errors.hpp"

namespace stencil_dse {

namespace {

// Gaussian elimination with partial pivoting on an n x n system.
// Throws RankError when a pivot degenerates.
std::vector<double> solve_square(std::vector<std::vector<double>> a, std::vector<double> b) {
  const std::size_t n = b.size();
  double scale = 0.0;
  for (const auto& row : a) {
    for (double v : row) scale = std::max(scale, std::fabs(v));
  }
  const double tol = std::max(scale, 1.0) * 1e-12;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    if (std::fabs(a[pivot][col]) <= tol) {
      throw RankError("anchor set induces a rank-deficient system");
    }
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = a[row][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace

std::array<double, AreaCoeffs::kCount> area_basis(const ArchConfig& arch) {
  return {
      1.0,
      static_cast<double>(arch.n_sm),
      static_cast<double>(arch.n_sm * arch.n_v),
      static_cast<double>(arch.n_sm * arch.m_sm_kib()),
      static_cast<double>(arch.l2_kib()),
      static_cast<double>(arch.mem_ctrl_count),
  };
}

double area(const ArchConfig& arch, const AreaCoeffs& coeffs) {
  return coeffs.a_fixed +
         static_cast<double>(arch.n_sm) *
             (coeffs.a_sm_fixed + coeffs.a_lane * static_cast<double>(arch.n_v) +
              coeffs.a_shmem * static_cast<double>(arch.m_sm_kib())) +
         coeffs.a_l2 * static_cast<double>(arch.l2_kib()) +
         coeffs.a_mc * static_cast<double>(arch.mem_ctrl_count);
}

AreaCoeffs calibrate(const std::vector<AreaAnchor>& anchors,
                     const std::vector<std::string>& free_names, const AreaCoeffs& fixed) {
  if (free_names.empty()) throw DomainError("calibrate requires at least one free coefficient");
  std::vector<int> free_idx;
  for (const auto& name : free_names) {
    const int idx = area_coeff_index(name);
    if (std::find(free_idx.begin(), free_idx.end(), idx) != free_idx.end()) {
      throw DomainError("duplicate free coefficient '" + name + "'");
    }
    free_idx.push_back(idx);
  }
  const std::size_t m = free_idx.size();
  const std::size_t n = anchors.size();
  if (n < m) {
    throw RankError("need at least " + std::to_string(m) + " anchors to fit " +
                    std::to_string(m) + " coefficients, got " + std::to_string(n));
  }

  // Rows of the design matrix and the residual target after subtracting the
  // fixed coefficients' contribution.
  std::vector<std::vector<double>> design(n, std::vector<double>(m, 0.0));
  std::vector<double> target(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto basis = area_basis(anchors[i].arch);
    double fixed_part = 0.0;
    for (int c = 0; c < AreaCoeffs::kCount; ++c) {
      if (std::find(free_idx.begin(), free_idx.end(), c) == free_idx.end()) {
        fixed_part += fixed.get(c) * basis[static_cast<std::size_t>(c)];
      }
    }
    target[i] = anchors[i].area_mm2 - fixed_part;
    for (std::size_t j = 0; j < m; ++j) {
      design[i][j] = basis[static_cast<std::size_t>(free_idx[j])];
    }
  }

  std::vector<double> solution;
  if (n == m) {
    solution = solve_square(design, target);
  } else {
    // Normal equations; the systems here are tiny (m <= 6).
    std::vector<std::vector<double>> ata(m, std::vector<double>(m, 0.0));
    std::vector<double> atb(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        atb[j] += design[i][j] * target[i];
        for (std::size_t l = 0; l < m; ++l) ata[j][l] += design[i][j] * design[i][l];
      }
    }
    solution = solve_square(ata, atb);
  }

  AreaCoeffs out = fixed;
  for (std::size_t j = 0; j < m; ++j) {
    double v = solution[j];
    if (v < -1e-9) {
      throw NegativeCoeffError("fitted coefficient '" + free_names[j] +
                               "' is negative (" + std::to_string(v) + "); fit rejected");
    }
    out.set(free_idx[j], std::max(v, 0.0));
  }
  validate(out);
  return out;
}

}  // namespace stencil_dse
