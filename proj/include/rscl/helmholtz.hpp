#pragma once

#include "rscl/flux.hpp"
#include "rscl/grid.hpp"

namespace rscl {

/// Green kernel of (1 - ell^2 d_xx)^{-1} on the line: (2 ell)^{-1} exp(-|x|/ell).
double green_kernel(double ell, double x);

/// Periodic inverse of (I - ell^2 D2), D2 the 3-point second-difference stencil.
/// Factored once as cyclic tridiagonal (Thomas + Sherman-Morrison rank-1
/// correction); solve() is the exact inverse of forward() to round-off.
/// Immutable after construction; solves are pure and reentrant.
class HelmholtzWorkspace {
public:
    HelmholtzWorkspace(const Grid1D& grid, double ell);

    const Grid1D& grid() const { return grid_; }
    double ell() const { return ell_; }

    Field solve(const Field& rhs) const;
    Field forward(const Field& v) const;

private:
    Grid1D grid_;
    double ell_;
    double k_;         // ell^2 / dx^2, the off-diagonal magnitude
    double corner_w_;  // beta/gamma weight tying row n-1 into the correction
    double denom_;     // 1 + v.z of the Sherman-Morrison update
    std::vector<double> diag_;  // Thomas-eliminated pivots of the tridiagonal core
    std::vector<double> mult_;  // forward-elimination multipliers
    std::vector<double> z_;     // T^{-1} u, the precomputed correction column

    void solve_core(const double* rhs, double* out) const;
};

/// P = 1/2 (1 - ell^2 d_xx)^{-1} { f''(u) (u_x^2 + chi_eps(u_x)) }; eps = 0 drops the cut-off.
/// Nonnegative up to round-off.
Field compute_p(const HelmholtzWorkspace& ws, const Field& u, const FluxModel& model,
                double eps);

/// Hamiltonian operator (1 - ell^2 d_xx)^{-1} d_x: derivative, then solve.
Field apply_d(const HelmholtzWorkspace& ws, const Field& v);

/// Antisymmetric primitive 1/4 (int_{x_min}^x R - int_x^{x_max} R) by cumulative
/// midpoint sums. The ell -> infinity surrogate for -ell^2 P_x in the gHS solver:
/// hs_nonlocal(R) = lim_{ell->inf} -1/2 ell^2 d_x(G * R) on the line.
Field hs_nonlocal(const Grid1D& grid, const Field& r);

}  // namespace rscl
