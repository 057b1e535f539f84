#include "rscl/helmholtz.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "rscl/cutoff.hpp"

namespace rscl {

double green_kernel(double ell, double x) {
    if (!(ell > 0.0)) throw std::invalid_argument("green_kernel: ell must be > 0");
    return std::exp(-std::abs(x) / ell) / (2.0 * ell);
}

// Matrix A: diagonal 1+2k, sub/super diagonal -k, periodic corners -k.
// Split A = T + u v^T with u = (gamma, 0, .., 0, -k)^T, v = (1, 0, .., 0, -k/gamma)^T
// and gamma = -(1+2k); T is the tridiagonal core with adjusted first/last pivots.
HelmholtzWorkspace::HelmholtzWorkspace(const Grid1D& grid, double ell)
    : grid_(grid), ell_(ell) {
    if (!(ell > 0.0)) throw std::invalid_argument("HelmholtzWorkspace: ell must be > 0");
    const int n = grid_.n;
    k_ = ell * ell / (grid_.dx * grid_.dx);
    const double b = 1.0 + 2.0 * k_;
    const double gamma = -b;
    corner_w_ = -k_ / gamma;  // = k/b

    diag_.assign(static_cast<size_t>(n), b);
    mult_.assign(static_cast<size_t>(n), 0.0);
    diag_[0] = b - gamma;
    diag_[static_cast<size_t>(n - 1)] = b - (-k_) * (-k_) / gamma;

    // Thomas forward elimination of the core (strictly diagonally dominant, no pivoting)
    for (int i = 1; i < n; ++i) {
        mult_[static_cast<size_t>(i)] = -k_ / diag_[static_cast<size_t>(i - 1)];
        diag_[static_cast<size_t>(i)] -= mult_[static_cast<size_t>(i)] * (-k_);
    }

    std::vector<double> u(static_cast<size_t>(n), 0.0);
    u[0] = gamma;
    u[static_cast<size_t>(n - 1)] = -k_;
    z_.assign(static_cast<size_t>(n), 0.0);
    solve_core(u.data(), z_.data());
    denom_ = 1.0 + z_[0] + corner_w_ * z_[static_cast<size_t>(n - 1)];
    assert(std::isfinite(denom_) && denom_ != 0.0);
}

void HelmholtzWorkspace::solve_core(const double* rhs, double* out) const {
    const int n = grid_.n;
    out[0] = rhs[0];
    for (int i = 1; i < n; ++i) out[i] = rhs[i] - mult_[static_cast<size_t>(i)] * out[i - 1];
    out[n - 1] /= diag_[static_cast<size_t>(n - 1)];
    for (int i = n - 2; i >= 0; --i)
        out[i] = (out[i] - (-k_) * out[i + 1]) / diag_[static_cast<size_t>(i)];
}

Field HelmholtzWorkspace::solve(const Field& rhs) const {
    if (!rhs.grid.same_as(grid_))
        throw std::invalid_argument("helmholtz solve: field grid does not match workspace");
    const int n = grid_.n;
    Field y(grid_);
    solve_core(rhs.v.data(), y.v.data());
    const double fac = (y[0] + corner_w_ * y[n - 1]) / denom_;
    for (int i = 0; i < n; ++i) y[i] -= fac * z_[static_cast<size_t>(i)];
    return y;
}

Field HelmholtzWorkspace::forward(const Field& v) const {
    if (!v.grid.same_as(grid_))
        throw std::invalid_argument("helmholtz forward: field grid does not match workspace");
    const int n = grid_.n;
    Field out(grid_);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        out[i] = (1.0 + 2.0 * k_) * v[i] - k_ * (v[ip] + v[im]);
    }
    return out;
}

Field compute_p(const HelmholtzWorkspace& ws, const Field& u, const FluxModel& model,
                double eps) {
    const Field q = derivative(u);
    Field r(u.grid);
    const int n = u.grid.n;
    if (eps > 0.0) {
        for (int i = 0; i < n; ++i) r[i] = model.f2(u[i]) * (q[i] * q[i] + chi(eps, q[i]));
    } else {
        for (int i = 0; i < n; ++i) r[i] = model.f2(u[i]) * q[i] * q[i];
    }
    Field p = ws.solve(r);
    for (double& x : p.v) x *= 0.5;
    return p;
}

Field apply_d(const HelmholtzWorkspace& ws, const Field& v) {
    return ws.solve(derivative(v));
}

Field hs_nonlocal(const Grid1D& grid, const Field& r) {
    if (!r.grid.same_as(grid))
        throw std::invalid_argument("hs_nonlocal: field grid does not match");
    const int n = grid.n;
    Field out(grid);
    // running integral from x_min to the cell center: full cells below, half of cell i
    double cum = 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += r[i];
    total *= grid.dx;
    for (int i = 0; i < n; ++i) {
        const double upto = (cum + 0.5 * r[i]) * grid.dx;
        cum += r[i];
        out[i] = 0.25 * (2.0 * upto - total);
    }
    return out;
}

}  // namespace rscl
