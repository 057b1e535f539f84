#pragma once

#include <algorithm>
#include <stdexcept>

namespace rscl {

/// Slope cut-off: (q + 1/eps)^2 for q <= -1/eps, else 0. C^1 in q.
inline double chi(double eps, double q) {
    if (!(eps > 0.0)) throw std::invalid_argument("chi: eps must be > 0");
    const double knee = -1.0 / eps;
    if (q > knee) return 0.0;
    const double d = q - knee;
    return d * d;
}

/// Quadratic truncation S_kappa:
///   -kappa (xi + kappa/2)  for xi <= -kappa
///   xi^2 / 2               for |xi| <= kappa
///   kappa (xi - kappa/2)   for xi >= kappa
inline double s_trunc(double kappa, double xi) {
    if (!(kappa > 0.0)) throw std::invalid_argument("s_trunc: kappa must be > 0");
    if (xi <= -kappa) return -kappa * (xi + 0.5 * kappa);
    if (xi >= kappa) return kappa * (xi - 0.5 * kappa);
    return 0.5 * xi * xi;
}

/// T_kappa = S_kappa' = clamp(xi, -kappa, kappa).
inline double t_trunc(double kappa, double xi) {
    if (!(kappa > 0.0)) throw std::invalid_argument("t_trunc: kappa must be > 0");
    return std::clamp(xi, -kappa, kappa);
}

}  // namespace rscl
