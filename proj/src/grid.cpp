#include "rscl/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rscl {

Grid1D::Grid1D(double x_min_, double x_max_, int n_)
    : x_min(x_min_), x_max(x_max_), n(n_) {
    if (n < 8) throw std::invalid_argument("Grid1D: n must be >= 8");
    if (!(x_max > x_min)) throw std::invalid_argument("Grid1D: x_max must exceed x_min");
    dx = (x_max - x_min) / n;
}

Field::Field(const Grid1D& g, std::vector<double> values) : grid(g), v(std::move(values)) {
    if (static_cast<int>(v.size()) != g.n)
        throw std::invalid_argument("Field: value count does not match grid");
}

bool Field::all_finite() const {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

Field derivative(const Field& f) {
    const int n = f.grid.n;
    const double inv2dx = 1.0 / (2.0 * f.grid.dx);
    Field out(f.grid);
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        const int im = (i == 0) ? n - 1 : i - 1;
        out[i] = (f[ip] - f[im]) * inv2dx;
    }
    return out;
}

double integrate(const Field& f) {
    double s = 0.0;
    for (double x : f.v) s += x;
    return s * f.grid.dx;
}

double total_variation(const Field& f) {
    const int n = f.grid.n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const int ip = (i + 1 == n) ? 0 : i + 1;
        s += std::abs(f[ip] - f[i]);
    }
    return s;
}

double norm(const Field& f, double p) {
    if (p < 1.0) throw std::invalid_argument("norm: p must be >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (double x : f.v) m = std::max(m, std::abs(x));
        return m;
    }
    double s = 0.0;
    if (p == 1.0) {
        for (double x : f.v) s += std::abs(x);
    } else if (p == 2.0) {
        for (double x : f.v) s += x * x;
    } else {
        for (double x : f.v) s += std::pow(std::abs(x), p);
    }
    return std::pow(s * f.grid.dx, 1.0 / p);
}

double min_value(const Field& f) {
    double m = std::numeric_limits<double>::infinity();
    for (double x : f.v) m = std::min(m, x);
    return m;
}

double max_value(const Field& f) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : f.v) m = std::max(m, x);
    return m;
}

}  // namespace rscl
