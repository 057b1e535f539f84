#pragma once

#include <cstddef>
#include <vector>

namespace rscl {

/// Uniform periodic 1-D grid; cell centers at x_min + (i + 1/2) dx.
struct Grid1D {
    double x_min = 0.0;
    double x_max = 1.0;
    int n = 0;
    double dx = 0.0;

    Grid1D() = default;
    Grid1D(double x_min_, double x_max_, int n_);

    double width() const { return x_max - x_min; }
    double center(int i) const { return x_min + (i + 0.5) * dx; }
    // periodic index
    int wrap(int i) const {
        i %= n;
        return i < 0 ? i + n : i;
    }
    bool same_as(const Grid1D& o) const {
        return n == o.n && x_min == o.x_min && x_max == o.x_max;
    }
};

/// Cell-sample array on a Grid1D. Value semantics; ops below are pure.
struct Field {
    Grid1D grid;
    std::vector<double> v;

    Field() = default;
    explicit Field(const Grid1D& g) : grid(g), v(static_cast<size_t>(g.n), 0.0) {}
    Field(const Grid1D& g, std::vector<double> values);

    int size() const { return grid.n; }
    double& operator[](int i) { return v[static_cast<size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<size_t>(i)]; }

    template <class Fn>
    static Field from_function(const Grid1D& g, Fn f) {
        Field out(g);
        for (int i = 0; i < g.n; ++i) out.v[static_cast<size_t>(i)] = f(g.center(i));
        return out;
    }

    bool all_finite() const;
};

// Second-order centered difference with periodic wrap.
Field derivative(const Field& f);

// Midpoint-rule integral dx * sum(v); spectrally accurate for smooth periodic data.
double integrate(const Field& f);

// sum |v_{i+1} - v_i| with periodic wrap.
double total_variation(const Field& f);

// (dx * sum |v|^p)^(1/p); p = infinity gives max |v|.
double norm(const Field& f, double p);

double min_value(const Field& f);
double max_value(const Field& f);

}  // namespace rscl
