#include "rscl/flux.hpp"

#include <cmath>
#include <stdexcept>

namespace rscl {

FluxModel FluxModel::burgers() {
    return FluxModel(Kind::burgers, 0.0, "burgers", 1.0, 1.0);
}

FluxModel FluxModel::cosine(double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("cosine flux: beta must lie in (0,1)");
    return FluxModel(Kind::cosine, beta, "cosine", 1.0 - beta, 1.0 + beta);
}

double FluxModel::f(double u) const {
    switch (kind_) {
        case Kind::burgers: return 0.5 * u * u;
        case Kind::cosine: return 0.5 * u * u + beta_ * std::cos(u);
    }
    return 0.0;
}

double FluxModel::f1(double u) const {
    switch (kind_) {
        case Kind::burgers: return u;
        case Kind::cosine: return u - beta_ * std::sin(u);
    }
    return 0.0;
}

double FluxModel::f2(double u) const {
    switch (kind_) {
        case Kind::burgers: return 1.0;
        case Kind::cosine: return 1.0 - beta_ * std::cos(u);
    }
    return 0.0;
}

double FluxModel::f3(double u) const {
    switch (kind_) {
        case Kind::burgers: return 0.0;
        case Kind::cosine: return beta_ * std::sin(u);
    }
    return 0.0;
}

double FluxModel::F(double u) const {
    switch (kind_) {
        case Kind::burgers: return u * u * u / 6.0;
        case Kind::cosine: return u * u * u / 6.0 + beta_ * std::sin(u);
    }
    return 0.0;
}

double FluxModel::K(double u) const {
    switch (kind_) {
        case Kind::burgers: return u * u * u / 3.0;
        // int_0^u s(s - beta sin s) ds = u^3/3 + beta (u cos u - sin u)
        case Kind::cosine: return u * u * u / 3.0 + beta_ * (u * std::cos(u) - std::sin(u));
    }
    return 0.0;
}

FluxModel builtin_flux(const std::string& name, double beta) {
    if (name == "burgers") return FluxModel::burgers();
    if (name == "cosine") return FluxModel::cosine(beta);
    throw std::invalid_argument("unknown flux: " + name);
}

double eval(const FluxModel& model, FluxFn which, double u) {
    switch (which) {
        case FluxFn::f: return model.f(u);
        case FluxFn::f1: return model.f1(u);
        case FluxFn::f2: return model.f2(u);
        case FluxFn::f3: return model.f3(u);
        case FluxFn::F: return model.F(u);
        case FluxFn::K: return model.K(u);
    }
    return 0.0;
}

}  // namespace rscl
