#pragma once

#include <string>

namespace rscl {

enum class FluxFn { f, f1, f2, f3, F, K };

/// Uniformly convex flux with the derivatives and antiderivatives the
/// equations need: f, f', f'', f''', F (F' = f) and K (K' = u f'(u)).
/// Antiderivative constants are fixed by F(0) = K(0) = 0.
/// Immutable after construction; safe to share across threads.
class FluxModel {
public:
    static FluxModel burgers();
    static FluxModel cosine(double beta);  // f(u) = u^2/2 + beta cos u, beta in (0,1)

    double f(double u) const;
    double f1(double u) const;
    double f2(double u) const;
    double f3(double u) const;
    double F(double u) const;
    double K(double u) const;

    // stored convexity bounds: c <= f'' <= C
    double convexity_lower() const { return c_; }
    double convexity_upper() const { return c_upper_; }
    const std::string& name() const { return name_; }
    double beta() const { return beta_; }

private:
    enum class Kind { burgers, cosine };
    FluxModel(Kind k, double beta, std::string name, double c, double c_upper)
        : kind_(k), beta_(beta), name_(std::move(name)), c_(c), c_upper_(c_upper) {}

    Kind kind_;
    double beta_;
    std::string name_;
    double c_;
    double c_upper_;
};

// name in {burgers, cosine}; params: cosine requires beta in (0,1).
FluxModel builtin_flux(const std::string& name, double beta = 0.0);

double eval(const FluxModel& model, FluxFn which, double u);

}  // namespace rscl
