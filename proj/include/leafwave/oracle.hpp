#pragma once

#include <array>
#include <functional>
#include <vector>

#include "leafwave/duffing.hpp"

namespace leafwave::oracle {

struct ToleranceSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    long max_evals = 2000000;
};

// Integral of f over [a, b] by double-exponential (tanh-sinh) transformation
// with level doubling until convergence.  Handles integrable endpoint
// singularities.  Throws std::runtime_error when the level sequence does not
// converge within max_evals.
//
// The second overload passes the node's distance to its nearest endpoint as
// well; integrands like 1/sqrt(1-u) should use it to avoid the cancellation
// in (1 - u) when u rounds to the endpoint.
double quad_singular(const std::function<double(double)>& f, double a, double b,
                     const ToleranceSpec& tol = {});
double quad_singular(const std::function<double(double, double)>& f, double a, double b,
                     const ToleranceSpec& tol = {});

// Adaptive Simpson quadrature for smooth integrands; the plain cross-check
// scheme.  Throws std::runtime_error when the refinement budget is exhausted.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const ToleranceSpec& tol = {});

struct Trajectory {
    std::vector<double> times;                  // strictly increasing, starts at 0
    std::vector<std::array<double, 2>> states;  // (x, v) matching times
};

// Classical fixed-step RK4 on x' = v, v' = -alpha x - beta x^3.
Trajectory integrate_duffing(const duffing::Coefficients& coeffs, double x0, double v0,
                             double t_end, double dt);

// Same integrator for the leaf equation x'' = -n x^(2n-1).
Trajectory integrate_leaf_ode(int n, double x0, double v0, double t_end, double dt);

// (f(t-h) - 2 f(t) + f(t+h)) / h^2.
double fd_second_derivative(const std::function<double(double)>& f, double t, double h);

// Smallest P > 0 with max_t |f(t+P) - f(t)| < 1e-7 over a sampled window,
// located by scanning shifts at the given resolution and refining the
// mismatch minimum.  Throws std::runtime_error when no shift qualifies
// within horizon/2.
double empirical_period(const std::function<double(double)>& f, double t_probe,
                        double horizon, double resolution);

// Golden-section minimizer on [lo, hi] for a unimodal objective; returns the
// abscissa of the minimum.
double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iterations = 160);

} // namespace leafwave::oracle
