#include "leafwave/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leafwave::oracle {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct EvalBudget {
    long remaining;
    void charge(long n = 1) {
        remaining -= n;
        if (remaining < 0) throw std::runtime_error("quadrature evaluation budget exhausted");
    }
};

// One tanh-sinh pass, summing f over the nodes of the given level only.
// term(x, dist) must return the integrand value (already endpoint-safe).
template <typename Term>
double ts_level_sum(const Term& term, double a, double b, int level, EvalBudget& budget) {
    const double half = 0.5 * (b - a);
    const double h = std::ldexp(1.0, -level);
    const int stride = level == 0 ? 1 : 2;
    const int first = level == 0 ? 0 : 1;
    double sum = 0.0;
    for (int k = first; k * h <= 4.0; k += stride) {
        const double u = k * h;
        const double w = 0.5 * kPi * std::sinh(u);
        const double e = std::exp(-2.0 * w);
        const double offset = 2.0 * e / (1.0 + e);
        const double sech = 2.0 * std::exp(-w) / (1.0 + e);
        const double weight = 0.5 * kPi * std::cosh(u) * sech * sech;
        const double d = half * offset;
        budget.charge(k == 0 ? 1 : 2);
        if (k == 0) {
            sum += weight * term(a + half, half);
        } else {
            sum += weight * (term(b - d, d) + term(a + d, d));
        }
    }
    return sum;
}

void require_valid(const ToleranceSpec& tol) {
    if (!(tol.abs_tol > 0.0) || !(tol.rel_tol > 0.0) || tol.max_evals <= 0)
        throw std::invalid_argument("tolerances and the evaluation budget must be positive");
}

template <typename Term>
double ts_integrate(const Term& term, double a, double b, const ToleranceSpec& tol) {
    require_valid(tol);
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double half = 0.5 * (b - a);
    EvalBudget budget{tol.max_evals};

    double estimate = half * ts_level_sum(term, a, b, 0, budget);
    for (int level = 1; level <= 14; ++level) {
        const double h = std::ldexp(1.0, -level);
        const double refined =
            0.5 * estimate + h * half * ts_level_sum(term, a, b, level, budget);
        const double diff = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && diff <= std::max(tol.abs_tol, tol.rel_tol * std::abs(estimate)))
            return sign * estimate;
    }
    throw std::runtime_error("tanh-sinh quadrature did not converge");
}

} // namespace

double quad_singular(const std::function<double(double)>& f, double a, double b,
                     const ToleranceSpec& tol) {
    auto term = [&](double x, double) {
        const double v = f(x);
        return std::isfinite(v) ? v : 0.0; // endpoint-singular values carry no weight
    };
    return ts_integrate(term, a, b, tol);
}

double quad_singular(const std::function<double(double, double)>& f, double a, double b,
                     const ToleranceSpec& tol) {
    auto term = [&](double x, double dist) { return f(x, dist); };
    return ts_integrate(term, a, b, tol);
}

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    EvalBudget budget;
    double abs_tol;

    double eval(double x) {
        budget.charge();
        return f(x);
    }

    double recurse(double a, double m, double b, double fa, double fm, double fb, double whole,
                   double tol, int depth) {
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = eval(lm), frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth > 0 && std::abs(delta) <= 15.0 * tol)
            return left + right + delta / 15.0;
        if (depth > 48) throw std::runtime_error("adaptive quadrature did not converge");
        return recurse(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
               recurse(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
    }
};

} // namespace

double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const ToleranceSpec& tol) {
    require_valid(tol);
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    SimpsonState st{f, EvalBudget{tol.max_evals}, tol.abs_tol};
    const double m = 0.5 * (a + b);
    const double fa = st.eval(a), fm = st.eval(m), fb = st.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * st.recurse(a, m, b, fa, fm, fb, whole, tol.abs_tol, 0);
}

namespace {

template <typename Accel>
Trajectory rk4(const Accel& accel, double x0, double v0, double t_end, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("rk4 requires dt > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("rk4 requires t_end > 0");

    Trajectory traj;
    const long full = static_cast<long>(std::floor(t_end / dt * (1.0 + 1e-12)));
    traj.times.reserve(full + 2);
    traj.states.reserve(full + 2);

    double x = x0, v = v0;
    traj.times.push_back(0.0);
    traj.states.push_back({x, v});
    for (long i = 1;; ++i) {
        double t_next = i * dt;
        double step = dt;
        bool last = false;
        if (t_next >= t_end - 0.5 * dt * 1e-9) {
            t_next = t_end;
            step = t_end - traj.times.back();
            last = true;
        }
        const double k1x = v, k1v = accel(x);
        const double k2x = v + 0.5 * step * k1v, k2v = accel(x + 0.5 * step * k1x);
        const double k3x = v + 0.5 * step * k2v, k3v = accel(x + 0.5 * step * k2x);
        const double k4x = v + step * k3v, k4v = accel(x + step * k3x);
        x += step / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += step / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        traj.times.push_back(t_next);
        traj.states.push_back({x, v});
        if (last) break;
    }
    return traj;
}

} // namespace

Trajectory integrate_duffing(const duffing::Coefficients& coeffs, double x0, double v0,
                             double t_end, double dt) {
    auto accel = [&](double x) { return -coeffs.alpha * x - coeffs.beta * x * x * x; };
    return rk4(accel, x0, v0, t_end, dt);
}

Trajectory integrate_leaf_ode(int n, double x0, double v0, double t_end, double dt) {
    if (n < 1) throw std::domain_error("leaf family index must satisfy n >= 1");
    auto accel = [&](double x) {
        double p = x; // x^(2n-1)
        for (int k = 1; k < 2 * n - 1; ++k) p *= x;
        return -static_cast<double>(n) * p;
    };
    return rk4(accel, x0, v0, t_end, dt);
}

double fd_second_derivative(const std::function<double(double)>& f, double t, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd step must be positive");
    return (f(t - h) - 2.0 * f(t) + f(t + h)) / (h * h);
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iterations) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations && (b - a) > 1e-14 * (1.0 + std::abs(a)); ++i) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double empirical_period(const std::function<double(double)>& f, double t_probe, double horizon,
                        double resolution) {
    if (!(horizon > 0.0) || !(resolution > 0.0) || resolution >= 0.5 * horizon)
        throw std::invalid_argument("empirical_period requires 0 < resolution < horizon/2");

    constexpr int kSamples = 512;
    constexpr double kAccept = 1e-7;
    const double window = 0.5 * horizon;

    std::vector<double> base(kSamples);
    for (int k = 0; k < kSamples; ++k)
        base[k] = f(t_probe + window * k / (kSamples - 1));

    auto mismatch = [&](double shift) {
        double worst = 0.0;
        for (int k = 0; k < kSamples; ++k) {
            const double t = t_probe + window * k / (kSamples - 1);
            worst = std::max(worst, std::abs(f(t + shift) - base[k]));
        }
        return worst;
    };

    const long n = static_cast<long>(std::floor(window / resolution));
    if (n < 3) throw std::invalid_argument("empirical_period needs horizon >> resolution");
    std::vector<double> curve(n + 1, 0.0);
    double curve_max = 0.0;
    for (long i = 1; i <= n; ++i) {
        curve[i] = mismatch(i * resolution);
        curve_max = std::max(curve_max, curve[i]);
    }

    // refine grid-local minima of the mismatch curve, smallest shift first
    const double dip_gate = std::max(1e-9, 0.25 * curve_max);
    for (long i = 2; i < n; ++i) {
        if (curve[i] >= dip_gate || curve[i] > curve[i - 1] || curve[i] > curve[i + 1]) continue;
        const double refined =
            golden_section_min(mismatch, (i - 1) * resolution, (i + 1) * resolution);
        if (mismatch(refined) < kAccept) return refined;
    }
    throw std::runtime_error("no period found within horizon");
}

} // namespace leafwave::oracle
