#include "leafwave/leaf.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace leafwave {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_index(int n) {
    if (n < 1) throw std::domain_error("leaf family index must satisfy n >= 1");
}

void require_finite(double t) {
    if (!std::isfinite(t)) throw std::domain_error("argument must be finite");
}

// ---------------------------------------------------------------------------
// tanh-sinh quadrature on [a, b] for integrands with (at most integrable)
// endpoint singularities.  The integrand callback receives the abscissa and
// its distance to the upper endpoint; the distance is formed directly from
// the transform so integrands like 1/sqrt(1-u) stay accurate where u rounds
// to 1.
// ---------------------------------------------------------------------------

struct TsNode {
    double offset; // (1 - tanh((pi/2) sinh u)); node distance as a fraction of the half width
    double weight; // (pi/2) cosh(u) sech^2((pi/2) sinh u)
};

constexpr int kTsMaxLevel = 11;
constexpr double kTsUmax = 4.0;

const std::vector<TsNode>& ts_level(int level) {
    static std::array<std::vector<TsNode>, kTsMaxLevel + 1> tables;
    static std::once_flag once;
    std::call_once(once, [] {
        auto node = [](double u) {
            const double s = std::sinh(u);
            const double w = 0.5 * kPi * s;
            const double e = std::exp(-2.0 * w);
            const double offset = 2.0 * e / (1.0 + e);          // 1 - tanh(w)
            const double sech = 2.0 * std::exp(-w) / (1.0 + e); // sech(w)
            return TsNode{offset, 0.5 * kPi * std::cosh(u) * sech * sech};
        };
        for (int k = 0; k * 1.0 <= kTsUmax; ++k) tables[0].push_back(node(k * 1.0));
        for (int level = 1; level <= kTsMaxLevel; ++level) {
            const double h = std::ldexp(1.0, -level);
            for (int k = 1; k * h <= kTsUmax; k += 2) tables[level].push_back(node(k * h));
        }
    });
    return tables[level];
}

// f(x, dist_to_b); integration runs over [a, b].
template <typename F>
double tanh_sinh(const F& f, double a, double b, double abs_tol) {
    const double half = 0.5 * (b - a);
    if (half == 0.0) return 0.0;

    auto term = [&](const TsNode& nd) {
        const double d = half * nd.offset;
        const double lo = a + d;  // node mirrored toward a
        const double hi = b - d;  // node toward b
        double sum = f(hi, d);
        if (nd.offset < 1.0) sum += f(lo, 2.0 * half - d);
        return nd.weight * sum;
    };

    const auto& base = ts_level(0);
    double acc = base[0].weight * f(a + half, half); // u = 0 node, counted once
    for (std::size_t k = 1; k < base.size(); ++k) acc += term(base[k]);

    double estimate = acc * half; // h = 1
    for (int level = 1; level <= kTsMaxLevel; ++level) {
        const double h = std::ldexp(1.0, -level);
        double news = 0.0;
        for (const TsNode& nd : ts_level(level)) news += term(nd);
        const double refined = 0.5 * estimate + h * news * half;
        const double diff = std::abs(refined - estimate);
        estimate = refined;
        if (level >= 3 && diff <= abs_tol) return estimate;
    }
    throw std::runtime_error("leaf quadrature did not converge");
}

// ---------------------------------------------------------------------------
// Brent root finding on a bracketing interval.
// ---------------------------------------------------------------------------

template <typename F>
double brent_root(const F& f, double a, double b, double fa, double fb, double xtol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw std::runtime_error("root is not bracketed");

    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < 100; ++iter) {
        if (fb * fc > 0.0) { c = a; fc = fa; d = e = b - a; }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Per-family state: pi_n plus the quarter-period inversion cache.  The cache
// is a cubic Hermite table of the quarter-period branch of sleaf_n, built
// once by bracketed root finding on arcsleaf(x) - tau and read-only after.
// ---------------------------------------------------------------------------

constexpr int kGridCells = 2048;
constexpr double kQuadTol = 1e-13;

class LeafFamily {
  public:
    explicit LeafFamily(int n) : n_(n) {
        pi_n_ = 2.0 * inverse_integral(1.0);
    }

    int index() const { return n_; }
    double pi_n() const { return pi_n_; }
    double quarter() const { return 0.5 * pi_n_; }

    // sum_{k=0}^{2n-1} x^k, so that 1 - x^(2n) = (1 - x) * power_sum(x).
    double power_sum(double x) const {
        double p = 1.0, s = 1.0;
        for (int k = 1; k < 2 * n_; ++k) {
            p *= x;
            s += p;
        }
        return s;
    }

    // int_0^x du / sqrt(1 - u^(2n)) for x in [0, 1].
    double inverse_integral(double x) const {
        if (x == 0.0) return 0.0;
        const double gap = 1.0 - x; // exact for x >= 0.5
        auto f = [&](double u, double dist_hi) {
            return 1.0 / std::sqrt((gap + dist_hi) * power_sum(u));
        };
        return tanh_sinh(f, 0.0, x, kQuadTol);
    }

    // Quarter-period value sleaf_n(tau) for tau in [0, pi_n/2].
    double quarter_value(double tau) const {
        ensure_grid();
        if (tau <= 0.0) return 0.0;
        if (tau >= quarter()) return 1.0;
        const double pos = tau / step_;
        int j = static_cast<int>(pos);
        j = std::min(j, kGridCells - 1);
        const double th = pos - j;
        const double om = 1.0 - th;
        const double h00 = (1.0 + 2.0 * th) * om * om;
        const double h10 = th * om * om;
        const double h01 = th * th * (3.0 - 2.0 * th);
        const double h11 = th * th * (th - 1.0);
        const double v = h00 * grid_x_[j] + h01 * grid_x_[j + 1] +
                         step_ * (h10 * grid_m_[j] + h11 * grid_m_[j + 1]);
        return std::clamp(v, 0.0, 1.0);
    }

  private:
    void ensure_grid() const {
        std::call_once(grid_once_, [this] {
            const double step = quarter() / kGridCells;
            std::vector<double> xs(kGridCells + 1), ms(kGridCells + 1);
            xs[0] = 0.0;
            ms[0] = 1.0;
            for (int i = 1; i < kGridCells; ++i) {
                const double target = i * step;
                const double lo = xs[i - 1];
                const double hi = std::min(1.0, lo + step + 1e-12);
                auto fn = [&](double x) { return inverse_integral(x) - target; };
                const double x = brent_root(fn, lo, hi, (i - 1) * step - target, fn(hi), 1e-15);
                xs[i] = x;
                ms[i] = std::sqrt(std::max(0.0, (1.0 - x) * power_sum(x)));
            }
            xs[kGridCells] = 1.0;
            ms[kGridCells] = 0.0;
            grid_x_ = std::move(xs);
            grid_m_ = std::move(ms);
            step_ = step;
        });
    }

    int n_;
    double pi_n_;
    mutable std::once_flag grid_once_;
    mutable std::vector<double> grid_x_, grid_m_;
    mutable double step_ = 0.0;
};

const LeafFamily& family(int n) {
    require_index(n);
    static std::mutex mu;
    static std::unordered_map<int, std::unique_ptr<LeafFamily>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<LeafFamily>(n);
    return *slot;
}

Quadrant reduce(const LeafFamily& fam, double t) {
    const double period = 2.0 * fam.pi_n();
    double r = std::fmod(t, period);
    if (r < 0.0) r += period;
    if (r >= period) r = 0.0;
    int q = static_cast<int>(r / fam.quarter());
    q = std::min(q, 3);
    double red = r - q * fam.quarter();
    red = std::clamp(red, 0.0, std::nextafter(fam.quarter(), 0.0));
    return {q, red};
}

double sleaf_reduced(const LeafFamily& fam, const Quadrant& qr) {
    switch (qr.index) {
        case 0: return fam.quarter_value(qr.reduced_t);
        case 1: return fam.quarter_value(fam.quarter() - qr.reduced_t);
        case 2: return -fam.quarter_value(qr.reduced_t);
        default: return -fam.quarter_value(fam.quarter() - qr.reduced_t);
    }
}

double cleaf_reduced(const LeafFamily& fam, const Quadrant& qr) {
    switch (qr.index) {
        case 0: return fam.quarter_value(fam.quarter() - qr.reduced_t);
        case 1: return -fam.quarter_value(qr.reduced_t);
        case 2: return -fam.quarter_value(fam.quarter() - qr.reduced_t);
        default: return fam.quarter_value(qr.reduced_t);
    }
}

double derivative_magnitude(const LeafFamily& fam, double v) {
    const double a = std::abs(v);
    return std::sqrt(std::max(0.0, (1.0 - a) * fam.power_sum(a)));
}

double clamp_square(double v) {
    return std::min(v * v, 1.0);
}

} // namespace

double period_constant(int n) {
    return family(n).pi_n();
}

Quadrant quarter_reduce(int n, double t) {
    require_finite(t);
    return reduce(family(n), t);
}

double arcsleaf(int n, double x) {
    require_finite(x);
    if (std::abs(x) > 1.0) throw std::domain_error("arcsleaf requires |x| <= 1");
    const LeafFamily& fam = family(n);
    const double v = fam.inverse_integral(std::abs(x));
    return x < 0.0 ? -v : v;
}

double arccleaf(int n, double x) {
    require_finite(x);
    if (std::abs(x) > 1.0) throw std::domain_error("arccleaf requires |x| <= 1");
    return family(n).quarter() - arcsleaf(n, x);
}

double sleaf(int n, double t) {
    require_finite(t);
    const LeafFamily& fam = family(n);
    return sleaf_reduced(fam, reduce(fam, t));
}

double cleaf(int n, double t) {
    require_finite(t);
    const LeafFamily& fam = family(n);
    return cleaf_reduced(fam, reduce(fam, t));
}

double sleaf_derivative(int n, double t) {
    require_finite(t);
    const LeafFamily& fam = family(n);
    const Quadrant qr = reduce(fam, t);
    const double mag = derivative_magnitude(fam, sleaf_reduced(fam, qr));
    // rising on [-pi_n/2, pi_n/2) mod 2pi_n, falling on the other half
    return (qr.index == 0 || qr.index == 3) ? mag : -mag;
}

double cleaf_derivative(int n, double t) {
    require_finite(t);
    const LeafFamily& fam = family(n);
    const Quadrant qr = reduce(fam, t);
    const double mag = derivative_magnitude(fam, cleaf_reduced(fam, qr));
    // falling on [0, pi_n) mod 2pi_n, rising on [pi_n, 2pi_n)
    return (qr.index <= 1) ? -mag : mag;
}

// Both antiderivatives come from sin(2F) = s^2 and cos(2G) = c^2.  The
// missing trigonometric component is filled in through
// sqrt(1 - s^4) = 2|c|/(1 + c^2) (and the s/c swapped twin), so atan2 keeps
// full precision where a bare asin/acos would pinch near the extrema.

double integral_sleaf2(double t) {
    require_finite(t);
    const LeafFamily& fam = family(2);
    const Quadrant qr = reduce(fam, t);
    const double s = sleaf_reduced(fam, qr);
    const double c = cleaf_reduced(fam, qr);
    const double sign = (qr.index == 0 || qr.index == 3) ? 1.0 : -1.0; // of cos(2F)
    return 0.5 * std::atan2(s * s, sign * 2.0 * std::abs(c) / (1.0 + c * c));
}

double integral_cleaf2(double t) {
    require_finite(t);
    const LeafFamily& fam = family(2);
    const Quadrant qr = reduce(fam, t);
    const double s = sleaf_reduced(fam, qr);
    const double c = cleaf_reduced(fam, qr);
    const double sign = (qr.index <= 1) ? 1.0 : -1.0; // of sin(2G)
    return 0.5 * std::atan2(sign * 2.0 * std::abs(s) / (1.0 + s * s), c * c);
}

double leaf_identity_residual(double t) {
    const double s2 = clamp_square(sleaf(2, t));
    const double c2 = clamp_square(cleaf(2, t));
    return s2 + c2 + s2 * c2 - 1.0;
}

} // namespace leafwave
