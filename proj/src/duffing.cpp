#include "leafwave/duffing.hpp"

#include <cmath>
#include <stdexcept>

#include "leafwave/leaf.hpp"

namespace leafwave::duffing {
namespace {

const double kSqrt2 = std::sqrt(2.0);

// Leaf-function state at the wave phase tau = omega*t + phi.
struct Phase {
    double s;  // sleaf_2(tau)
    double c;  // cleaf_2(tau)
    double fs; // int_0^tau sleaf_2
    double fc; // int_0^tau cleaf_2
};

Phase phase_at(double tau) {
    return {sleaf(2, tau), cleaf(2, tau), integral_sleaf2(tau), integral_cleaf2(tau)};
}

double displacement(SolutionType type, double A, const Phase& p) {
    switch (type) {
        case SolutionType::I:   return A * std::cos(p.fc);
        case SolutionType::II:  return A * std::sin(p.fc);
        case SolutionType::III: return A * (std::cos(p.fs) + std::sin(p.fs));
        case SolutionType::IV:  return A * (std::cos(p.fs) - std::sin(p.fs));
        case SolutionType::V:
            return A * (std::cos(p.fs) + std::sin(p.fs)) + kSqrt2 * A * std::cos(p.fc);
        case SolutionType::VI:
            return A * (std::cos(p.fs) + std::sin(p.fs)) - kSqrt2 * A * std::cos(p.fc);
        case SolutionType::VII: return A * p.s * p.c;
    }
    throw std::logic_error("unreachable solution type");
}

double velocity(SolutionType type, double A, double w, double tau, const Phase& p) {
    switch (type) {
        case SolutionType::I:   return -A * w * std::sin(p.fc) * p.c;
        case SolutionType::II:  return A * w * std::cos(p.fc) * p.c;
        case SolutionType::III: return A * w * p.s * (std::cos(p.fs) - std::sin(p.fs));
        case SolutionType::IV:  return -A * w * p.s * (std::sin(p.fs) + std::cos(p.fs));
        case SolutionType::V:
            return A * w * p.s * (std::cos(p.fs) - std::sin(p.fs)) -
                   kSqrt2 * A * w * std::sin(p.fc) * p.c;
        case SolutionType::VI:
            return A * w * p.s * (std::cos(p.fs) - std::sin(p.fs)) +
                   kSqrt2 * A * w * std::sin(p.fc) * p.c;
        case SolutionType::VII:
            return A * w * (p.c * sleaf_derivative(2, tau) + p.s * cleaf_derivative(2, tau));
    }
    throw std::logic_error("unreachable solution type");
}

double acceleration(SolutionType type, double A, double w, const Phase& p) {
    const double w2 = w * w;
    switch (type) {
        case SolutionType::I:   return -A * w2 * std::cos(3.0 * p.fc);
        case SolutionType::II:  return -A * w2 * std::sin(3.0 * p.fc);
        case SolutionType::III: return A * w2 * (std::cos(3.0 * p.fs) - std::sin(3.0 * p.fs));
        case SolutionType::IV:  return -A * w2 * (std::cos(3.0 * p.fs) + std::sin(3.0 * p.fs));
        case SolutionType::V:
            return A * w2 * (std::cos(3.0 * p.fs) - std::sin(3.0 * p.fs)) -
                   kSqrt2 * A * w2 * std::cos(3.0 * p.fc);
        case SolutionType::VI:
            return A * w2 * (std::cos(3.0 * p.fs) - std::sin(3.0 * p.fs)) +
                   kSqrt2 * A * w2 * std::cos(3.0 * p.fc);
        case SolutionType::VII:
            // chain rule with the derivative product collapsed; no signed roots
            return -2.0 * A * w2 * p.s * p.c * (2.0 + p.s * p.s + p.c * p.c);
    }
    throw std::logic_error("unreachable solution type");
}

} // namespace

std::string to_string(SolutionType type) {
    switch (type) {
        case SolutionType::I:   return "I";
        case SolutionType::II:  return "II";
        case SolutionType::III: return "III";
        case SolutionType::IV:  return "IV";
        case SolutionType::V:   return "V";
        case SolutionType::VI:  return "VI";
        case SolutionType::VII: return "VII";
    }
    throw std::logic_error("unreachable solution type");
}

SolutionType type_from_string(const std::string& name) {
    for (SolutionType type : kAllTypes)
        if (to_string(type) == name) return type;
    throw std::invalid_argument("unknown solution type: " + name);
}

void validate(const WaveParams& params) {
    if (!std::isfinite(params.amplitude) || !std::isfinite(params.angular_frequency) ||
        !std::isfinite(params.phase))
        throw std::invalid_argument("wave parameters must be finite");
    if (params.amplitude == 0.0)
        throw std::invalid_argument("amplitude must be nonzero");
    if (params.angular_frequency == 0.0)
        throw std::invalid_argument("angular frequency must be nonzero");
}

Coefficients coefficients(SolutionType type, const WaveParams& params) {
    validate(params);
    const double w2 = params.angular_frequency * params.angular_frequency;
    const double q = w2 / (params.amplitude * params.amplitude);
    switch (type) {
        case SolutionType::I:   return {-3.0 * w2, 4.0 * q};
        case SolutionType::II:  return {3.0 * w2, -4.0 * q};
        case SolutionType::III: return {-3.0 * w2, 2.0 * q};
        case SolutionType::IV:  return {3.0 * w2, -2.0 * q};
        case SolutionType::V:   return {-3.0 * w2 * (1.0 + 2.0 * kSqrt2), 2.0 * q};
        case SolutionType::VI:  return {3.0 * w2 * (2.0 * kSqrt2 - 1.0), 2.0 * q};
        case SolutionType::VII: return {6.0 * w2, -2.0 * q};
    }
    throw std::logic_error("unreachable solution type");
}

double evaluate(SolutionType type, const WaveParams& params, double t) {
    validate(params);
    const double tau = params.angular_frequency * t + params.phase;
    return displacement(type, params.amplitude, phase_at(tau));
}

double first_derivative(SolutionType type, const WaveParams& params, double t) {
    validate(params);
    const double tau = params.angular_frequency * t + params.phase;
    return velocity(type, params.amplitude, params.angular_frequency, tau, phase_at(tau));
}

double second_derivative(SolutionType type, const WaveParams& params, double t) {
    validate(params);
    const double tau = params.angular_frequency * t + params.phase;
    return acceleration(type, params.amplitude, params.angular_frequency, phase_at(tau));
}

double residual(SolutionType type, const WaveParams& params, double t) {
    validate(params);
    const Coefficients c = coefficients(type, params);
    const double tau = params.angular_frequency * t + params.phase;
    const Phase p = phase_at(tau);
    const double x = displacement(type, params.amplitude, p);
    const double a = acceleration(type, params.amplitude, params.angular_frequency, p);
    return a + c.alpha * x + c.beta * x * x * x;
}

std::pair<double, double> initial_conditions(SolutionType type, const WaveParams& params) {
    validate(params);
    const Phase p = phase_at(params.phase);
    return {displacement(type, params.amplitude, p),
            velocity(type, params.amplitude, params.angular_frequency, params.phase, p)};
}

WaveMetadata metadata(SolutionType type, const WaveParams& params) {
    validate(params);
    const double A = params.amplitude;
    const double absA = std::abs(A);
    const double absW = std::abs(params.angular_frequency);
    const double pi2 = period_constant(2);

    double lo = 0.0, hi = 0.0, period = 0.0;
    switch (type) {
        case SolutionType::I:
            lo = A / kSqrt2; hi = A; period = pi2 / absW;
            break;
        case SolutionType::II:
            hi = absA / kSqrt2; lo = -hi; period = 2.0 * pi2 / absW;
            break;
        case SolutionType::III:
            lo = A; hi = kSqrt2 * A; period = pi2 / absW;
            break;
        case SolutionType::IV:
            hi = absA; lo = -hi; period = 2.0 * pi2 / absW;
            break;
        case SolutionType::V:
            lo = std::pow(2.0, 1.25) * A; hi = (1.0 + kSqrt2) * A; period = 0.5 * pi2 / absW;
            break;
        case SolutionType::VI:
            hi = (kSqrt2 - 1.0) * absA; lo = -hi; period = pi2 / absW;
            break;
        case SolutionType::VII:
            hi = (kSqrt2 - 1.0) * absA; lo = -hi; period = pi2 / absW;
            break;
    }
    if (lo > hi) std::swap(lo, hi); // ranges mirror for A < 0
    return {lo, hi, 0.5 * (lo + hi), 0.5 * (hi - lo), period};
}

std::vector<StateSample> sample_wave(SolutionType type, const WaveParams& params,
                                     double t_start, double t_end, int steps) {
    validate(params);
    if (!(t_start < t_end)) throw std::invalid_argument("sample range requires t_start < t_end");
    if (steps < 2) throw std::invalid_argument("sample grid requires steps >= 2");

    const Coefficients c = coefficients(type, params);
    std::vector<StateSample> out;
    out.reserve(static_cast<std::size_t>(steps));
    const double span = t_end - t_start;
    for (int i = 0; i < steps; ++i) {
        const double t = (i == steps - 1) ? t_end : t_start + span * i / (steps - 1);
        const double tau = params.angular_frequency * t + params.phase;
        const Phase p = phase_at(tau);
        const double x = displacement(type, params.amplitude, p);
        const double v = velocity(type, params.amplitude, params.angular_frequency, tau, p);
        const double a = acceleration(type, params.amplitude, params.angular_frequency, p);
        out.push_back({t, x, v, a, a + c.alpha * x + c.beta * x * x * x});
    }
    return out;
}

} // namespace leafwave::duffing
