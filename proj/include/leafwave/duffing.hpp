#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace leafwave::duffing {

// The seven closed-form solution families of x'' + alpha x + beta x^3 = 0.
enum class SolutionType { I = 1, II, III, IV, V, VI, VII };

inline constexpr std::array<SolutionType, 7> kAllTypes{
    SolutionType::I,  SolutionType::II, SolutionType::III, SolutionType::IV,
    SolutionType::V,  SolutionType::VI, SolutionType::VII};

std::string to_string(SolutionType type);
SolutionType type_from_string(const std::string& name);

struct WaveParams {
    double amplitude = 1.0;
    double angular_frequency = 1.0;
    double phase = 0.0;
};

// Throws std::invalid_argument when amplitude or angular frequency is zero
// (or any field is non-finite).
void validate(const WaveParams& params);

struct Coefficients {
    double alpha; // linear stiffness
    double beta;  // cubic stiffness
};

struct WaveMetadata {
    double x_min;
    double x_max;
    double center;    // (x_min + x_max) / 2
    double amplitude; // (x_max - x_min) / 2
    double period;
};

struct StateSample {
    double t;
    double x;
    double v;
    double a;
    double residual; // a + alpha*x + beta*x^3
};

Coefficients coefficients(SolutionType type, const WaveParams& params);
double evaluate(SolutionType type, const WaveParams& params, double t);
double first_derivative(SolutionType type, const WaveParams& params, double t);
double second_derivative(SolutionType type, const WaveParams& params, double t);
double residual(SolutionType type, const WaveParams& params, double t);

// (x(0), dx/dt(0)) in closed form; agrees with evaluate/first_derivative at 0.
std::pair<double, double> initial_conditions(SolutionType type, const WaveParams& params);

WaveMetadata metadata(SolutionType type, const WaveParams& params);

// Uniform samples on [t_start, t_end], both endpoints included; steps >= 2.
std::vector<StateSample> sample_wave(SolutionType type, const WaveParams& params,
                                     double t_start, double t_end, int steps);

} // namespace leafwave::duffing
