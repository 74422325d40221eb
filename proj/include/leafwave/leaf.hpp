#pragma once

namespace leafwave {

// Position of a time argument within the fundamental period 2*pi_n, split
// into the four quarter periods of length pi_n/2 on which the leaf
// functions are monotone.
struct Quadrant {
    int index;        // quarter index, in {0,1,2,3}
    double reduced_t; // offset into the quarter, in [0, pi_n/2)
};

// pi_n = 2 * int_0^1 du / sqrt(1 - u^(2n)); half the fundamental period of
// family n.  Cached per n after the first call.
double period_constant(int n);

Quadrant quarter_reduce(int n, double t);

// Inverse functions, int_0^x and int_x^1 of 1/sqrt(1 - u^(2n)).
// Require |x| <= 1.
double arcsleaf(int n, double x);
double arccleaf(int n, double x);

// The sine-like (x(0)=0, x'(0)=1) and cosine-like (x(0)=1, x'(0)=0)
// solutions of x'' = -n x^(2n-1), evaluated for any finite t.
double sleaf(int n, double t);
double cleaf(int n, double t);

// First derivatives, +/- sqrt(1 - leaf^(2n)) with the sign chosen from the
// quarter period the argument falls in.
double sleaf_derivative(int n, double t);
double cleaf_derivative(int n, double t);

// Antiderivatives for the n = 2 family: int_0^t sleaf_2(u) du and
// int_0^t cleaf_2(u) du, evaluated in closed form from
// sin(2F) = sleaf_2^2 and cos(2G) = cleaf_2^2 with branch selection by
// quarter period.
double integral_sleaf2(double t);
double integral_cleaf2(double t);

// sleaf_2^2 + cleaf_2^2 + sleaf_2^2 * cleaf_2^2 - 1; identically zero.
double leaf_identity_residual(double t);

} // namespace leafwave
