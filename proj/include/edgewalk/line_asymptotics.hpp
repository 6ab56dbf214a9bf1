#pragma once

#include <vector>

#include "edgewalk/types.hpp"

namespace edgewalk {

// Walk parameters entering the long-time line asymptotics.
//   mu = arctan(|r| / |t|), eta = arg t on the branch (-pi, pi].
struct AsymptoticParams {
    double t_mag = 0.0;
    double r_mag = 0.0;
    double eta = 0.0;
    double mu = 0.0;

    static AsymptoticParams from_amplitudes(cplx t, cplx r);
};

// Branch phases of the eigenvalues, lambda_pm(theta) = e^{i omega_pm(theta)}:
//   omega_plus(theta)  = arccos(|t| cos(theta - eta)) in [0, pi]
//   omega_minus(theta) = -omega_plus(theta)
double omega_plus(double theta, const AsymptoticParams& p);
double omega_minus(double theta, const AsymptoticParams& p);

// d omega_+ / d theta = |t| sin(theta - eta) / C(theta)
double omega_plus_derivative(double theta, const AsymptoticParams& p);
double omega_plus_second_derivative(double theta, const AsymptoticParams& p);

// Solutions of omega_+'(theta) = -alpha in [0, 2 pi). Empty for
// alpha > |t|; {eta, eta + pi} at alpha = 0; otherwise
// {eta + gamma + pi, eta + 2 pi - gamma} with
// sin^2 gamma = alpha^2 |r|^2 / (|t|^2 (1 - alpha^2)).
std::vector<double> stationary_points(double alpha, const AsymptoticParams& p);

// Fixed-j long-time law:
//   p ~ (|r| / (pi tau |t|)) * { [1 + (-1)^{j+tau}] cos^2(tau mu + pi/4)
//                              + [1 - (-1)^{j+tau}] sin^2(tau mu + pi/4) }
double asymptotic_p_fixed_j(long long j, long long tau, const AsymptoticParams& p);

struct ScaledAsymptotic {
    double p = 0.0;
    // Set when alpha >= |t|: no stationary points, probability decreases
    // faster than any inverse power of tau.
    bool superpolynomial_decay = false;
};

// Ballistic-regime law at j = alpha tau, 0 <= alpha < |t|:
//   p ~ envelope * [1 + alpha (-1)^tau cos(pi alpha tau)]
//                * {1 + (-1)^tau sin[2 tau (alpha gamma - nu) - pi alpha tau]}
ScaledAsymptotic asymptotic_p_scaled(double alpha, long long tau, const AsymptoticParams& p);

// The non-oscillatory prefactor |r| / (pi tau sqrt(|t|^2 - alpha^2) (1 - alpha)).
double asymptotic_envelope_scaled(double alpha, long long tau, const AsymptoticParams& p);

// Smallest j* = ceil(|t| tau) + margin such that the estimated probability
// beyond |j| > j* is below epsilon. The margin is an o(tau) buffer in units
// of the tau^(1/3) front width, starting from 10 + tau^(1/3).
int ballistic_front(double t_mag, long long tau, double epsilon);

}  // namespace edgewalk
