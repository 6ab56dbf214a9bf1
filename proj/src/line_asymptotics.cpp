#include "edgewalk/line_asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace edgewalk {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_2pi(double x) {
    double y = std::fmod(x, 2.0 * kPi);
    if (y < 0.0) y += 2.0 * kPi;
    return y;
}

int parity_sign(long long n) { return (((n % 2) + 2) % 2 == 0) ? +1 : -1; }

}  // namespace

AsymptoticParams AsymptoticParams::from_amplitudes(cplx t, cplx r) {
    if (std::abs(std::norm(t) + std::norm(r) - 1.0) > kUnitaryTol)
        throw std::invalid_argument("AsymptoticParams: |t|^2 + |r|^2 != 1");
    AsymptoticParams p;
    p.t_mag = std::abs(t);
    p.r_mag = std::abs(r);
    if (p.t_mag <= 0.0 || p.r_mag <= 0.0)
        throw std::invalid_argument("AsymptoticParams: need 0 < |t| < 1");
    p.eta = std::arg(t);
    p.mu = std::atan(p.r_mag / p.t_mag);
    return p;
}

double omega_plus(double theta, const AsymptoticParams& p) {
    return std::acos(p.t_mag * std::cos(theta - p.eta));
}

double omega_minus(double theta, const AsymptoticParams& p) {
    return -omega_plus(theta, p);
}

double omega_plus_derivative(double theta, const AsymptoticParams& p) {
    const double d = theta - p.eta;
    const double c2 = 1.0 - p.t_mag * p.t_mag * std::cos(d) * std::cos(d);
    return p.t_mag * std::sin(d) / std::sqrt(c2);
}

double omega_plus_second_derivative(double theta, const AsymptoticParams& p) {
    const double d = theta - p.eta;
    const double c2 = 1.0 - p.t_mag * p.t_mag * std::cos(d) * std::cos(d);
    return p.t_mag * std::cos(d) * p.r_mag * p.r_mag / (c2 * std::sqrt(c2));
}

std::vector<double> stationary_points(double alpha, const AsymptoticParams& p) {
    if (alpha < 0.0)
        throw std::invalid_argument("stationary_points: alpha must be nonnegative");
    if (alpha > p.t_mag) return {};
    if (alpha == 0.0) return {wrap_2pi(p.eta), wrap_2pi(p.eta + kPi)};

    // sin^2 gamma = alpha^2 |r|^2 / (|t|^2 (1 - alpha^2)), gamma in (0, pi/2]
    double s2 = alpha * alpha * p.r_mag * p.r_mag /
                (p.t_mag * p.t_mag * (1.0 - alpha * alpha));
    s2 = std::min(s2, 1.0);
    const double gamma = std::asin(std::sqrt(s2));

    const double theta1 = wrap_2pi(p.eta + gamma + kPi);
    const double theta2 = wrap_2pi(p.eta + 2.0 * kPi - gamma);
    if (std::abs(theta1 - theta2) < 1e-12) return {theta1};  // alpha = |t|: points merge
    return {theta1, theta2};
}

double asymptotic_p_fixed_j(long long j, long long tau, const AsymptoticParams& p) {
    if (tau < 1)
        throw std::invalid_argument("asymptotic_p_fixed_j: need tau >= 1");
    const double envelope = p.r_mag / (kPi * tau * p.t_mag);
    const int sign = parity_sign(j + tau);
    const double c = std::cos(tau * p.mu + kPi / 4.0);
    const double s = std::sin(tau * p.mu + kPi / 4.0);
    return envelope * ((1.0 + sign) * c * c + (1.0 - sign) * s * s);
}

double asymptotic_envelope_scaled(double alpha, long long tau, const AsymptoticParams& p) {
    if (alpha >= p.t_mag) return 0.0;
    return p.r_mag /
           (kPi * tau * std::sqrt(p.t_mag * p.t_mag - alpha * alpha) * (1.0 - alpha));
}

ScaledAsymptotic asymptotic_p_scaled(double alpha, long long tau, const AsymptoticParams& p) {
    if (alpha < 0.0)
        throw std::invalid_argument("asymptotic_p_scaled: alpha must be nonnegative");
    if (tau < 1)
        throw std::invalid_argument("asymptotic_p_scaled: need tau >= 1");
    if (alpha >= p.t_mag) return {0.0, true};

    const double s2 = alpha * alpha * p.r_mag * p.r_mag /
                      (p.t_mag * p.t_mag * (1.0 - alpha * alpha));
    const double gamma = std::asin(std::sqrt(std::min(s2, 1.0)));
    const double nu = std::atan(p.r_mag / std::sqrt(p.t_mag * p.t_mag - alpha * alpha));

    const int sign = parity_sign(tau);
    const double f1 = 1.0 + alpha * sign * std::cos(kPi * alpha * tau);
    const double f2 = 1.0 + sign * std::sin(2.0 * tau * (alpha * gamma - nu) - kPi * alpha * tau);
    return {asymptotic_envelope_scaled(alpha, tau, p) * f1 * f2, false};
}

int ballistic_front(double t_mag, long long tau, double epsilon) {
    if (tau < 1)
        throw std::invalid_argument("ballistic_front: need tau >= 1");
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("ballistic_front: need 0 < epsilon < 1");
    if (t_mag <= 0.0 || t_mag > 1.0)
        throw std::invalid_argument("ballistic_front: need 0 < |t| <= 1");

    if (t_mag >= 1.0 - 1e-15) return static_cast<int>(tau);  // free particle: sharp front

    // The front region has width ~ tau^(1/3); probability beyond
    // front + s * tau^(1/3) decays like exp(-s^(3/2)). Widen the buffer in
    // width units until the estimate drops below epsilon.
    const double w = std::cbrt(static_cast<double>(tau));
    double margin = 10.0 + w;
    while (std::exp(-std::pow(margin / w, 1.5)) >= epsilon) margin += w;
    return static_cast<int>(std::ceil(t_mag * tau)) + static_cast<int>(std::ceil(margin));
}

}  // namespace edgewalk
