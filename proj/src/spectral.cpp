#include "edgewalk/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace edgewalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid_amplitudes(cplx t, cplx r, const char* who) {
    if (std::abs(std::norm(t) + std::norm(r) - 1.0) > kUnitaryTol)
        throw std::invalid_argument(std::string(who) + ": |t|^2 + |r|^2 != 1");
    if (std::abs(r) <= kUnitaryTol)
        throw std::invalid_argument(std::string(who) +
                                    ": r = 0 is the free walk; its eigenvectors are plane waves "
                                    "and the sector coefficients degenerate");
}

}  // namespace

std::vector<SpectrumEntry> cycle_eigensystem(int n, cplx t, cplx r) {
    if (n < 3) throw std::invalid_argument("cycle_eigensystem: need n >= 3");
    require_valid_amplitudes(t, r, "cycle_eigensystem");

    const double t_mag = std::abs(t);
    const double eta = std::arg(t);

    std::vector<SpectrumEntry> entries;
    entries.reserve(2 * n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / n;
        const double delta = theta - eta;
        const double s = t_mag * std::sin(delta);              // S_k
        const double c = std::sqrt(1.0 - t_mag * t_mag * std::cos(delta) * std::cos(delta));  // C_k
        const double re = t_mag * std::cos(delta);

        // c > |s| always holds for r != 0 (c^2 - s^2 = |r|^2), so the
        // normalizing denominators below never vanish.
        const double d_plus = std::sqrt(2.0 * c * (c + s));
        const double d_minus = std::sqrt(2.0 * c * (c - s));

        SpectrumEntry plus;
        plus.sector = {k, theta};
        plus.branch = +1;
        plus.lambda = cplx(re, c);
        plus.coeffs = {std::conj(r) / d_plus, cplx(0.0, -(s + c)) / d_plus};
        entries.push_back(std::move(plus));

        SpectrumEntry minus;
        minus.sector = {k, theta};
        minus.branch = -1;
        minus.lambda = cplx(re, -c);
        minus.coeffs = {std::conj(r) / d_minus, cplx(0.0, c - s) / d_minus};
        entries.push_back(std::move(minus));
    }
    return entries;
}

std::vector<SpectrumEntry> phase_shifted_eigensystem(int n, cplx t, cplx r, double phi) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("phase_shifted_eigensystem: need an even ring, n >= 4");
    require_valid_amplitudes(t, r, "phase_shifted_eigensystem");

    const cplx tc = std::conj(t);
    const cplx rc = std::conj(r);

    std::vector<SpectrumEntry> entries;
    entries.reserve(4 * n);
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * kPi * k / n;
        const cplx eth = std::polar(1.0, theta);
        const cplx eph = std::polar(1.0, phi);

        // Sector matrix on (a+, b-, a-, b+).
        Eigen::Matrix4cd m;
        m << 0.0, 0.0, -rc, t / eth,
             0.0, 0.0, tc * eth, r,
             r * eph * eph, tc * eth * eph, 0.0, 0.0,
             t * eph / eth, -rc, 0.0, 0.0;

        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m);
        if (solver.info() != Eigen::Success)
            throw NumericError("phase_shifted_eigensystem: 4x4 eigensolver failed");

        for (int i = 0; i < 4; ++i) {
            SpectrumEntry e;
            e.sector = {k, theta};
            e.lambda = solver.eigenvalues()(i);
            e.degenerate = std::abs(e.lambda.imag()) < 1e-12;
            e.branch = (e.lambda.imag() >= 0.0) ? +1 : -1;
            Eigen::Vector4cd v = solver.eigenvectors().col(i);
            v.normalize();
            e.coeffs = {v(0), v(1), v(2), v(3)};
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

std::vector<cplx> edge_vector(const Graph& ring, const SpectrumEntry& e) {
    if (!ring.is_cycle())
        throw std::invalid_argument("edge_vector: graph is not a ring");
    const int n = ring.vertex_count();
    std::vector<cplx> v(ring.state_count(), cplx(0.0));

    if (e.coeffs.size() == 2) {
        const double scale = 1.0 / std::sqrt(double(n));
        for (int j = 0; j < n; ++j) {
            cplx w = std::polar(scale, j * e.sector.theta);
            v[2 * j] = w * e.coeffs[0];      // |j, j+1>
            v[2 * j + 1] = w * e.coeffs[1];  // |j+1, j>
        }
        return v;
    }
    if (e.coeffs.size() == 4) {
        if (n % 2 != 0)
            throw std::invalid_argument("edge_vector: 4-coefficient entry needs an even ring");
        const double scale = std::sqrt(2.0 / n);
        const cplx a_plus = e.coeffs[0], b_minus = e.coeffs[1];
        const cplx a_minus = e.coeffs[2], b_plus = e.coeffs[3];
        for (int j = 0; j < n; ++j) {
            cplx w = std::polar(scale, j * e.sector.theta);
            v[2 * j] = w * (j % 2 == 0 ? a_plus : b_plus);
            v[2 * j + 1] = w * (j % 2 == 0 ? a_minus : b_minus);
        }
        return v;
    }
    throw std::invalid_argument("edge_vector: entry must carry 2 or 4 coefficients");
}

double eigen_residual(const StepOperator& op, const SpectrumEntry& e) {
    WalkState psi{edge_vector(op.graph(), e)};
    WalkState image = apply_step_serial(op, psi);
    double acc = 0.0;
    for (int i = 0; i < psi.dim(); ++i)
        acc += std::norm(image.amplitudes[i] - e.lambda * psi.amplitudes[i]);
    return std::sqrt(acc);
}

double quartic_residual(cplx lambda, double theta, cplx t, cplx r, double phi) {
    const cplx eph = std::polar(1.0, phi);
    const cplx e2th = std::polar(1.0, 2.0 * theta);
    const cplx q = std::norm(r) * (1.0 + eph * eph) -
                   eph * (std::conj(t) * std::conj(t) * e2th + t * t / e2th);
    const cplx l2 = lambda * lambda;
    return std::abs(l2 * l2 + l2 * q + eph * eph);
}

double even_odd_ratio(const SpectrumEntry& e) {
    if (e.coeffs.size() != 4)
        throw std::invalid_argument("even_odd_ratio: entry must carry 4 coefficients");
    const double even = std::norm(e.coeffs[0]) + std::norm(e.coeffs[2]);
    const double odd = std::norm(e.coeffs[1]) + std::norm(e.coeffs[3]);
    if (odd == 0.0)
        throw std::invalid_argument("even_odd_ratio: zero odd-edge probability");
    return even / odd;
}

bool uniform_limit_condition(int n, cplx t) {
    if (t == cplx(0.0))
        throw std::invalid_argument("uniform_limit_condition: t = 0");
    const double x = n * std::arg(t) / kPi;
    return std::abs(x - std::round(x)) > 1e-9;
}

}  // namespace edgewalk
