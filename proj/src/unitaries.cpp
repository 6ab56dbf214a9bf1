#include "edgewalk/unitaries.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace edgewalk {

LocalUnitary::LocalUnitary(int dim, std::vector<cplx> row_major)
    : dim_(dim), m_(std::move(row_major)) {
    if (dim_ <= 0 || m_.size() != static_cast<size_t>(dim_) * dim_)
        throw std::invalid_argument("LocalUnitary: matrix size does not match dimension");
}

double unitarity_defect(const LocalUnitary& m) {
    const int d = m.dim();
    double worst = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            cplx g = 0.0;
            for (int k = 0; k < d; ++k)
                g += std::conj(m(k, a)) * m(k, b);
            if (a == b) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst;
}

bool validate_unitary(const LocalUnitary& m, double tol) {
    return unitarity_defect(m) <= tol;
}

LocalUnitary beam_splitter_unitary(cplx t, cplx r) {
    double defect = std::abs(std::norm(t) + std::norm(r) - 1.0);
    if (defect > kUnitaryTol)
        throw std::invalid_argument("beam_splitter_unitary: |t|^2 + |r|^2 deviates from 1 by " +
                                    std::to_string(defect));
    return LocalUnitary(2, {r, std::conj(t), t, -std::conj(r)});
}

LocalUnitary mirror_unitary(cplx amplitude) {
    if (std::abs(std::abs(amplitude) - 1.0) > kUnitaryTol)
        throw std::invalid_argument("mirror_unitary: amplitude must have modulus 1");
    return LocalUnitary(1, {amplitude});
}

LocalUnitary tritter_unitary() {
    const double s = 1.0 / std::sqrt(3.0);
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const cplx zc = std::conj(z);
    // columns = inputs (A, B, C), rows = outputs (A, B, C)
    return LocalUnitary(3, {s, s * zc, s * zc,
                            s, s,      s * z,
                            s, s * z,  s});
}

LocalUnitary grover_unitary(int n, cplx t, cplx r) {
    if (n < 2)
        throw std::invalid_argument("grover_unitary: need n >= 2");
    double c1 = std::abs((n - 1) * std::norm(t) + std::norm(r) - 1.0);
    double c2 = std::abs(static_cast<double>(n - 2) * std::norm(t) +
                         2.0 * std::real(std::conj(r) * t));
    if (c1 > kUnitaryTol || c2 > kUnitaryTol)
        throw std::invalid_argument("grover_unitary: amplitudes violate the unitarity conditions");
    std::vector<cplx> m(static_cast<size_t>(n) * n, t);
    for (int i = 0; i < n; ++i)
        m[static_cast<size_t>(i) * n + i] = r;
    return LocalUnitary(n, std::move(m));
}

}  // namespace edgewalk
