#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace edgewalk {

using cplx = std::complex<double>;

// Tolerance for all construction-time unitarity preconditions.
inline constexpr double kUnitaryTol = 1e-10;

// A numeric contract (norm conservation, flux conservation, distribution
// normalization, ...) was violated at run time. The CLI maps this to exit
// code 3; configuration errors map to std::invalid_argument / exit code 2.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgewalk
