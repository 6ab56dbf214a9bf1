#pragma once

#include <vector>

#include "edgewalk/walk.hpp"

namespace edgewalk {

struct MomentumSector {
    int k = 0;
    double theta = 0.0;  // 2 pi k / n
};

// One eigenpair of the uniform or phase-shifted ring walk. `coeffs` holds
// the expansion in the momentum-sector basis: (a+, a-) for the uniform
// ring, (a+, b-, a-, b+) for the two-periodic phase-shifted ring.
struct SpectrumEntry {
    MomentumSector sector;
    int branch = +1;          // sign of Im(lambda); advisory when degenerate
    bool degenerate = false;  // lambda real within tolerance
    cplx lambda;
    std::vector<cplx> coeffs;
};

// Closed-form eigensystem of the uniform ring walk: 2 branches per momentum
// sector k = 0..n-1. Requires r != 0 (the free case has plane-wave
// eigenvectors instead; this throws).
std::vector<SpectrumEntry> cycle_eigensystem(int n, cplx t, cplx r);

// Eigensystem of the two-periodic phase-shifted ring (shifter on every
// even-origin edge), obtained by dense diagonalization of the 4x4 sector
// matrix. Four entries per sector k = 0..n-1; sectors k and k + n/2 span
// the same invariant subspace, so the list double-covers the spectrum.
std::vector<SpectrumEntry> phase_shifted_eigensystem(int n, cplx t, cplx r, double phi);

// Expands an entry into the 2n-dimensional edge basis of `ring`.
std::vector<cplx> edge_vector(const Graph& ring, const SpectrumEntry& e);

// || U psi - lambda psi ||_2 against the assembled operator.
double eigen_residual(const StepOperator& op, const SpectrumEntry& e);

// |lambda^4 + lambda^2 Q + e^{2 i phi}| for the phase-shifted quartic.
double quartic_residual(cplx lambda, double theta, cplx t, cplx r, double phi);

// (|a+|^2 + |a-|^2) / (|b+|^2 + |b-|^2) for a 4-coefficient entry.
double even_odd_ratio(const SpectrumEntry& e);

// True iff n * arg(t) / pi is a non-integer (all eigenvalues distinct, so
// the time-averaged edge distribution converges to 1/n).
bool uniform_limit_condition(int n, cplx t);

}  // namespace edgewalk
