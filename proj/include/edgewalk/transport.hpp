#pragma once

#include <vector>

#include "edgewalk/walk.hpp"

namespace edgewalk {

// Beam splitter at one chain vertex plus the phase shifter just to its
// left. |t|^2 + |r|^2 = 1; the transfer-matrix solver additionally needs
// t != 0 (t = 0 short-circuits to a perfect mirror).
struct VertexScatterer {
    cplx t{1.0, 0.0};
    cplx r{0.0, 0.0};
    double phi = 0.0;
};

struct ScatteringResult {
    double theta = 0.0;   // incoming momentum, eigenvalue e^{-i theta}
    cplx reflected;       // c_{0,-1} for unit incoming c_{-1,0}
    cplx transmitted;     // c_{N,N+1}
    double R = 0.0;       // |reflected|^2
    double T = 0.0;       // |transmitted|^2
};

// Probability current at a degree-2 vertex k of a ring/line:
//   J_k = (c*_{k+1,k}, c*_{k-1,k}) [[|t|^2, t r e^{i phi}],
//                                   [t* r* e^{-i phi}, -|t|^2]]
//         (c_{k+1,k}, c_{k-1,k})^T
// The matrix is Hermitian, so the value is real.
double probability_current(const WalkState& s, const Graph& ring, VertexId k,
                           const VertexScatterer& sc);

// Step operator of the ring built from per-vertex scatterers; phi_k becomes
// a port phase at (vertex k, port 0), i.e. just left of vertex k.
StepOperator scatterer_ring_operator(const Graph& ring, const std::vector<VertexScatterer>& sc);

// max over k of |Delta P_{k,k+1} - (J_{k+1} - J_k)| for one step of `op`,
// with J evaluated on the pre-step state. Contract: < 1e-12 when op was
// assembled from the same scatterers.
double continuity_check(const StepOperator& op, const WalkState& s,
                        const std::vector<VertexScatterer>& sc);

// Eigenstate U|Psi> = e^{-i theta}|Psi> of a line whose vertices 0..N-1
// carry `barrier` and are embedded in free (t=1) leads. Boundary
// conditions: unit incoming wave from the left, nothing incoming from the
// right. Solved by propagating the per-vertex transfer matrices; an opaque
// vertex (t = 0) truncates the chain with R = 1, T = 0.
ScatteringResult scattering_coefficients(const std::vector<VertexScatterer>& barrier,
                                         double theta);

// Independent per-theta solves over a uniform grid of n_theta points in
// [theta_min, theta_max).
std::vector<ScatteringResult> scattering_sweep(const std::vector<VertexScatterer>& barrier,
                                               int n_theta, double theta_min, double theta_max);

}  // namespace edgewalk
