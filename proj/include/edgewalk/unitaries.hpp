#pragma once

#include <vector>

#include "edgewalk/types.hpp"

namespace edgewalk {

// Per-vertex unitary on port amplitudes. Rows index the output port,
// columns the input port, so composition reads as matrix product.
class LocalUnitary {
public:
    LocalUnitary() = default;
    LocalUnitary(int dim, std::vector<cplx> row_major);

    int dim() const { return dim_; }
    cplx operator()(int out_port, int in_port) const { return m_[out_port * dim_ + in_port]; }
    cplx& operator()(int out_port, int in_port) { return m_[out_port * dim_ + in_port]; }

private:
    int dim_ = 0;
    std::vector<cplx> m_;
};

// max |(M^dag M - I)_ab|
double unitarity_defect(const LocalUnitary& m);

bool validate_unitary(const LocalUnitary& m, double tol);

// Two-port vertex with transmission t and reflection r, |t|^2 + |r|^2 = 1.
// Input port 0 scatters to (r, t), input port 1 to (t*, -r*):
//     M = [[r, t*], [t, -r*]]
LocalUnitary beam_splitter_unitary(cplx t, cplx r);

// 1x1 unitary for degree-1 line endpoints; default amplitude -1 (mirror).
LocalUnitary mirror_unitary(cplx amplitude = cplx(-1.0, 0.0));

// Symmetric three-port with equal exit probabilities 1/3 and cube-root
// phases z = exp(2 pi i / 3); port 0 plays the labelled edge.
LocalUnitary tritter_unitary();

// n-port with reflection amplitude r on the diagonal and common
// transmission t off the diagonal. Validates both unitarity conditions
//   (n-1)|t|^2 + |r|^2 = 1 and (n-2)|t|^2 + r* t + t* r = 0.
LocalUnitary grover_unitary(int n, cplx t, cplx r);

}  // namespace edgewalk
