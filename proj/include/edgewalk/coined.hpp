#pragma once

#include <array>
#include <vector>

#include "edgewalk/walk.hpp"

namespace edgewalk {

// Coined walk on a ring of n vertices: amplitude index 2*j + c with coin
// c = 0 for R, 1 for L.
struct CoinedState {
    int n = 0;
    std::vector<cplx> amplitudes;

    double norm() const;
    cplx& at(int vertex, int coin) { return amplitudes[2 * vertex + coin]; }
    cplx at(int vertex, int coin) const { return amplitudes[2 * vertex + coin]; }
};

// 2x2 coin in the (R, L) basis, columns = input coin.
struct CoinOperator {
    std::array<std::array<cplx, 2>, 2> m{};
};

// G|R> = t|R> + r|L>,  G|L> = -r*|R> + t*|L>. Requires |t|^2 + |r|^2 = 1.
CoinOperator coin_from_amplitudes(cplx t, cplx r);

// One step of V = (S (x) |R><R| + S^dag (x) |L><L|)(I (x) G): coin flip,
// then R moves right and L moves left (indices mod n).
CoinedState coined_step(const CoinedState& s, const CoinOperator& g);

// Basis bijection E: |j-1, j> -> |j> (x) |R>,  |j+1, j> -> |j> (x) |L>.
CoinedState edge_to_coined(const WalkState& s, const Graph& ring);
WalkState coined_to_edge(const CoinedState& s, const Graph& ring);

std::vector<double> coined_vertex_probabilities(const CoinedState& s);

// max over the 2n edge basis states e of || V E e - E U e ||_2 for the
// given coin and assembled step operator.
double intertwining_deviation(const Graph& ring, const StepOperator& u, const CoinOperator& g);

// Convenience: uniform splitters + matching coin; contract: < 1e-12.
double verify_intertwining(int n, cplx t, cplx r);

}  // namespace edgewalk
