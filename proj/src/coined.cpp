#include "edgewalk/coined.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace edgewalk {

namespace {
constexpr int kR = 0;
constexpr int kL = 1;
}  // namespace

double CoinedState::norm() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

CoinOperator coin_from_amplitudes(cplx t, cplx r) {
    if (std::abs(std::norm(t) + std::norm(r) - 1.0) > kUnitaryTol)
        throw std::invalid_argument("coin_from_amplitudes: |t|^2 + |r|^2 != 1");
    CoinOperator g;
    g.m[kR][kR] = t;
    g.m[kL][kR] = r;
    g.m[kR][kL] = -std::conj(r);
    g.m[kL][kL] = std::conj(t);
    return g;
}

CoinedState coined_step(const CoinedState& s, const CoinOperator& g) {
    const int n = s.n;
    if (n < 3 || s.amplitudes.size() != static_cast<size_t>(2 * n))
        throw std::invalid_argument("coined_step: malformed state");
    CoinedState out;
    out.n = n;
    out.amplitudes.assign(2 * n, cplx(0.0));
    for (int j = 0; j < n; ++j) {
        const cplx flipped_r = g.m[kR][kR] * s.at(j, kR) + g.m[kR][kL] * s.at(j, kL);
        const cplx flipped_l = g.m[kL][kR] * s.at(j, kR) + g.m[kL][kL] * s.at(j, kL);
        out.at((j + 1) % n, kR) += flipped_r;        // S on the R component
        out.at((j + n - 1) % n, kL) += flipped_l;    // S^dag on the L component
    }
    return out;
}

CoinedState edge_to_coined(const WalkState& s, const Graph& ring) {
    if (!ring.is_cycle())
        throw std::invalid_argument("edge_to_coined: graph is not a ring");
    const int n = ring.vertex_count();
    if (s.dim() != ring.state_count())
        throw std::invalid_argument("edge_to_coined: state dimension mismatch");
    CoinedState out;
    out.n = n;
    out.amplitudes.assign(2 * n, cplx(0.0));
    for (int j = 0; j < n; ++j) {
        // |j-1, j> -> |j>|R>,  |j+1, j> -> |j>|L>
        out.at(j, kR) = s.amplitudes[ring.state_index((j + n - 1) % n, j)];
        out.at(j, kL) = s.amplitudes[ring.state_index((j + 1) % n, j)];
    }
    return out;
}

WalkState coined_to_edge(const CoinedState& s, const Graph& ring) {
    if (!ring.is_cycle())
        throw std::invalid_argument("coined_to_edge: graph is not a ring");
    const int n = ring.vertex_count();
    if (s.n != n)
        throw std::invalid_argument("coined_to_edge: ring size mismatch");
    WalkState out;
    out.amplitudes.assign(ring.state_count(), cplx(0.0));
    for (int j = 0; j < n; ++j) {
        out.amplitudes[ring.state_index((j + n - 1) % n, j)] = s.at(j, kR);
        out.amplitudes[ring.state_index((j + 1) % n, j)] = s.at(j, kL);
    }
    return out;
}

std::vector<double> coined_vertex_probabilities(const CoinedState& s) {
    std::vector<double> p(s.n, 0.0);
    for (int j = 0; j < s.n; ++j)
        p[j] = std::norm(s.at(j, kR)) + std::norm(s.at(j, kL));
    return p;
}

double intertwining_deviation(const Graph& ring, const StepOperator& u, const CoinOperator& g) {
    double worst = 0.0;
    for (int idx = 0; idx < ring.state_count(); ++idx) {
        WalkState e;
        e.amplitudes.assign(ring.state_count(), cplx(0.0));
        e.amplitudes[idx] = 1.0;

        CoinedState lhs = coined_step(edge_to_coined(e, ring), g);       // V E e
        CoinedState rhs = edge_to_coined(apply_step_serial(u, e), ring); // E U e

        double acc = 0.0;
        for (size_t i = 0; i < lhs.amplitudes.size(); ++i)
            acc += std::norm(lhs.amplitudes[i] - rhs.amplitudes[i]);
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

double verify_intertwining(int n, cplx t, cplx r) {
    Graph ring = Graph::cycle(n);
    StepOperator u = uniform_splitter_operator(ring, t, r);
    CoinOperator g = coin_from_amplitudes(t, r);
    return intertwining_deviation(ring, u, g);
}

}  // namespace edgewalk
