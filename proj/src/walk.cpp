#include "edgewalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace edgewalk {

namespace {

// States smaller than this are stepped serially; the gather kernel only
// pays off once the amplitude vector stops fitting comfortably in cache.
constexpr int kParallelCutoff = 8192;

struct KahanAccumulator {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

double WalkState::norm() const {
    double s = 0.0;
    for (const cplx& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

WalkState basis_state(const Graph& g, VertexId tail, VertexId head) {
    WalkState s;
    s.amplitudes.assign(g.state_count(), cplx(0.0));
    s.amplitudes[g.state_index(tail, head)] = 1.0;
    return s;
}

WalkState uniform_state(const Graph& g) {
    WalkState s;
    s.amplitudes.assign(g.state_count(), cplx(1.0 / std::sqrt(double(g.state_count()))));
    return s;
}

WalkState state_from_amplitudes(std::vector<cplx> amplitudes, double tol) {
    WalkState s{std::move(amplitudes)};
    double n = s.norm();
    if (std::abs(n - 1.0) > tol)
        throw std::invalid_argument("state_from_amplitudes: norm deviates from 1 by " +
                                    std::to_string(std::abs(n - 1.0)));
    return s;
}

StepOperator build_step_operator(const Graph& g,
                                 const std::map<VertexId, LocalUnitary>& unitaries,
                                 const std::vector<PortPhase>& phases) {
    const int dim = g.state_count();

    // Port phase lookup, default 0.
    std::vector<std::vector<double>> phase(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        phase[v].assign(g.degree(v), 0.0);
    for (const PortPhase& pp : phases) {
        if (pp.vertex < 0 || pp.vertex >= g.vertex_count())
            throw std::invalid_argument("port phase: vertex out of range");
        if (pp.port < 0 || pp.port >= g.degree(pp.vertex))
            throw std::invalid_argument("port phase: port " + std::to_string(pp.port) +
                                        " out of range at vertex " + std::to_string(pp.vertex));
        if (!std::isfinite(pp.phi))
            throw std::invalid_argument("port phase: phi must be finite");
        phase[pp.vertex][pp.port] += pp.phi;
    }

    // Resolve and validate one unitary per vertex.
    std::vector<const LocalUnitary*> local(g.vertex_count(), nullptr);
    LocalUnitary default_mirror = mirror_unitary();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto it = unitaries.find(v);
        if (it == unitaries.end()) {
            if (g.degree(v) == 1) {
                local[v] = &default_mirror;
                continue;
            }
            throw std::invalid_argument("build_step_operator: no unitary for vertex " +
                                        std::to_string(v));
        }
        if (it->second.dim() != g.degree(v))
            throw std::invalid_argument("build_step_operator: unitary dimension " +
                                        std::to_string(it->second.dim()) + " != degree " +
                                        std::to_string(g.degree(v)) + " at vertex " +
                                        std::to_string(v));
        if (!validate_unitary(it->second, kUnitaryTol))
            throw std::invalid_argument("build_step_operator: matrix at vertex " +
                                        std::to_string(v) + " is not unitary");
        local[v] = &it->second;
    }

    StepOperator op;
    op.graph_ = g;
    op.scatter_ptr_.assign(dim + 1, 0);

    std::vector<std::vector<StepEntry>> rows(dim);
    for (int s = 0; s < dim; ++s) {
        auto [u, v] = g.state_of_index(s);
        const LocalUnitary& m = *local[v];
        int pin = g.port_of(v, u);
        double phi_in = phase[v][pin];
        for (int pout = 0; pout < g.degree(v); ++pout) {
            cplx amp = m(pout, pin);
            if (amp == cplx(0.0)) continue;
            VertexId w = g.ports(v)[pout];
            amp *= std::polar(1.0, phi_in + phase[v][pout]);
            rows[s].push_back({g.state_index(v, w), amp});
        }
    }

    for (int s = 0; s < dim; ++s)
        op.scatter_ptr_[s + 1] = op.scatter_ptr_[s] + static_cast<int>(rows[s].size());
    op.scatter_.reserve(op.scatter_ptr_[dim]);
    for (int s = 0; s < dim; ++s)
        op.scatter_.insert(op.scatter_.end(), rows[s].begin(), rows[s].end());

    // Transpose into the gather layout.
    op.gather_ptr_.assign(dim + 1, 0);
    for (const StepEntry& e : op.scatter_)
        ++op.gather_ptr_[e.target + 1];
    for (int i = 0; i < dim; ++i)
        op.gather_ptr_[i + 1] += op.gather_ptr_[i];
    op.gather_source_.resize(op.scatter_.size());
    op.gather_amp_.resize(op.scatter_.size());
    std::vector<int> cursor(op.gather_ptr_.begin(), op.gather_ptr_.end() - 1);
    for (int s = 0; s < dim; ++s) {
        for (int i = op.scatter_ptr_[s]; i < op.scatter_ptr_[s + 1]; ++i) {
            int pos = cursor[op.scatter_[i].target]++;
            op.gather_source_[pos] = s;
            op.gather_amp_[pos] = op.scatter_[i].amplitude;
        }
    }
    return op;
}

StepOperator uniform_splitter_operator(const Graph& g, cplx t, cplx r,
                                       const std::vector<PortPhase>& phases) {
    std::map<VertexId, LocalUnitary> unitaries;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 2)
            unitaries.emplace(v, beam_splitter_unitary(t, r));
        else if (d == 1)
            unitaries.emplace(v, mirror_unitary());
        else
            throw std::invalid_argument("uniform_splitter_operator: vertex " + std::to_string(v) +
                                        " has degree " + std::to_string(d));
    }
    return build_step_operator(g, unitaries, phases);
}

std::vector<PortPhase> alternating_edge_phases(const Graph& ring, double phi) {
    if (!ring.is_cycle())
        throw std::invalid_argument("alternating_edge_phases: graph is not a ring");
    if (ring.vertex_count() % 2 != 0)
        throw std::invalid_argument("alternating_edge_phases: ring size must be even");
    std::vector<PortPhase> phases;
    for (VertexId v = 1; v < ring.vertex_count(); v += 2)
        phases.push_back({v, 0, phi});  // port 0 faces v-1: the even-origin edge
    return phases;
}

double unitarity_residual(const StepOperator& op) {
    const Graph& g = op.graph();
    double worst = 0.0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.ports(v);
        const int d = static_cast<int>(nb.size());
        // Sources entering v; disjoint head groups cannot overlap.
        std::vector<int> sources(d);
        for (int p = 0; p < d; ++p) sources[p] = g.state_index(nb[p], v);
        for (int a = 0; a < d; ++a) {
            for (int b = a; b < d; ++b) {
                cplx gram = 0.0;
                auto ea = op.entries_from(sources[a]);
                auto eb = op.entries_from(sources[b]);
                for (const StepEntry& x : ea)
                    for (const StepEntry& y : eb)
                        if (x.target == y.target) gram += std::conj(x.amplitude) * y.amplitude;
                if (a == b) gram -= 1.0;
                worst = std::max(worst, std::abs(gram));
            }
        }
    }
    return worst;
}

int locality_violations(const StepOperator& op) {
    const Graph& g = op.graph();
    int count = 0;
    for (int s = 0; s < op.dim(); ++s) {
        VertexId head = g.state_of_index(s).head;
        for (const StepEntry& e : op.entries_from(s))
            if (g.state_of_index(e.target).tail != head) ++count;
    }
    return count;
}

WalkState apply_step_serial(const StepOperator& op, const WalkState& s) {
    if (s.dim() != op.dim())
        throw std::invalid_argument("apply_step: state dimension mismatch");
    WalkState out;
    out.amplitudes.assign(op.dim(), cplx(0.0));
    const cplx* in = s.amplitudes.data();
    for (int t = 0; t < op.dim(); ++t) {
        cplx acc = 0.0;
        for (int i = op.gather_ptr_[t]; i < op.gather_ptr_[t + 1]; ++i)
            acc += op.gather_amp_[i] * in[op.gather_source_[i]];
        out.amplitudes[t] = acc;
    }
    return out;
}

WalkState apply_step_parallel(const StepOperator& op, const WalkState& s) {
    if (s.dim() != op.dim())
        throw std::invalid_argument("apply_step: state dimension mismatch");
    WalkState out;
    out.amplitudes.assign(op.dim(), cplx(0.0));
    const cplx* in = s.amplitudes.data();
    cplx* o = out.amplitudes.data();
    const int dim = op.dim();
#pragma omp parallel for schedule(static)
    for (int t = 0; t < dim; ++t) {
        cplx acc = 0.0;
        for (int i = op.gather_ptr_[t]; i < op.gather_ptr_[t + 1]; ++i)
            acc += op.gather_amp_[i] * in[op.gather_source_[i]];
        o[t] = acc;
    }
    return out;
}

WalkState apply_step(const StepOperator& op, const WalkState& s) {
    if (op.dim() >= kParallelCutoff) return apply_step_parallel(op, s);
    return apply_step_serial(op, s);
}

WalkState evolve(const StepOperator& op, WalkState s, int steps) {
    if (steps < 0)
        throw std::invalid_argument("evolve: negative step count");
    for (int k = 0; k < steps; ++k) s = apply_step(op, s);
    return s;
}

double Distribution::sum() const {
    double total = 0.0;
    for (double x : p) total += x;
    return total;
}

Distribution edge_probabilities(const WalkState& s, const Graph& g) {
    if (s.dim() != g.state_count())
        throw std::invalid_argument("edge_probabilities: state dimension mismatch");
    Distribution d;
    d.kind = Distribution::Kind::edge;
    d.p.resize(g.edge_count());
    d.labels.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        d.p[e] = std::norm(s.amplitudes[2 * e]) + std::norm(s.amplitudes[2 * e + 1]);
        auto [u, v] = g.edge_endpoints(e);
        d.labels[e] = std::to_string(u) + "-" + std::to_string(v);
    }
    return d;
}

Distribution vertex_probabilities(const WalkState& s, const Graph& g) {
    if (s.dim() != g.state_count())
        throw std::invalid_argument("vertex_probabilities: state dimension mismatch");
    Distribution d;
    d.kind = Distribution::Kind::vertex;
    d.p.assign(g.vertex_count(), 0.0);
    d.labels.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId u : g.ports(v))
            d.p[v] += std::norm(s.amplitudes[g.state_index(u, v)]);
        d.labels[v] = std::to_string(v);
    }
    return d;
}

Distribution time_averaged_distribution(const StepOperator& op, const WalkState& s, int m) {
    if (m < 1)
        throw std::invalid_argument("time_averaged_distribution: need m >= 1");
    const Graph& g = op.graph();
    std::vector<KahanAccumulator> acc(g.edge_count());
    WalkState cur = s;
    for (int step = 0; step < m; ++step) {
        for (int e = 0; e < g.edge_count(); ++e)
            acc[e].add(std::norm(cur.amplitudes[2 * e]) + std::norm(cur.amplitudes[2 * e + 1]));
        if (step + 1 < m) cur = apply_step(op, cur);
    }
    Distribution d;
    d.kind = Distribution::Kind::edge;
    d.p.resize(g.edge_count());
    d.labels.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        d.p[e] = acc[e].sum / m;
        auto [u, v] = g.edge_endpoints(e);
        d.labels[e] = std::to_string(u) + "-" + std::to_string(v);
    }
    return d;
}

std::vector<std::pair<int, double>> line_edge_profile(const WalkState& s, const Graph& ring) {
    if (!ring.is_cycle())
        throw std::invalid_argument("line_edge_profile: graph is not a ring");
    std::vector<std::pair<int, double>> out;
    out.reserve(ring.edge_count());
    for (int e = 0; e < ring.edge_count(); ++e) {
        double p = std::norm(s.amplitudes[2 * e]) + std::norm(s.amplitudes[2 * e + 1]);
        out.emplace_back(line_coordinate(ring, e), p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, double>> line_vertex_profile(const WalkState& s, const Graph& ring) {
    Distribution d = vertex_probabilities(s, ring);
    std::vector<std::pair<int, double>> out;
    out.reserve(d.p.size());
    for (VertexId v = 0; v < ring.vertex_count(); ++v)
        out.emplace_back(line_coordinate(ring, v), d.p[v]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace edgewalk
