#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgewalk/graph.hpp"
#include "edgewalk/unitaries.hpp"

namespace edgewalk {

// Complex amplitudes over the 2E directed edge states of a graph.
struct WalkState {
    std::vector<cplx> amplitudes;

    double norm() const;
    int dim() const { return static_cast<int>(amplitudes.size()); }
};

WalkState basis_state(const Graph& g, VertexId tail, VertexId head);
WalkState uniform_state(const Graph& g);

// Validates sum |c|^2 = 1 within tol.
WalkState state_from_amplitudes(std::vector<cplx> amplitudes, double tol = 1e-10);

struct StepEntry {
    int target;
    cplx amplitude;
};

// One-step unitary of the walk, assembled from per-vertex local unitaries
// and port phases. Stored sparsely in both directions: a scatter adjacency
// (spec'd contract, source -> targets) and its transpose in CSR form for
// the gather apply kernels. Immutable and shareable across threads.
class StepOperator {
public:
    int dim() const { return static_cast<int>(scatter_ptr_.size()) - 1; }
    const Graph& graph() const { return graph_; }

    // All (target, amplitude) pairs fed by `source`.
    std::span<const StepEntry> entries_from(int source) const {
        return {scatter_.data() + scatter_ptr_[source],
                scatter_.data() + scatter_ptr_[source + 1]};
    }

private:
    StepOperator() = default;

    Graph graph_;
    std::vector<int> scatter_ptr_;
    std::vector<StepEntry> scatter_;
    // Transposed layout: out[t] = sum_i gather_amp_[i] * in[gather_source_[i]]
    std::vector<int> gather_ptr_;
    std::vector<int> gather_source_;
    std::vector<cplx> gather_amp_;

    friend StepOperator build_step_operator(const Graph&,
                                            const std::map<VertexId, LocalUnitary>&,
                                            const std::vector<PortPhase>&);
    friend WalkState apply_step_serial(const StepOperator&, const WalkState&);
    friend WalkState apply_step_parallel(const StepOperator&, const WalkState&);
};

// Assembles the global step operator. Every vertex needs a LocalUnitary of
// dimension equal to its degree; degree-1 vertices default to the -1 mirror
// when absent from the map. All unitaries are validated at kUnitaryTol.
// The amplitude from state (u -> v) to (v -> w) is
//     e^{i phi_in} * U_v[port(v,w), port(v,u)] * e^{i phi_out}
// with phi_in / phi_out the port phases (0 if absent) at (v, toward u) and
// (v, toward w).
StepOperator build_step_operator(const Graph& g,
                                 const std::map<VertexId, LocalUnitary>& unitaries,
                                 const std::vector<PortPhase>& phases = {});

// Same beam splitter at every degree-2 vertex, mirrors at degree-1 ends.
StepOperator uniform_splitter_operator(const Graph& g, cplx t, cplx r,
                                       const std::vector<PortPhase>& phases = {});

// Shifter on every edge whose lower-numbered end is even ("every second
// edge"); realized as a port phase at (odd vertex, port 0). Requires an
// even ring.
std::vector<PortPhase> alternating_edge_phases(const Graph& ring, double phi);

// max_{s,s'} |(U^dag U - I)_{s s'}|, via column Gram products of sources
// sharing a head vertex.
double unitarity_residual(const StepOperator& op);

// max over sources of entries whose target tail differs from the source
// head (0 for any operator built by build_step_operator).
int locality_violations(const StepOperator& op);

WalkState apply_step(const StepOperator& op, const WalkState& s);
WalkState apply_step_serial(const StepOperator& op, const WalkState& s);
WalkState apply_step_parallel(const StepOperator& op, const WalkState& s);

WalkState evolve(const StepOperator& op, WalkState s, int steps);

struct Distribution {
    enum class Kind { edge, vertex };
    Kind kind = Kind::edge;
    std::vector<double> p;
    std::vector<std::string> labels;

    double sum() const;
};

// p(edge {u,v}) = |c_{u,v}|^2 + |c_{v,u}|^2
Distribution edge_probabilities(const WalkState& s, const Graph& g);

// p(vertex v) = sum over inbound states |c_{., v}|^2
Distribution vertex_probabilities(const WalkState& s, const Graph& g);

// Cesaro mean of the edge distribution over steps 0 .. m-1, accumulated
// with compensated summation.
Distribution time_averaged_distribution(const StepOperator& op, const WalkState& s, int m);

// Ring-as-line views: (signed line coordinate of the left end, probability),
// sorted by coordinate. Edge ell connects coordinates ell and ell+1.
std::vector<std::pair<int, double>> line_edge_profile(const WalkState& s, const Graph& ring);
std::vector<std::pair<int, double>> line_vertex_profile(const WalkState& s, const Graph& ring);

}  // namespace edgewalk
