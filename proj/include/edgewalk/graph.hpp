#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "edgewalk/types.hpp"

namespace edgewalk {

using VertexId = std::int32_t;

// A photon on edge {tail, head} travelling from tail to head.
struct DirectedEdgeState {
    VertexId tail = 0;
    VertexId head = 0;
    friend bool operator==(const DirectedEdgeState&, const DirectedEdgeState&) = default;
};

// Phase shifter attached to one port of a vertex. The factor e^{i phi} is
// applied on every traversal of the port, so entering and reflecting back
// out through the same port accumulates e^{2 i phi} while a transmission
// through the vertex picks up a single e^{i phi}.
struct PortPhase {
    VertexId vertex = 0;
    int port = 0;
    double phi = 0.0;
};

// Undirected simple graph with per-vertex ordered ports and a dense
// indexing of the 2E directed edge states. Immutable after construction;
// safe to share across threads.
class Graph {
public:
    // Builds a graph from an undirected edge list. Vertex count is
    // max id + 1; every vertex must be incident to at least one edge.
    // Ports are ordered by ascending neighbor id.
    // Throws std::invalid_argument on self-loops, duplicate edges or
    // dangling vertex ids.
    static Graph from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges);

    // Ring of n >= 3 vertices, vertex n-1 adjacent to 0. Port 0 of vertex j
    // faces j-1 (mod n), port 1 faces j+1 (mod n). Edge j connects j and
    // j+1 (mod n).
    static Graph cycle(int n);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edge_endpoints_.size()); }
    int state_count() const { return 2 * edge_count(); }

    int degree(VertexId v) const { return static_cast<int>(ports_[v].size()); }

    // Neighbors of v, indexed by port.
    const std::vector<VertexId>& ports(VertexId v) const { return ports_[v]; }

    // Port index of the edge at v leading toward `neighbor`.
    int port_of(VertexId v, VertexId neighbor) const;

    // Undirected edge id incident to port `port` of v.
    int edge_at_port(VertexId v, int port) const { return incident_edges_[v][port]; }

    // Directed-state index: edge index * 2 + direction bit (bit 0 follows
    // the stored endpoint order). Round-trips with state_of_index.
    int state_index(VertexId tail, VertexId head) const;
    int state_index(const DirectedEdgeState& s) const { return state_index(s.tail, s.head); }
    DirectedEdgeState state_of_index(int index) const;

    std::pair<VertexId, VertexId> edge_endpoints(int edge) const { return edge_endpoints_[edge]; }

    bool is_cycle() const { return is_cycle_; }

private:
    Graph() = default;
    void build_indices();

    int vertex_count_ = 0;
    bool is_cycle_ = false;
    std::vector<std::pair<VertexId, VertexId>> edge_endpoints_;
    std::vector<std::vector<VertexId>> ports_;        // ports_[v][p] = neighbor
    std::vector<std::vector<int>> incident_edges_;    // incident_edges_[v][p] = edge id
};

// Signed line coordinate of a ring vertex, in [-n/2, n/2). Used when a ring
// of n >= 2*tau + 4 emulates the infinite line.
int line_coordinate(const Graph& ring, VertexId v);

// Ring vertex carrying the signed line coordinate.
VertexId ring_vertex(const Graph& ring, int coordinate);

}  // namespace edgewalk
