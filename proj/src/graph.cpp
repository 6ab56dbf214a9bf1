#include "edgewalk/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace edgewalk {

Graph Graph::from_edges(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (edges.empty())
        throw std::invalid_argument("graph: empty edge list");

    VertexId max_id = 0;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0)
            throw std::invalid_argument("graph: negative vertex id");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("graph: duplicate edge {" + std::to_string(key.first) +
                                        "," + std::to_string(key.second) + "}");
        max_id = std::max({max_id, u, v});
    }

    Graph g;
    g.vertex_count_ = max_id + 1;
    g.edge_endpoints_ = edges;
    g.ports_.resize(g.vertex_count_);
    for (const auto& [u, v] : edges) {
        g.ports_[u].push_back(v);
        g.ports_[v].push_back(u);
    }
    for (VertexId v = 0; v < g.vertex_count_; ++v) {
        if (g.ports_[v].empty())
            throw std::invalid_argument("graph: dangling vertex id " + std::to_string(v));
        std::sort(g.ports_[v].begin(), g.ports_[v].end());
    }
    g.build_indices();
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle: need at least 3 vertices, got " + std::to_string(n));

    Graph g;
    g.vertex_count_ = n;
    g.is_cycle_ = true;
    g.edge_endpoints_.reserve(n);
    for (VertexId j = 0; j < n; ++j)
        g.edge_endpoints_.emplace_back(j, (j + 1) % n);
    g.ports_.resize(n);
    for (VertexId j = 0; j < n; ++j)
        g.ports_[j] = {(j + n - 1) % n, (j + 1) % n};  // port 0 faces j-1
    g.build_indices();
    return g;
}

void Graph::build_indices() {
    incident_edges_.assign(vertex_count_, {});
    for (VertexId v = 0; v < vertex_count_; ++v)
        incident_edges_[v].resize(ports_[v].size());
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edge_endpoints_[e];
        incident_edges_[u][port_of(u, v)] = e;
        incident_edges_[v][port_of(v, u)] = e;
    }
}

int Graph::port_of(VertexId v, VertexId neighbor) const {
    const auto& nb = ports_[v];
    for (int p = 0; p < static_cast<int>(nb.size()); ++p)
        if (nb[p] == neighbor) return p;
    throw std::invalid_argument("graph: no edge {" + std::to_string(v) + "," +
                                std::to_string(neighbor) + "}");
}

int Graph::state_index(VertexId tail, VertexId head) const {
    int e = incident_edges_[tail][port_of(tail, head)];
    int bit = (edge_endpoints_[e].first == tail) ? 0 : 1;
    return 2 * e + bit;
}

DirectedEdgeState Graph::state_of_index(int index) const {
    auto [u, v] = edge_endpoints_[index / 2];
    if (index % 2 == 0) return {u, v};
    return {v, u};
}

int line_coordinate(const Graph& ring, VertexId v) {
    if (!ring.is_cycle())
        throw std::invalid_argument("line_coordinate: graph is not a ring");
    int n = ring.vertex_count();
    return (v + n / 2) % n - n / 2;
}

VertexId ring_vertex(const Graph& ring, int coordinate) {
    if (!ring.is_cycle())
        throw std::invalid_argument("ring_vertex: graph is not a ring");
    int n = ring.vertex_count();
    int m = ((coordinate % n) + n) % n;
    return static_cast<VertexId>(m);
}

}  // namespace edgewalk
