#include "repdet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace repdet {

namespace {

// Complete graph without the public n >= 2 precondition; the replacement
// product needs single-vertex clouds for the n = 2 model.
Graph make_complete(std::int64_t n) {
    Graph g;
    g.vertex_count = n;
    g.edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (std::int64_t u = 0; u < n; ++u)
        for (std::int64_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

}  // namespace

bool Graph::has_edge(std::int64_t u, std::int64_t v) const {
    if (u == v) return false;
    auto e = std::minmax(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::pair{e.first, e.second});
}

std::vector<std::int64_t> Graph::degrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::int64_t Graph::regular_degree() const {
    if (vertex_count == 0) return -1;
    auto deg = degrees();
    for (auto d : deg)
        if (d != deg[0]) return -1;
    return deg[0];
}

Graph complete_graph(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2, got " + std::to_string(n));
    return make_complete(n);
}

PortTarget Rotation::at(std::int64_t cloud, std::int64_t port) const {
    if (cloud < 0 || cloud >= cloud_count || port < 0 || port >= ports_per_cloud)
        throw std::out_of_range("Rotation::at: cloud/port out of range");
    return targets[static_cast<std::size_t>(cloud * ports_per_cloud + port)];
}

bool Rotation::is_involution() const {
    if (targets.size() != static_cast<std::size_t>(cloud_count * ports_per_cloud)) return false;
    for (std::int64_t c = 0; c < cloud_count; ++c) {
        for (std::int64_t p = 0; p < ports_per_cloud; ++p) {
            PortTarget t = targets[static_cast<std::size_t>(c * ports_per_cloud + p)];
            if (t.cloud < 0 || t.cloud >= cloud_count || t.port < 0 || t.port >= ports_per_cloud)
                return false;
            if (at(t.cloud, t.port) != PortTarget{c, p}) return false;
        }
    }
    return true;
}

Rotation canonical_rotation_complete(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("canonical_rotation_complete: n must be >= 2, got " + std::to_string(n));
    Rotation rot;
    rot.cloud_count = n;
    rot.ports_per_cloud = n - 1;
    rot.targets.resize(static_cast<std::size_t>(n * (n - 1)));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t p = 0; p < n - 1; ++p) {
            std::int64_t j = p < i ? p : p + 1;       // cloud whose label this port carries
            std::int64_t q = i < j ? i : i - 1;       // rank of i among cloud j's port labels
            rot.targets[static_cast<std::size_t>(i * (n - 1) + p)] = PortTarget{j, q};
        }
    }
    return rot;
}

Graph replacement_product(const Graph& outer, const Graph& cloud, const Rotation& rot) {
    const std::int64_t d1 = outer.regular_degree();
    if (d1 < 0) throw std::invalid_argument("replacement_product: outer graph must be regular");
    const std::int64_t d2 = cloud.regular_degree();
    if (d2 < 0) throw std::invalid_argument("replacement_product: cloud graph must be regular");
    if (cloud.vertex_count != d1)
        throw std::invalid_argument("replacement_product: cloud graph must have exactly d1 = " +
                                    std::to_string(d1) + " vertices, got " +
                                    std::to_string(cloud.vertex_count));
    if (rot.cloud_count != outer.vertex_count || rot.ports_per_cloud != d1)
        throw std::invalid_argument("replacement_product: rotation shape does not match the outer graph");
    if (!rot.is_involution())
        throw std::invalid_argument("replacement_product: rotation is not an involution");

    // Ports of every outer vertex must reach exactly its neighbour set.
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(outer.vertex_count));
    for (const auto& [u, v] : outer.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::int64_t c = 0; c < outer.vertex_count; ++c) {
        std::vector<std::int64_t> via_ports;
        via_ports.reserve(static_cast<std::size_t>(d1));
        for (std::int64_t p = 0; p < d1; ++p) via_ports.push_back(rot.at(c, p).cloud);
        std::sort(via_ports.begin(), via_ports.end());
        auto& neigh = adj[static_cast<std::size_t>(c)];
        std::sort(neigh.begin(), neigh.end());
        if (via_ports != neigh)
            throw std::invalid_argument("replacement_product: rotation targets of vertex " +
                                        std::to_string(c) + " do not match its neighbours");
    }

    Graph result;
    result.vertex_count = outer.vertex_count * d1;
    result.edges.reserve(static_cast<std::size_t>(outer.vertex_count) *
                         static_cast<std::size_t>(cloud.edges.size() + d1 / 2 + 1));
    for (std::int64_t c = 0; c < outer.vertex_count; ++c)
        for (const auto& [p, q] : cloud.edges)
            result.edges.emplace_back(c * d1 + p, c * d1 + q);
    for (std::int64_t c = 0; c < outer.vertex_count; ++c) {
        for (std::int64_t p = 0; p < d1; ++p) {
            PortTarget t = rot.at(c, p);
            std::int64_t a = c * d1 + p;
            std::int64_t b = t.cloud * d1 + t.port;
            if (a < b) result.edges.emplace_back(a, b);
        }
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

Graph covariance_selection_graph(std::int64_t n) {
    if (n < 2)
        throw std::invalid_argument("covariance_selection_graph: n must be >= 2, got " + std::to_string(n));
    Graph g = replacement_product(make_complete(n), make_complete(n - 1), canonical_rotation_complete(n));
    g.labels.reserve(static_cast<std::size_t>(g.vertex_count));
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t p = 0; p < n - 1; ++p) {
            std::int64_t j = p < i ? p : p + 1;
            g.labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    return g;
}

}  // namespace repdet
