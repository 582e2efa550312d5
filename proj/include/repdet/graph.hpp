#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace repdet {

/// Simple undirected graph. Edges are stored once as (u, v) with u < v,
/// sorted lexicographically; vertex ids are 0-based.
struct Graph {
    std::int64_t vertex_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<std::string> labels;  // empty, or one tag per vertex

    bool has_edge(std::int64_t u, std::int64_t v) const;
    std::vector<std::int64_t> degrees() const;
    /// Common vertex degree, or -1 if the graph is not regular.
    std::int64_t regular_degree() const;
};

/// Complete graph on n vertices (n >= 2).
Graph complete_graph(std::int64_t n);

struct PortTarget {
    std::int64_t cloud = 0;
    std::int64_t port = 0;
    friend bool operator==(const PortTarget&, const PortTarget&) = default;
};

/// Port matching used by the replacement product: every vertex of the outer
/// graph owns `ports_per_cloud` ports, and `at(cloud, port)` names the port it
/// is wired to. A valid rotation is an involution whose targets follow the
/// outer graph's edges.
struct Rotation {
    std::int64_t cloud_count = 0;
    std::int64_t ports_per_cloud = 0;
    std::vector<PortTarget> targets;  // row-major: cloud * ports_per_cloud + port

    PortTarget at(std::int64_t cloud, std::int64_t port) const;
    bool is_involution() const;
};

/// The rotation for the complete graph on n vertices where cloud i's port
/// labelled j is wired to cloud j's port labelled i (labels 1-based, ports
/// stored 0-based in increasing label order).
Rotation canonical_rotation_complete(std::int64_t n);

/// Replacement product: every vertex of `outer` (d1-regular) becomes a copy of
/// `cloud` (d2-regular, on d1 vertices); intra-copy edges follow `cloud`,
/// inter-copy edges follow `rot`. The result is (d2+1)-regular on
/// d1 * |V(outer)| vertices.
Graph replacement_product(const Graph& outer, const Graph& cloud, const Rotation& rot);

/// Interaction graph of the n-cloud model: vertices are ordered pairs (i, j),
/// i != j, with edges (i,j)-(i,k) inside each cloud and (i,j)-(j,i) across
/// clouds. Equals the replacement product of the complete graphs on n and n-1
/// vertices under the canonical rotation.
Graph covariance_selection_graph(std::int64_t n);

}  // namespace repdet
