#ifndef RECON_METRIC_HPP
#define RECON_METRIC_HPP

#include <set>
#include <utility>
#include <vector>

#include "recon/field.hpp"
#include "recon/mesh.hpp"

namespace recon {

/// hop: every edge counts 1 (graph distance). euclidean_edge_weight: edges
/// weighted by 3D length; requires positions and positive lengths.
enum class DistanceMode { hop, euclidean_edge_weight };

/// Single-source shortest-path tree. dist is +inf for unreached vertices;
/// parent[v] is the lowest-index predecessor on a shortest path (-1 at the
/// source and at unreached vertices).
struct ShortestPathTree {
    int source = -1;
    std::vector<double> dist;
    std::vector<int> parent;
};

/// Dijkstra restricted to `allowed` vertices (null = all). Vertices in
/// `absorbing` can terminate paths but are never expanded, so no returned
/// path runs through them. `blocked_edges` (normalized lo,hi pairs) are
/// never traversed. The source must be allowed and is expanded even if
/// marked absorbing.
ShortestPathTree shortest_path_tree(
    const Mesh& mesh, int source, DistanceMode mode,
    const std::vector<char>* allowed = nullptr,
    const std::vector<char>* absorbing = nullptr,
    const std::set<std::pair<int, int>>* blocked_edges = nullptr);

/// Walk parents back from v; returns the source..v sequence.
std::vector<int> extract_path(const ShortestPathTree& tree, int v);

std::vector<double> shortest_distances(const Mesh& mesh, int source,
                                       DistanceMode mode);

/// Symmetric distance matrix over the sample vertices, ascending id order.
struct PairwiseDistances {
    std::vector<int> ids;
    std::vector<std::vector<double>> d;

    int indexOf(int id) const;
    double between(int id_a, int id_b) const;
};

PairwiseDistances pairwise_sample_distances(const Mesh& mesh,
                                            const SampleSet& samples,
                                            DistanceMode mode);

/// Deterministic shortest path u..v (lowest-index tie-break). Throws when v
/// is unreachable from u.
std::vector<int> shortest_path(const Mesh& mesh, int u, int v,
                               DistanceMode mode);

} // namespace recon

#endif
