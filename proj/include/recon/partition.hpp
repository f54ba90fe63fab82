#ifndef RECON_PARTITION_HPP
#define RECON_PARTITION_HPP

#include <string>
#include <vector>

#include "recon/field.hpp"
#include "recon/metric.hpp"

namespace recon {

/// Sample-through boundary curves. Every sample vertex lies on the network,
/// segments walk mesh edges, and the network is connected as an induced
/// subgraph.
struct CurveNetwork {
    std::vector<int> vertices;              // sorted unique
    std::vector<std::vector<int>> segments; // construction paths
    std::vector<std::vector<int>> cycles;   // simple closed sequences
    std::vector<std::string> warnings;

    bool contains(int v) const;
    std::vector<char> mask(int vertex_count) const;
};

/// Greedy tour: chain samples by nearest-first shortest paths, then close
/// the chain back to the start; when no disjoint closing path exists the
/// chain end is attached to the existing network by a shortest path.
CurveNetwork link_cycle(const Mesh& mesh, const SampleSet& samples,
                        DistanceMode mode = DistanceMode::hop);

/// Pairwise variant: repeatedly take the closest uncovered sample pair and
/// grow a cycle through it (shortest path plus a vertex-disjoint return
/// path where one exists), then join the resulting pieces.
CurveNetwork geodesic_partition(const Mesh& mesh, const SampleSet& samples,
                                DistanceMode mode = DistanceMode::hop);

struct Partition {
    CurveNetwork network;
    std::vector<std::vector<int>> components; // interior vertices, sorted
    // Ordered boundary loop(s) of each component's closed patch.
    std::vector<std::vector<std::vector<int>>> component_boundaries;
    std::vector<std::string> warnings;
};

/// Flood-fill the complement of the network and validate that every closed
/// patch (component plus its rim) is a disk: Euler characteristic 1.
/// Throws TopologyError naming the first failing component.
Partition extract_components(const Mesh& mesh, const CurveNetwork& network);

} // namespace recon

#endif
