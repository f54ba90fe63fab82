#include "recon/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double edge_weight(const Mesh& mesh, int u, int v, DistanceMode mode) {
    if (mode == DistanceMode::hop) return 1.0;
    double w = mesh.edgeLength(u, v);
    if (!(w > 0.0))
        throw InputError("euclidean mode requires positive edge lengths; "
                         "edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has length 0");
    return w;
}

} // namespace

ShortestPathTree shortest_path_tree(const Mesh& mesh, int source,
                                    DistanceMode mode,
                                    const std::vector<char>* allowed,
                                    const std::vector<char>* absorbing) {
    int n = mesh.vertexCount();
    if (source < 0 || source >= n)
        throw InputError("source vertex out of range");
    if (allowed && !(*allowed)[source])
        throw InputError("source vertex is not in the allowed set");
    if (mode == DistanceMode::euclidean_edge_weight && !mesh.hasPositions())
        throw UnsupportedError("euclidean distance mode requires positions");

    ShortestPathTree t;
    t.source = source;
    t.dist.assign(n, kInf);
    t.parent.assign(n, -1);
    t.dist[source] = 0.0;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({0.0, source});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        if (absorbing && (*absorbing)[v] && v != source) continue;
        for (int w : mesh.neighbors(v)) {
            if (allowed && !(*allowed)[w]) continue;
            double nd = d + edge_weight(mesh, v, w, mode);
            if (nd < t.dist[w]) {
                t.dist[w] = nd;
                pq.push({nd, w});
            }
        }
    }

    // Lowest-index predecessor among equal-cost options, fixed after the
    // distances so the choice is independent of queue order.
    for (int v = 0; v < n; ++v) {
        if (v == source || t.dist[v] == kInf) continue;
        double eps = 1e-12 * (1.0 + t.dist[v]);
        for (int u : mesh.neighbors(v)) {
            if (allowed && !(*allowed)[u]) continue;
            if (t.dist[u] == kInf || t.dist[u] >= t.dist[v]) continue;
            if (absorbing && (*absorbing)[u] && u != source) continue;
            if (std::abs(t.dist[u] + edge_weight(mesh, u, v, mode) -
                         t.dist[v]) <= eps) {
                t.parent[v] = u;
                break; // neighbors ascend, first hit is lowest
            }
        }
    }
    return t;
}

std::vector<int> extract_path(const ShortestPathTree& tree, int v) {
    std::vector<int> rev;
    int cur = v;
    while (cur != tree.source) {
        rev.push_back(cur);
        cur = tree.parent[cur];
        if (cur < 0) throw InputError("no path recorded to vertex " +
                                      std::to_string(v));
    }
    rev.push_back(tree.source);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

std::vector<double> shortest_distances(const Mesh& mesh, int source,
                                       DistanceMode mode) {
    return shortest_path_tree(mesh, source, mode).dist;
}

int PairwiseDistances::indexOf(int id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id)
        throw InputError("vertex " + std::to_string(id) +
                         " is not a sample vertex");
    return static_cast<int>(it - ids.begin());
}

double PairwiseDistances::between(int id_a, int id_b) const {
    return d[indexOf(id_a)][indexOf(id_b)];
}

PairwiseDistances pairwise_sample_distances(const Mesh& mesh,
                                            const SampleSet& samples,
                                            DistanceMode mode) {
    PairwiseDistances out;
    out.ids = samples.ids(); // ascending (map order)
    std::size_t k = out.ids.size();
    out.d.assign(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        auto dist = shortest_distances(mesh, out.ids[i], mode);
        for (std::size_t j = i + 1; j < k; ++j) {
            double v = dist[out.ids[j]];
            out.d[i][j] = v;
            out.d[j][i] = v;
        }
    }
    return out;
}

std::vector<int> shortest_path(const Mesh& mesh, int u, int v,
                               DistanceMode mode) {
    if (v < 0 || v >= mesh.vertexCount())
        throw InputError("target vertex out of range");
    auto tree = shortest_path_tree(mesh, u, mode);
    if (tree.dist[v] == kInf)
        throw InputError("no path from " + std::to_string(u) + " to " +
                         std::to_string(v));
    return extract_path(tree, v);
}

} // namespace recon
