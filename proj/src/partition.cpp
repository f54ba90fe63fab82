#include "recon/partition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "recon/errors.hpp"

namespace recon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Edge = std::pair<int, int>;

Edge norm_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

void add_path(std::set<int>& net, std::set<Edge>& net_edges,
              const std::vector<int>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        net.insert(path[i]);
        if (i) net_edges.insert(norm_edge(path[i - 1], path[i]));
    }
}

// If the samples themselves already trace a simple cycle in the mesh
// (induced subgraph connected, every degree exactly 2), return it ordered
// from the lowest sample toward its lower neighbor.
std::vector<int> try_sample_cycle(const Mesh& mesh,
                                  const std::vector<int>& sample_ids) {
    if (sample_ids.size() < 3) return {};
    std::set<int> sset(sample_ids.begin(), sample_ids.end());
    std::map<int, std::vector<int>> nbr;
    for (int s : sample_ids) {
        for (int w : mesh.neighbors(s))
            if (sset.count(w)) nbr[s].push_back(w);
        if (nbr[s].size() != 2) return {};
    }
    std::vector<int> cycle{sample_ids.front()};
    int prev = -1, cur = sample_ids.front();
    while (true) {
        const auto& nb = nbr[cur];
        int next = (prev < 0) ? std::min(nb[0], nb[1])
                              : (nb[0] == prev ? nb[1] : nb[0]);
        if (next == cycle.front()) break;
        cycle.push_back(next);
        prev = cur;
        cur = next;
        if (cycle.size() > sample_ids.size()) return {}; // split rings
    }
    if (cycle.size() != sample_ids.size()) return {};
    return cycle;
}

// Nearest vertex (tree distance, ties to lowest id) among `targets`.
int nearest_target(const ShortestPathTree& tree,
                   const std::vector<int>& targets) {
    int best = -1;
    double bd = kInf;
    for (int t : targets)
        if (tree.dist[t] < bd) {
            bd = tree.dist[t];
            best = t;
        }
    return best;
}

CurveNetwork network_from_sample_cycle(const std::vector<int>& cycle) {
    CurveNetwork out;
    out.cycles.push_back(cycle);
    std::vector<int> seg(cycle);
    seg.push_back(cycle.front());
    out.segments.push_back(std::move(seg));
    out.vertices = cycle;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace

bool CurveNetwork::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::vector<char> CurveNetwork::mask(int vertex_count) const {
    std::vector<char> m(vertex_count, 0);
    for (int v : vertices) m[v] = 1;
    return m;
}

CurveNetwork link_cycle(const Mesh& mesh, const SampleSet& samples,
                        DistanceMode mode) {
    samples.validate(mesh);
    auto ids = samples.ids();
    if (ids.size() < 2)
        throw InputError("link_cycle needs at least 2 samples, got " +
                         std::to_string(ids.size()));
    if (auto cycle = try_sample_cycle(mesh, ids); !cycle.empty())
        return network_from_sample_cycle(cycle);

    int n = mesh.vertexCount();
    CurveNetwork out;
    std::set<int> net;
    std::set<Edge> net_edges;
    std::vector<char> visited(n, 0);

    int start = ids.front();
    int current = start;
    visited[start] = 1;
    net.insert(start);
    std::vector<int> chain_walk{start}; // full vertex sequence of the chain
    std::size_t remaining = ids.size() - 1;

    while (remaining > 0) {
        // Allowed: off-network vertices. Unvisited samples absorb the
        // search, so no linking path runs through one.
        std::vector<char> allowed(n, 1), absorbing(n, 0);
        for (int v : net) allowed[v] = 0;
        for (int s : ids)
            if (visited[s]) allowed[s] = 0;
        allowed[current] = 1;
        std::vector<int> targets;
        for (int s : ids)
            if (!visited[s]) {
                allowed[s] = 1;
                absorbing[s] = 1;
                targets.push_back(s);
            }
        auto tree =
            shortest_path_tree(mesh, current, mode, &allowed, &absorbing);
        int next = nearest_target(tree, targets);
        if (next < 0 || tree.dist[next] == kInf)
            throw PathologicalCurveError(
                "cannot link sample " + std::to_string(targets.front()) +
                ": every route from " + std::to_string(current) +
                " is blocked by samples or the existing curve");
        auto path = extract_path(tree, next);
        add_path(net, net_edges, path);
        out.segments.push_back(path);
        chain_walk.insert(chain_walk.end(), path.begin() + 1, path.end());
        visited[next] = 1;
        current = next;
        --remaining;
    }

    // Close the tour: a path back to the start disjoint from the network.
    {
        std::vector<char> allowed(n, 1);
        for (int v : net) allowed[v] = 0;
        allowed[current] = 1;
        allowed[start] = 1;
        std::vector<char> absorbing(n, 0);
        absorbing[start] = 1;
        auto tree =
            shortest_path_tree(mesh, current, mode, &allowed, &absorbing);
        if (tree.dist[start] < kInf) {
            auto path = extract_path(tree, start);
            bool degenerate = path.size() == 2 &&
                              net_edges.count(norm_edge(current, start)) > 0;
            if (!degenerate) {
                add_path(net, net_edges, path);
                out.segments.push_back(path);
                std::vector<int> cycle(chain_walk);
                cycle.insert(cycle.end(), path.begin() + 1, path.end() - 1);
                out.cycles.push_back(std::move(cycle));
                out.vertices.assign(net.begin(), net.end());
                return out;
            }
        }
    }

    // No disjoint closing path: attach the chain end back to the existing
    // curve by the shortest path off the network.
    {
        std::vector<char> allowed(n, 1), absorbing(n, 0);
        std::vector<int> targets;
        for (int v : net)
            if (v != current) {
                absorbing[v] = 1;
                targets.push_back(v);
            }
        auto tree =
            shortest_path_tree(mesh, current, mode, &allowed, &absorbing);
        int best = -1;
        double bd = kInf;
        for (int t : targets) {
            if (tree.dist[t] >= bd || tree.dist[t] == kInf) continue;
            if (tree.dist[t] <= 1.0) { // possibly the direct hop
                auto p = extract_path(tree, t);
                if (p.size() == 2 && net_edges.count(norm_edge(current, t)))
                    continue;
            }
            bd = tree.dist[t];
            best = t;
        }
        if (best >= 0) {
            auto path = extract_path(tree, best);
            add_path(net, net_edges, path);
            out.segments.push_back(path);
            // Cycle: chain from the attach point to the end, plus the way
            // back along the attachment.
            auto it = std::find(chain_walk.begin(), chain_walk.end(), best);
            if (it != chain_walk.end()) {
                std::vector<int> cycle(it, chain_walk.end());
                cycle.insert(cycle.end(), path.rbegin() + 1, path.rend() - 1);
                if (cycle.size() >= 3) out.cycles.push_back(std::move(cycle));
            }
        } else {
            out.warnings.push_back(
                "no closing path exists; curve left as an open chain");
        }
    }
    out.vertices.assign(net.begin(), net.end());
    return out;
}

CurveNetwork geodesic_partition(const Mesh& mesh, const SampleSet& samples,
                                DistanceMode mode) {
    samples.validate(mesh);
    auto ids = samples.ids();
    if (ids.size() < 2)
        throw InputError("geodesic_partition needs at least 2 samples, got " +
                         std::to_string(ids.size()));
    if (auto cycle = try_sample_cycle(mesh, ids); !cycle.empty())
        return network_from_sample_cycle(cycle);

    int n = mesh.vertexCount();
    CurveNetwork out;
    std::set<int> net;
    std::set<Edge> net_edges;
    std::vector<char> covered(n, 0);
    auto pd = pairwise_sample_distances(mesh, samples, mode);

    // Shortest a..b path avoiding all other samples plus `blocked`.
    auto route = [&](int a, int b,
                     const std::set<int>& blocked) -> std::vector<int> {
        std::vector<char> allowed(n, 1);
        for (int s : ids) allowed[s] = 0;
        for (int v : blocked) allowed[v] = 0;
        allowed[a] = 1;
        allowed[b] = 1;
        auto tree = shortest_path_tree(mesh, a, mode, &allowed);
        if (tree.dist[b] == kInf) return {};
        return extract_path(tree, b);
    };

    while (true) {
        std::vector<int> uncov;
        for (int s : ids)
            if (!covered[s]) uncov.push_back(s);
        if (uncov.empty()) break;

        if (uncov.size() == 1 && !net.empty()) {
            // Straggler: attach to the nearest network vertex.
            int s = uncov.front();
            std::vector<char> allowed(n, 1), absorbing(n, 0);
            for (int t : ids)
                if (t != s) allowed[t] = 0;
            std::vector<int> targets;
            for (int v : net) {
                allowed[v] = 1;
                absorbing[v] = 1;
                targets.push_back(v);
            }
            auto tree =
                shortest_path_tree(mesh, s, mode, &allowed, &absorbing);
            int w = nearest_target(tree, targets);
            if (w < 0 || tree.dist[w] == kInf)
                throw PathologicalCurveError("cannot attach sample " +
                                             std::to_string(s) +
                                             " to the curve network");
            auto path = extract_path(tree, w);
            add_path(net, net_edges, path);
            out.segments.push_back(path);
            covered[s] = 1;
            continue;
        }

        // Closest uncovered pair (ties fall to lowest ids via scan order).
        int a = -1, b = -1;
        double bd = kInf;
        for (std::size_t i = 0; i < uncov.size(); ++i)
            for (std::size_t j = i + 1; j < uncov.size(); ++j) {
                double d = pd.between(uncov[i], uncov[j]);
                if (d < bd) {
                    bd = d;
                    a = uncov[i];
                    b = uncov[j];
                }
            }
        if (!std::isfinite(bd))
            throw InputError("sample pairs are disconnected in the mesh");

        auto p1 = route(a, b, {});
        if (p1.empty())
            throw PathologicalCurveError(
                "cannot route a curve between samples " + std::to_string(a) +
                " and " + std::to_string(b) +
                ": every path crosses another sample");
        add_path(net, net_edges, p1);
        out.segments.push_back(p1);
        // Second, vertex-disjoint path closes a cycle through the pair.
        std::set<int> block(p1.begin() + 1, p1.end() - 1);
        auto p2 = route(a, b, block);
        if (!p2.empty() && !(p2.size() == 2 && p1.size() == 2)) {
            add_path(net, net_edges, p2);
            out.segments.push_back(p2);
            std::vector<int> cycle(p1);
            for (auto it = p2.rbegin() + 1; it + 1 != p2.rend(); ++it)
                cycle.push_back(*it);
            out.cycles.push_back(std::move(cycle));
        }
        covered[a] = covered[b] = 1;
    }

    // Join disconnected pieces so the partition lemma applies: all curve
    // vertices must form one connected set.
    while (true) {
        std::map<int, int> piece;
        int n_pieces = 0;
        for (int v : net)
            if (!piece.count(v)) {
                std::vector<int> stack{v};
                piece[v] = n_pieces;
                while (!stack.empty()) {
                    int c = stack.back();
                    stack.pop_back();
                    for (int w : mesh.neighbors(c))
                        if (net.count(w) && !piece.count(w)) {
                            piece[w] = n_pieces;
                            stack.push_back(w);
                        }
                }
                ++n_pieces;
            }
        if (n_pieces <= 1) break;

        std::vector<int> sources, targets;
        for (const auto& [v, p] : piece)
            (p == 0 ? sources : targets).push_back(v);
        double bd = kInf;
        std::vector<int> best_path;
        for (int src : sources) {
            std::vector<char> allowed(n, 1), absorbing(n, 0);
            for (int v : net)
                if (v != src) absorbing[v] = 1;
            auto tree =
                shortest_path_tree(mesh, src, mode, &allowed, &absorbing);
            int w = nearest_target(tree, targets);
            if (w >= 0 && tree.dist[w] < bd) {
                bd = tree.dist[w];
                best_path = extract_path(tree, w);
            }
        }
        if (best_path.empty())
            throw PathologicalCurveError("curve network pieces cannot be "
                                         "joined by any off-curve path");
        add_path(net, net_edges, best_path);
        out.segments.push_back(best_path);
    }

    out.vertices.assign(net.begin(), net.end());
    return out;
}

namespace {

// Ordered boundary loops of a patch sub-complex: edges bordering exactly
// one patch face, walked deterministically from the lowest vertex.
std::vector<std::vector<int>> boundary_loops(const Mesh& mesh,
                                             const std::vector<char>& in_patch) {
    std::map<Edge, int> face_count;
    for (const auto& f : mesh.faces()) {
        bool all = true;
        for (int v : f)
            if (!in_patch[v]) {
                all = false;
                break;
            }
        if (!all) continue;
        for (std::size_t i = 0; i < f.size(); ++i)
            ++face_count[norm_edge(f[i], f[(i + 1) % f.size()])];
    }
    std::map<int, std::vector<int>> bnd_adj;
    for (const auto& [e, c] : face_count)
        if (c == 1) {
            bnd_adj[e.first].push_back(e.second);
            bnd_adj[e.second].push_back(e.first);
        }
    for (auto& [v, nb] : bnd_adj) std::sort(nb.begin(), nb.end());

    std::set<Edge> used;
    std::vector<std::vector<int>> loops;
    for (const auto& [v0, nb0] : bnd_adj) {
        for (int first : nb0) {
            if (used.count(norm_edge(v0, first))) continue;
            std::vector<int> loop{v0};
            int prev = v0, cur = first;
            used.insert(norm_edge(v0, first));
            while (cur != v0) {
                loop.push_back(cur);
                int next = -1;
                for (int w : bnd_adj[cur]) {
                    if (w == prev) continue;
                    if (!used.count(norm_edge(cur, w))) {
                        next = w;
                        break;
                    }
                }
                if (next == -1) break; // open chain; keep what was walked
                used.insert(norm_edge(cur, next));
                prev = cur;
                cur = next;
            }
            loops.push_back(std::move(loop));
        }
    }
    return loops;
}

} // namespace

Partition extract_components(const Mesh& mesh, const CurveNetwork& network) {
    int n = mesh.vertexCount();
    for (int v : network.vertices)
        if (v < 0 || v >= n)
            throw InputError("network vertex out of range: " +
                             std::to_string(v));

    Partition part;
    part.network = network;
    auto net_mask = network.mask(n);

    std::vector<int> comp_of(n, -1);
    for (int seed = 0; seed < n; ++seed) {
        if (net_mask[seed] || comp_of[seed] >= 0) continue;
        int id = static_cast<int>(part.components.size());
        std::vector<int> comp, stack{seed};
        comp_of[seed] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : mesh.neighbors(v))
                if (!net_mask[w] && comp_of[w] < 0) {
                    comp_of[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        part.components.push_back(std::move(comp));
    }

    // Coverage is structural here; verify anyway.
    {
        std::size_t covered = network.vertices.size();
        for (const auto& c : part.components) covered += c.size();
        if (covered != static_cast<std::size_t>(n))
            throw TopologyError("partition does not cover the mesh");
    }

    bool check_chi = mesh.hasFaces();
    if (!check_chi)
        part.warnings.push_back(
            "mesh has no faces; simple-connectivity check skipped");

    for (std::size_t ci = 0; ci < part.components.size(); ++ci) {
        const auto& comp = part.components[ci];
        std::set<int> rim;
        for (int v : comp)
            for (int w : mesh.neighbors(v))
                if (net_mask[w]) rim.insert(w);

        if (check_chi) {
            std::vector<int> patch(comp);
            patch.insert(patch.end(), rim.begin(), rim.end());
            int chi = euler_characteristic(mesh, patch);
            if (chi != 1)
                throw TopologyError(
                    "component " + std::to_string(ci) + " (seed vertex " +
                    std::to_string(comp.front()) +
                    ") is not simply connected: patch Euler characteristic " +
                    std::to_string(chi) +
                    " (genus > 0 or disconnected curve network)");
            std::vector<char> in_patch(n, 0);
            for (int v : patch) in_patch[v] = 1;
            part.component_boundaries.push_back(boundary_loops(mesh, in_patch));
        } else {
            part.component_boundaries.push_back(
                {std::vector<int>(rim.begin(), rim.end())});
        }
    }
    return part;
}

} // namespace recon
