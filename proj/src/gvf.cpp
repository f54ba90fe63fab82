#include "recon/gvf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recon/errors.hpp"

namespace recon {

namespace {

// Nearest integer with exact halves rounding down.
int round_half_down(double t) {
    return static_cast<int>(std::ceil(t - 0.5));
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Envelope over a domain given per-sample distance rows. sample_pos[a] is
// the position of sample a inside `domain`. Checks the existence condition
// on the supplied distances first, then evaluates the requested envelope.
LevelField envelope_extend(const std::vector<int>& domain,
                           const std::vector<std::vector<double>>& sample_dist,
                           const std::vector<int>& sample_ids,
                           const std::vector<int>& sample_idx,
                           const std::vector<std::size_t>& sample_pos,
                           int n_levels, ExtendRule rule,
                           const char* context) {
    for (std::size_t a = 0; a < sample_ids.size(); ++a)
        for (std::size_t b = a + 1; b < sample_ids.size(); ++b) {
            double d = sample_dist[a][sample_pos[b]];
            double gap = std::abs(sample_idx[a] - sample_idx[b]);
            if (!(d >= gap))
                throw FeasibilityError(
                    std::string("no gradually varied extension ") + context +
                    ": samples " + pair_str(sample_ids[a], sample_ids[b]) +
                    " have index gap " +
                    std::to_string(static_cast<int>(gap)) +
                    " but distance " + std::to_string(d));
        }

    LevelField out;
    for (std::size_t p = 0; p < domain.size(); ++p) {
        double up = std::numeric_limits<double>::infinity();
        double lo = -std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < sample_ids.size(); ++a) {
            double d = sample_dist[a][p];
            if (!std::isfinite(d))
                throw InputError("extension domain is not connected: vertex " +
                                 std::to_string(domain[p]) +
                                 " is unreachable from sample " +
                                 std::to_string(sample_ids[a]));
            up = std::min(up, sample_idx[a] + d);
            lo = std::max(lo, sample_idx[a] - d);
        }
        int hi_i = std::clamp(static_cast<int>(std::lround(up)), 1, n_levels);
        int lo_i = std::clamp(static_cast<int>(std::lround(lo)), 1, n_levels);
        int val = hi_i;
        if (rule == ExtendRule::lower_envelope) val = lo_i;
        if (rule == ExtendRule::midpoint) val = (hi_i + lo_i) / 2;
        out.indices[domain[p]] = val;
    }
    return out;
}

} // namespace

QuantizedSamples quantize(const SampleSet& samples,
                          const PairwiseDistances& distances,
                          std::optional<double> spacing) {
    if (samples.entries.empty()) throw InputError("no samples to quantize");
    if (spacing && !(*spacing > 0.0))
        throw InputError("spacing must be positive");

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& [v, f] : samples.entries) {
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }

    double step;
    if (spacing) {
        step = *spacing;
    } else {
        // Pairwise Lipschitz constant; 1 when it degenerates.
        step = 0.0;
        const auto& ids = distances.ids;
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                double df = std::abs(samples.entries.at(ids[i]) -
                                     samples.entries.at(ids[j]));
                double d = distances.d[i][j];
                if (!std::isfinite(d))
                    throw InputError("samples " + pair_str(ids[i], ids[j]) +
                                     " are disconnected");
                if (d == 0.0) {
                    if (df > 0.0)
                        throw FeasibilityError(
                            "samples " + pair_str(ids[i], ids[j]) +
                            " at distance 0 carry different values");
                    continue;
                }
                step = std::max(step, df / d);
            }
        if (step == 0.0) step = 1.0;
    }

    QuantizedSamples q;
    q.levels.spacing = step;
    int steps = (hi > lo) ? static_cast<int>(std::ceil((hi - lo) / step - 1e-9))
                          : 0;
    q.levels.levels.resize(steps + 1);
    for (int k = 0; k <= steps; ++k) q.levels.levels[k] = lo + k * step;
    q.levels.validate();

    for (const auto& [v, f] : samples.entries) {
        int idx0 = std::clamp(round_half_down((f - lo) / step), 0, steps);
        q.indices[v] = idx0 + 1;
        q.residuals[v] = f - q.levels.levels[idx0];
    }

    auto feas = gvf_feasible(q, distances);
    if (!feas.feasible) {
        if (spacing)
            throw FeasibilityError(
                "spacing " + std::to_string(step) +
                " violates the gradual-variation condition: samples " +
                pair_str(feas.vertex_a, feas.vertex_b) +
                " need |i-j| <= d but exceed it by " +
                std::to_string(feas.violation));
        // Auto spacing is provably feasible on integer distance matrices;
        // fractional (euclidean) distances can defeat it, which is surfaced
        // rather than masked.
        throw FeasibilityError(
            "auto spacing is infeasible on non-integer distances for pair " +
            pair_str(feas.vertex_a, feas.vertex_b) +
            "; pass an explicit coarser spacing or use hop distances");
    }
    return q;
}

FeasibilityResult gvf_feasible(const QuantizedSamples& quantized,
                               const PairwiseDistances& distances) {
    FeasibilityResult r;
    const auto& ids = distances.ids;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        auto ii = quantized.indices.find(ids[i]);
        if (ii == quantized.indices.end()) continue;
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            auto ij = quantized.indices.find(ids[j]);
            if (ij == quantized.indices.end()) continue;
            double viol =
                std::abs(ii->second - ij->second) - distances.d[i][j];
            if (viol > r.violation) {
                r.violation = viol;
                r.vertex_a = ids[i];
                r.vertex_b = ids[j];
            }
        }
    }
    r.feasible = !(r.violation > 0.0);
    if (r.feasible) {
        r.vertex_a = r.vertex_b = -1;
        r.violation = 0.0;
    }
    return r;
}

LevelField gvf_extend(const Mesh& mesh, const QuantizedSamples& quantized,
                      ExtendRule rule, const std::vector<int>* subset) {
    if (quantized.indices.empty()) throw InputError("no quantized samples");

    std::vector<int> domain;
    std::vector<char> allowed;
    if (subset) {
        allowed.assign(mesh.vertexCount(), 0);
        for (int v : *subset) {
            if (v < 0 || v >= mesh.vertexCount())
                throw InputError("subset vertex out of range");
            allowed[v] = 1;
        }
        for (int v = 0; v < mesh.vertexCount(); ++v)
            if (allowed[v]) domain.push_back(v);
    } else {
        domain.resize(mesh.vertexCount());
        for (int v = 0; v < mesh.vertexCount(); ++v) domain[v] = v;
    }

    std::vector<std::size_t> pos(mesh.vertexCount(), 0);
    for (std::size_t p = 0; p < domain.size(); ++p) pos[domain[p]] = p;

    std::vector<int> sample_ids, sample_idx;
    std::vector<std::size_t> sample_pos;
    for (const auto& [v, idx] : quantized.indices) {
        if (subset && !allowed[v])
            throw InputError("sample vertex " + std::to_string(v) +
                             " is outside the extension domain");
        sample_ids.push_back(v);
        sample_idx.push_back(idx);
        sample_pos.push_back(pos[v]);
    }

    // Hop distances from every sample across the domain; the gradual
    // variation condition is a statement about the graph metric.
    std::vector<std::vector<double>> sd;
    sd.reserve(sample_ids.size());
    for (int s : sample_ids) {
        auto tree = shortest_path_tree(mesh, s, DistanceMode::hop,
                                       subset ? &allowed : nullptr);
        std::vector<double> row(domain.size());
        for (std::size_t p = 0; p < domain.size(); ++p)
            row[p] = tree.dist[domain[p]];
        sd.push_back(std::move(row));
    }

    return envelope_extend(domain, sd, sample_ids, sample_idx, sample_pos,
                           quantized.levels.count(), rule, "on the graph");
}

LevelField gvf_on_cycle(const std::vector<int>& cycle,
                        const QuantizedSamples& quantized, ExtendRule rule) {
    std::size_t L = cycle.size();
    if (L < 3) throw InputError("cycle must have at least 3 vertices");
    {
        std::vector<int> sorted(cycle);
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("cycle is not simple (repeated vertex)");
    }

    std::vector<int> sample_ids, sample_idx;
    std::vector<std::size_t> sample_pos;
    for (const auto& [v, idx] : quantized.indices) {
        auto it = std::find(cycle.begin(), cycle.end(), v);
        if (it == cycle.end())
            throw InputError("sample vertex " + std::to_string(v) +
                             " does not lie on the cycle");
        sample_ids.push_back(v);
        sample_idx.push_back(idx);
        sample_pos.push_back(static_cast<std::size_t>(it - cycle.begin()));
    }
    if (sample_ids.empty()) throw InputError("no samples on the cycle");

    auto arc = [L](std::size_t a, std::size_t b) {
        std::size_t gap = a > b ? a - b : b - a;
        return static_cast<double>(std::min(gap, L - gap));
    };
    std::vector<std::vector<double>> sd(sample_ids.size(),
                                        std::vector<double>(L));
    for (std::size_t a = 0; a < sample_ids.size(); ++a)
        for (std::size_t p = 0; p < L; ++p) sd[a][p] = arc(sample_pos[a], p);

    return envelope_extend(cycle, sd, sample_ids, sample_idx, sample_pos,
                           quantized.levels.count(), rule, "on the cycle");
}

ScalarField realize_levels(const LevelField& field,
                           const LevelSequence& levels) {
    levels.validate();
    ScalarField out;
    out.domain = ScalarField::Domain::curve_vertices;
    for (const auto& [v, idx] : field.indices)
        out.values[v] = levels.value(idx);
    return out;
}

} // namespace recon
