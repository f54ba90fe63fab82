#ifndef RECON_GVF_HPP
#define RECON_GVF_HPP

#include <optional>

#include "recon/field.hpp"
#include "recon/metric.hpp"

namespace recon {

/// Samples snapped onto a uniform level chain.
struct QuantizedSamples {
    LevelSequence levels;
    std::map<int, int> indices;    // vertex -> 1-based level index
    std::map<int, double> residuals; // value - chosen level
};

/// Snap sample values to a uniform level chain. With no spacing given the
/// step is the pairwise Lipschitz constant max |f(x)-f(y)| / d(x,y), which
/// makes the result feasible on integer (hop) distance matrices. A user
/// spacing that breaks feasibility raises FeasibilityError naming the worst
/// pair. Ties between two levels snap to the lower one.
QuantizedSamples quantize(const SampleSet& samples,
                          const PairwiseDistances& distances,
                          std::optional<double> spacing = std::nullopt);

struct FeasibilityResult {
    bool feasible = true;
    int vertex_a = -1, vertex_b = -1; // worst pair when infeasible
    double violation = 0.0;           // |i-j| - d, maximal
};

/// Existence check for a gradually varied extension: every sample pair must
/// satisfy d(x,y) >= |i-j|.
FeasibilityResult gvf_feasible(const QuantizedSamples& quantized,
                               const PairwiseDistances& distances);

enum class ExtendRule { upper_envelope, lower_envelope, midpoint };

/// Gradually varied extension over the mesh (or the induced subgraph on
/// `subset`). The default is the discrete upper envelope
/// F(b) = min_j (index_j + d(b, x_j)) clamped into [1, n], the pointwise
/// largest valid extension; feasibility is verified on hop distances inside
/// the domain and violations raise FeasibilityError.
LevelField gvf_extend(const Mesh& mesh, const QuantizedSamples& quantized,
                      ExtendRule rule = ExtendRule::upper_envelope,
                      const std::vector<int>* subset = nullptr);

/// gvf_extend specialized to a simple closed cycle, using cycle-internal
/// distances (the shorter of the two arcs).
LevelField gvf_on_cycle(const std::vector<int>& cycle,
                        const QuantizedSamples& quantized,
                        ExtendRule rule = ExtendRule::upper_envelope);

/// Map level indices back to level values.
ScalarField realize_levels(const LevelField& field,
                           const LevelSequence& levels);

} // namespace recon

#endif
