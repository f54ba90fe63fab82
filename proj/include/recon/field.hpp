#ifndef RECON_FIELD_HPP
#define RECON_FIELD_HPP

#include <map>
#include <string>
#include <vector>

namespace recon {

class Mesh;

/// Guiding points: vertex index -> sample value.
struct SampleSet {
    std::map<int, double> entries;

    std::size_t size() const { return entries.size(); }
    std::vector<int> ids() const;
    /// Checks keys against the mesh and values for finiteness.
    void validate(const Mesh& mesh) const;
};

/// Ordered level values A_1 < A_2 < ... < A_n plus the uniform step used
/// when the sequence was auto-generated.
struct LevelSequence {
    std::vector<double> levels;
    double spacing = 1.0;

    int count() const { return static_cast<int>(levels.size()); }
    double value(int index_1based) const; // bounds-checked
    void validate() const;                // strictly increasing, n >= 1
};

/// Assignment of 1-based level indices to vertices.
struct LevelField {
    std::map<int, int> indices;
};

/// Reconstructed per-vertex (or per-cell) real values.
struct ScalarField {
    enum class Domain { surface_vertices, curve_vertices, volume_cells };
    Domain domain = Domain::surface_vertices;
    std::map<int, double> values;

    bool has(int id) const { return values.count(id) != 0; }
    double at(int id) const;
    std::size_t size() const { return values.size(); }
};

/// Lines "vertex_index,value"; '#' comments and blank lines allowed.
SampleSet load_samples_csv(const std::string& path,
                           const Mesh* validate_against = nullptr);

/// Same grammar as the samples CSV, used for boundary data and round-trips.
ScalarField load_field_csv(const std::string& path,
                           ScalarField::Domain domain =
                               ScalarField::Domain::surface_vertices);

} // namespace recon

#endif
