#ifndef RECON_MESH_HPP
#define RECON_MESH_HPP

#include <string>
#include <utility>
#include <vector>

namespace recon {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

enum class MeshFormat { off, obj };

/// Discrete surface: a graph with optional 3D positions and optional faces.
/// Immutable after construction; adjacency lists are sorted ascending.
class Mesh {
public:
    Mesh() = default;

    /// Build from faces; edges are derived from face boundaries.
    /// Rejects degenerate faces and non-manifold edges (>2 incident faces).
    static Mesh fromFaces(std::vector<Vec3> positions,
                          std::vector<std::vector<int>> faces);

    /// Build a bare graph (no faces). Positions optional.
    static Mesh fromEdges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges,
                          std::vector<Vec3> positions = {});

    int vertexCount() const { return n_; }
    std::size_t edgeCount() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool hasFaces() const { return !faces_.empty(); }
    const std::vector<std::vector<int>>& faces() const { return faces_; }

    bool hasPositions() const { return has_pos_; }
    const Vec3& position(int v) const { return pos_[v]; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool connected() const;
    double edgeLength(int u, int v) const;

private:
    int n_ = 0;
    bool has_pos_ = false;
    std::vector<Vec3> pos_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> faces_;
    std::vector<std::vector<int>> adj_;

    void buildAdjacency();
};

/// Parse an OFF or OBJ file. Ignored OBJ directives are appended to
/// `warnings` when given. Vertex order is preserved from the file.
Mesh load_mesh(const std::string& path, MeshFormat format,
               std::vector<std::string>* warnings = nullptr);

/// Write OFF with positions at full precision ("%.17g").
void save_mesh(const Mesh& mesh, const std::string& path);

/// V - E + F of the sub-complex induced by a vertex subset: all faces whose
/// vertices lie in the subset, all edges with both endpoints in it, and the
/// subset vertices themselves. Requires faces.
int euler_characteristic(const Mesh& mesh, const std::vector<int>& subset);

} // namespace recon

#endif
