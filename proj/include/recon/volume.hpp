#ifndef RECON_VOLUME_HPP
#define RECON_VOLUME_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace recon {

enum class AdjacencyMode { six, twenty_six };

/// Voxelized solid on an nx*ny*nz grid, x-fastest cell indexing.
/// Boundary cells are occupied cells with an unoccupied or out-of-range
/// face-neighbor; the rest of the occupied cells are interior. The
/// adjacency mode only affects neighbor queries, not the classification.
class VolumeGrid {
public:
    VolumeGrid(int nx, int ny, int nz, std::vector<std::uint8_t> occupancy,
               AdjacencyMode mode);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    AdjacencyMode mode() const { return mode_; }

    int cellCount() const { return nx_ * ny_ * nz_; }
    int cellIndex(int x, int y, int z) const { return x + nx_ * (y + ny_ * z); }
    std::array<int, 3> coords(int cell) const;
    bool inBounds(int x, int y, int z) const {
        return x >= 0 && x < nx_ && y >= 0 && y < ny_ && z >= 0 && z < nz_;
    }
    bool occupied(int cell) const { return occ_[cell] != 0; }

    std::size_t occupiedCount() const {
        return boundary_.size() + interior_.size();
    }
    const std::vector<int>& boundaryCells() const { return boundary_; }
    const std::vector<int>& interiorCells() const { return interior_; }
    bool isBoundary(int cell) const { return kind_[cell] == 1; }
    bool isInterior(int cell) const { return kind_[cell] == 2; }

    /// Occupied neighbors of an occupied cell under the grid's mode,
    /// ascending cell index.
    std::vector<int> neighbors(int cell) const;

private:
    int nx_, ny_, nz_;
    AdjacencyMode mode_;
    std::vector<std::uint8_t> occ_;
    std::vector<std::uint8_t> kind_; // 0 empty, 1 boundary, 2 interior
    std::vector<int> boundary_, interior_;
};

/// Parse "VOX nx ny nz" followed by nx*ny*nz 0/1 tokens, x-fastest.
VolumeGrid load_volume(const std::string& path,
                       AdjacencyMode mode = AdjacencyMode::six);

} // namespace recon

#endif
