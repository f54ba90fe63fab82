#include "recon/volume.hpp"

#include <fstream>
#include <sstream>

#include "recon/errors.hpp"

namespace recon {

VolumeGrid::VolumeGrid(int nx, int ny, int nz,
                       std::vector<std::uint8_t> occupancy, AdjacencyMode mode)
    : nx_(nx), ny_(ny), nz_(nz), mode_(mode), occ_(std::move(occupancy)) {
    if (nx_ <= 0 || ny_ <= 0 || nz_ <= 0)
        throw InputError("grid dimensions must be positive");
    if (occ_.size() != static_cast<std::size_t>(cellCount()))
        throw InputError("occupancy size does not match grid dimensions");

    kind_.assign(occ_.size(), 0);
    static constexpr int face_dirs[6][3] = {{-1, 0, 0}, {1, 0, 0}, {0, -1, 0},
                                            {0, 1, 0},  {0, 0, -1}, {0, 0, 1}};
    int occupied = 0;
    for (int z = 0; z < nz_; ++z)
        for (int y = 0; y < ny_; ++y)
            for (int x = 0; x < nx_; ++x) {
                int c = cellIndex(x, y, z);
                if (!occ_[c]) continue;
                ++occupied;
                bool boundary = false;
                for (const auto& d : face_dirs) {
                    int ax = x + d[0], ay = y + d[1], az = z + d[2];
                    if (!inBounds(ax, ay, az) ||
                        !occ_[cellIndex(ax, ay, az)]) {
                        boundary = true;
                        break;
                    }
                }
                kind_[c] = boundary ? 1 : 2;
            }
    if (occupied == 0) throw InputError("volume has zero occupied cells");
    for (int c = 0; c < cellCount(); ++c) {
        if (kind_[c] == 1) boundary_.push_back(c);
        if (kind_[c] == 2) interior_.push_back(c);
    }
}

std::array<int, 3> VolumeGrid::coords(int cell) const {
    int x = cell % nx_;
    int y = (cell / nx_) % ny_;
    int z = cell / (nx_ * ny_);
    return {x, y, z};
}

std::vector<int> VolumeGrid::neighbors(int cell) const {
    auto [x, y, z] = coords(cell);
    std::vector<int> out;
    if (mode_ == AdjacencyMode::six) {
        static constexpr int dirs[6][3] = {{0, 0, -1}, {0, -1, 0}, {-1, 0, 0},
                                           {1, 0, 0},  {0, 1, 0},  {0, 0, 1}};
        for (const auto& d : dirs) {
            int ax = x + d[0], ay = y + d[1], az = z + d[2];
            if (inBounds(ax, ay, az) && occ_[cellIndex(ax, ay, az)])
                out.push_back(cellIndex(ax, ay, az));
        }
    } else {
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0 && dz == 0) continue;
                    int ax = x + dx, ay = y + dy, az = z + dz;
                    if (inBounds(ax, ay, az) && occ_[cellIndex(ax, ay, az)])
                        out.push_back(cellIndex(ax, ay, az));
                }
    }
    return out; // loops emit ascending cell indices
}

VolumeGrid load_volume(const std::string& path, AdjacencyMode mode) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open volume file: " + path);
    std::string magic;
    int nx = 0, ny = 0, nz = 0;
    if (!(in >> magic) || magic != "VOX" || !(in >> nx >> ny >> nz))
        throw ParseError(path + ": expected header 'VOX nx ny nz'");
    if (nx <= 0 || ny <= 0 || nz <= 0)
        throw ParseError(path + ": grid dimensions must be positive");
    std::vector<std::uint8_t> occ;
    occ.reserve(static_cast<std::size_t>(nx) * ny * nz);
    std::string tok;
    while (in >> tok) {
        if (tok == "0")
            occ.push_back(0);
        else if (tok == "1")
            occ.push_back(1);
        else
            throw ParseError(path + ": occupancy token must be 0 or 1, got '" +
                             tok + "'");
    }
    if (occ.size() != static_cast<std::size_t>(nx) * ny * nz)
        throw ParseError(path + ": payload has " + std::to_string(occ.size()) +
                         " tokens, expected " +
                         std::to_string(static_cast<std::size_t>(nx) * ny * nz));
    try {
        return VolumeGrid(nx, ny, nz, std::move(occ), mode);
    } catch (const InputError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace recon
