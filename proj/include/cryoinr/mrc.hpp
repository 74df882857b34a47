#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cryoinr/io.hpp"

namespace cryoinr {

// MRC2014 container: 56 four-byte header words + 800 bytes of labels
// (1024 bytes total), then the voxel payload. "MAP " sits at byte 208,
// the machine stamp at 212. Data is x-fastest, then y, then z.
struct MrcHeader {
    int32_t nx = 0, ny = 0, nz = 0;
    int32_t mode = 2;                         // 0=int8, 1=int16, 2=float32
    std::array<float, 3> cell{0.f, 0.f, 0.f}; // angstroms
    std::array<float, 3> origin{0.f, 0.f, 0.f};
    float dmin = 0.f, dmax = 0.f, dmean = 0.f;
    float rms = 0.f;
    int32_t nsymbt = 0;

    uint64_t voxel_count() const {
        return static_cast<uint64_t>(nx) * static_cast<uint64_t>(ny) *
               static_cast<uint64_t>(nz);
    }
};

struct VoxelGrid {
    MrcHeader header;
    std::vector<float> data; // length nx*ny*nz, raster order x-fastest

    uint64_t index_of(int ix, int iy, int iz) const {
        return static_cast<uint64_t>(ix) +
               static_cast<uint64_t>(header.nx) *
                   (static_cast<uint64_t>(iy) +
                    static_cast<uint64_t>(header.ny) * static_cast<uint64_t>(iz));
    }
    float at(int ix, int iy, int iz) const { return data[index_of(ix, iy, iz)]; }
};

struct MrcReadOptions {
    bool tolerate_bad_magic = false; // downgrade missing "MAP " to a warning
};

// Decodes modes 0/1/2 (integers promoted to float), honors the machine
// stamp byte order, skips nsymbt extended-header bytes.
VoxelGrid read_mrc(ByteSpan bytes, const MrcReadOptions& opts = {});

// Always mode 2, little-endian, machine stamp 0x44 0x44 0x00 0x00,
// nsymbt 0; dmin/dmax/dmean/rms recomputed from the data.
Bytes write_mrc(const VoxelGrid& grid);

VoxelGrid read_mrc_file(const std::filesystem::path& path, const MrcReadOptions& opts = {});
void write_mrc_file(const std::filesystem::path& path, const VoxelGrid& grid);

} // namespace cryoinr
