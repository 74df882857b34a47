#pragma once

#include <cstdint>
#include <vector>

#include "cryoinr/io.hpp"

namespace cryoinr {

// One bit per voxel, raster order x-fastest, LSB-first within each byte.
struct OccupancyMap {
    int32_t nx = 0, ny = 0, nz = 0;
    std::vector<uint8_t> bits;
    uint64_t popcount = 0;

    static OccupancyMap zeros(int32_t nx, int32_t ny, int32_t nz) {
        OccupancyMap m;
        m.nx = nx;
        m.ny = ny;
        m.nz = nz;
        m.bits.assign((m.voxel_count() + 7) / 8, 0);
        return m;
    }

    uint64_t voxel_count() const {
        return static_cast<uint64_t>(nx) * static_cast<uint64_t>(ny) *
               static_cast<uint64_t>(nz);
    }
    bool test(uint64_t i) const { return (bits[i >> 3] >> (i & 7)) & 1u; }
    void set(uint64_t i) {
        uint8_t& b = bits[i >> 3];
        const uint8_t mask = static_cast<uint8_t>(1u << (i & 7));
        popcount += !(b & mask);
        b |= mask;
    }
};

// Blob layout: nx, ny, nz as u32 LE, then a raw DEFLATE stream of the
// packed bit bytes. Lossless by contract.
Bytes compress_occupancy(const OccupancyMap& occ);
OccupancyMap decompress_occupancy(ByteSpan blob);

} // namespace cryoinr
