#include "cryoinr/mrc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>

namespace cryoinr {

namespace {

constexpr size_t kHeaderSize = 1024;
constexpr size_t kMagicOffset = 208;  // word 53
constexpr size_t kStampOffset = 212;  // word 54
constexpr uint64_t kMaxVoxels = 1ull << 33;

uint16_t bswap16(uint16_t v) { return static_cast<uint16_t>((v << 8) | (v >> 8)); }
uint32_t bswap32(uint32_t v) {
    return (v << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
}

uint32_t load_u32(const uint8_t* p, bool big_endian) {
    uint32_t v;
    std::memcpy(&v, p, 4);
    if (big_endian) v = bswap32(v);
    return v;
}

int32_t load_i32(const uint8_t* p, bool big_endian) {
    return static_cast<int32_t>(load_u32(p, big_endian));
}

float load_f32(const uint8_t* p, bool big_endian) {
    uint32_t bits = load_u32(p, big_endian);
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
}

// word w is 1-based, per the format tables
const uint8_t* word(const uint8_t* base, int w) { return base + 4 * (w - 1); }

} // namespace

VoxelGrid read_mrc(ByteSpan bytes, const MrcReadOptions& opts) {
    if (bytes.size() < kHeaderSize)
        throw TruncatedFile("MRC stream shorter than the 1024-byte header");

    const uint8_t* h = bytes.data();

    if (std::memcmp(h + kMagicOffset, "MAP ", 4) != 0 && !opts.tolerate_bad_magic)
        throw BadMagic("\"MAP \" magic absent at offset 208 (pass tolerate_bad_magic to read anyway)");

    // Endianness comes from the machine stamp; 0x44 0x44 = little, 0x11 0x11 = big.
    const uint8_t* stamp = h + kStampOffset;
    const bool big_endian = (stamp[0] == 0x11);

    MrcHeader hdr;
    hdr.nx = load_i32(word(h, 1), big_endian);
    hdr.ny = load_i32(word(h, 2), big_endian);
    hdr.nz = load_i32(word(h, 3), big_endian);
    hdr.mode = load_i32(word(h, 4), big_endian);
    for (int i = 0; i < 3; ++i) hdr.cell[i] = load_f32(word(h, 11 + i), big_endian);
    hdr.dmin = load_f32(word(h, 20), big_endian);
    hdr.dmax = load_f32(word(h, 21), big_endian);
    hdr.dmean = load_f32(word(h, 22), big_endian);
    hdr.nsymbt = load_i32(word(h, 24), big_endian);
    for (int i = 0; i < 3; ++i) hdr.origin[i] = load_f32(word(h, 50 + i), big_endian);
    hdr.rms = load_f32(word(h, 55), big_endian);

    if (hdr.nx < 1 || hdr.ny < 1 || hdr.nz < 1)
        throw FormatError("non-positive grid dimensions in MRC header");
    const uint64_t n = hdr.voxel_count();
    if (n > kMaxVoxels) throw FormatError("implausible voxel count in MRC header");
    if (hdr.nsymbt < 0) throw FormatError("negative extended-header size");

    size_t elem_size;
    switch (hdr.mode) {
        case 0: elem_size = 1; break;
        case 1: elem_size = 2; break;
        case 2: elem_size = 4; break;
        default:
            throw UnsupportedMode("MRC mode " + std::to_string(hdr.mode) +
                                  " not supported (modes 0, 1, 2 only)");
    }

    const size_t data_offset = kHeaderSize + static_cast<size_t>(hdr.nsymbt);
    if (bytes.size() < data_offset + n * elem_size)
        throw TruncatedFile("MRC stream shorter than the header promises");

    VoxelGrid grid;
    grid.header = hdr;
    grid.header.mode = 2; // integer modes are promoted on read
    grid.header.nsymbt = 0;
    grid.data.resize(n);

    const uint8_t* d = bytes.data() + data_offset;
    switch (hdr.mode) {
        case 0:
            for (uint64_t i = 0; i < n; ++i)
                grid.data[i] = static_cast<float>(static_cast<int8_t>(d[i]));
            break;
        case 1:
            for (uint64_t i = 0; i < n; ++i) {
                uint16_t bits;
                std::memcpy(&bits, d + 2 * i, 2);
                if (big_endian) bits = bswap16(bits);
                grid.data[i] = static_cast<float>(static_cast<int16_t>(bits));
            }
            break;
        case 2:
            if (!big_endian) {
                std::memcpy(grid.data.data(), d, n * 4);
            } else {
                for (uint64_t i = 0; i < n; ++i) {
                    uint32_t bits;
                    std::memcpy(&bits, d + 4 * i, 4);
                    bits = bswap32(bits);
                    std::memcpy(&grid.data[i], &bits, 4);
                }
            }
            break;
    }
    return grid;
}

Bytes write_mrc(const VoxelGrid& grid) {
    const MrcHeader& h = grid.header;
    if (h.nx < 1 || h.ny < 1 || h.nz < 1)
        throw FormatError("non-positive grid dimensions");
    if (grid.data.size() != h.voxel_count())
        throw FormatError("data length does not match header dimensions");

    float dmin = std::numeric_limits<float>::infinity();
    float dmax = -std::numeric_limits<float>::infinity();
    double sum = 0.0, sumsq = 0.0;
    for (float v : grid.data) {
        dmin = std::min(dmin, v);
        dmax = std::max(dmax, v);
        sum += v;
        sumsq += static_cast<double>(v) * v;
    }
    const double n = static_cast<double>(grid.data.size());
    const float dmean = static_cast<float>(sum / n);
    const double var = std::max(0.0, sumsq / n - (sum / n) * (sum / n));
    const float rms = static_cast<float>(std::sqrt(var));

    ByteWriter w;
    w.i32(h.nx);
    w.i32(h.ny);
    w.i32(h.nz);
    w.i32(2);                                   // mode
    for (int i = 0; i < 3; ++i) w.i32(0);       // nxstart, nystart, nzstart
    w.i32(h.nx);                                // mx, my, mz
    w.i32(h.ny);
    w.i32(h.nz);
    for (int i = 0; i < 3; ++i) w.f32(h.cell[i]);
    for (int i = 0; i < 3; ++i) w.f32(90.f);    // cell angles
    w.i32(1);                                   // mapc
    w.i32(2);                                   // mapr
    w.i32(3);                                   // maps
    w.f32(dmin);
    w.f32(dmax);
    w.f32(dmean);
    w.i32(1);                                   // ispg: 3-D volume
    w.i32(0);                                   // nsymbt
    for (int i = 25; i <= 49; ++i) w.i32(0);    // extra space
    for (int i = 0; i < 3; ++i) w.f32(h.origin[i]);
    w.magic("MAP ");
    w.u8(0x44);                                 // machine stamp: little-endian
    w.u8(0x44);
    w.u8(0x00);
    w.u8(0x00);
    w.f32(rms);
    w.i32(0);                                   // nlabl
    for (int i = 0; i < 800; ++i) w.u8(0);      // labels

    if constexpr (std::endian::native == std::endian::little) {
        w.bytes(grid.data.data(), grid.data.size() * 4);
    } else {
        for (float v : grid.data) w.f32(v);
    }
    return w.take();
}

VoxelGrid read_mrc_file(const std::filesystem::path& path, const MrcReadOptions& opts) {
    return read_mrc(read_file_bytes(path), opts);
}

void write_mrc_file(const std::filesystem::path& path, const VoxelGrid& grid) {
    atomic_write_file(path, write_mrc(grid));
}

} // namespace cryoinr
