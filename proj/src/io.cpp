#include "cryoinr/io.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <random>

namespace cryoinr {

uint32_t crc32_of(ByteSpan data) {
    uLong c = ::crc32(0L, Z_NULL, 0);
    // crc32 takes uInt lengths; feed in slices so >4GB inputs stay correct
    size_t off = 0;
    while (off < data.size()) {
        const size_t n = std::min<size_t>(data.size() - off, 1u << 30);
        c = ::crc32(c, data.data() + off, static_cast<uInt>(n));
        off += n;
    }
    return static_cast<uint32_t>(c);
}

Bytes read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    in.seekg(0, std::ios::end);
    const std::streamoff size = in.tellg();
    in.seekg(0, std::ios::beg);
    Bytes data(static_cast<size_t>(size));
    if (size > 0) in.read(reinterpret_cast<char*>(data.data()), size);
    if (!in) throw IoError("short read from " + path.string());
    return data;
}

void atomic_write_file(const std::filesystem::path& path, ByteSpan data) {
    namespace fs = std::filesystem;
    fs::path dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::random_device rd;
    fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot create " + tmp.string());
        out.write(reinterpret_cast<const char*>(data.data()),
                  static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename into " + path.string());
    }
}

} // namespace cryoinr
