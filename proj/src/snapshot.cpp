#include "fks/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "fks/errors.hpp"

namespace fks {

namespace {

constexpr char kMagic[4] = {'F', 'K', 'S', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i)
        b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, sizeof v);
    return v;
}

} // namespace

void write_snapshot(const std::string& path, const SpectralField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open snapshot file for writing: " + path);
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(f.grid.dim));
    put_u32(out, static_cast<std::uint32_t>(f.grid.points));
    put_f64(out, f.grid.period);
    for (const cplx& c : f.coef) {
        put_f64(out, c.real());
        put_f64(out, c.imag());
    }
    if (!out)
        throw ConfigError("snapshot write failed: " + path);
}

SpectralField read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open snapshot file: " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw ConfigError("not a field snapshot: " + path);
    const std::uint32_t version = get_u32(in);
    if (version != kVersion)
        throw ConfigError("unsupported snapshot version " + std::to_string(version));
    const auto dim = static_cast<int>(get_u32(in));
    const auto points = static_cast<int>(get_u32(in));
    const double period = get_f64(in);
    SpectralField f(make_grid(dim, points, period));
    for (cplx& c : f.coef) {
        const double re = get_f64(in);
        const double im = get_f64(in);
        c = cplx{re, im};
    }
    if (!in)
        throw ConfigError("snapshot truncated: " + path);
    return f;
}

} // namespace fks
