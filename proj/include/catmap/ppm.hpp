#pragma once

#include "catmap/raster.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

static_assert(sizeof(Rgb) == 3, "Rgb must be packed for raw raster I/O");

namespace detail {

// skips whitespace and '#' comments between PPM header tokens
inline std::string next_ppm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.peek()) != EOF && !std::isspace(c)) tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    return tok;
}

} // namespace detail

/// Reads a binary (P6) PPM. Only square images are accepted: the map is
/// defined on N x N grids and nothing here pads or crops.
inline RasterImage<Rgb> read_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_ppm: cannot open " + path.string());

    const std::string magic = detail::next_ppm_token(in);
    if (magic != "P6")
        throw std::runtime_error("read_ppm: " + path.string() + " is not a binary PPM (P6), got '" +
                                 magic + "'");
    const std::string w_tok = detail::next_ppm_token(in);
    const std::string h_tok = detail::next_ppm_token(in);
    const std::string max_tok = detail::next_ppm_token(in);
    if (w_tok.empty() || h_tok.empty() || max_tok.empty())
        throw std::runtime_error("read_ppm: truncated header in " + path.string());

    unsigned long long width = 0, height = 0, maxval = 0;
    try {
        width = std::stoull(w_tok);
        height = std::stoull(h_tok);
        maxval = std::stoull(max_tok);
    } catch (const std::exception&) {
        throw std::runtime_error("read_ppm: malformed header in " + path.string());
    }
    if (width == 0 || height == 0)
        throw std::runtime_error("read_ppm: zero dimension in " + path.string());
    if (width != height)
        throw std::runtime_error("read_ppm: image is " + std::to_string(width) + "x" +
                                 std::to_string(height) + ", but only square images can be mapped");
    if (maxval == 0 || maxval > 255)
        throw std::runtime_error("read_ppm: unsupported maxval " + std::to_string(maxval) +
                                 " in " + path.string() + " (only 8-bit samples)");

    // exactly one whitespace byte separates the header from the raster
    in.get();

    std::vector<Rgb> pixels(width * height);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size() * 3));
    if (static_cast<std::size_t>(in.gcount()) != pixels.size() * 3)
        throw std::runtime_error("read_ppm: truncated pixel data in " + path.string());
    return {static_cast<Residue>(width), std::move(pixels)};
}

inline void write_ppm(const std::filesystem::path& path, const RasterImage<Rgb>& img) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path.string() + " for writing");
    out << "P6\n" << img.side() << ' ' << img.side() << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels().data()),
              static_cast<std::streamsize>(img.pixels().size() * 3));
    if (!out) throw std::runtime_error("write_ppm: failed writing " + path.string());
}

} // namespace catmap
