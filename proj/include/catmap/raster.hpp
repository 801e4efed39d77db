#pragma once

#include "catmap/exact_matrix.hpp"
#include "catmap/orbit.hpp"
#include "catmap/residue_matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

/// Square raster of side N with an opaque payload per cell, stored row-major
/// with row 0 at the top.
///
/// Coordinate convention, pinned by the worked 3x3 example: map coordinate
/// x is the column index and y counts rows from the bottom, so (0, 0) is the
/// bottom-left pixel. Scrambling moves the pixel at (x, y) to A*(x, y) mod N
/// (destination assignment).
template <class Pixel>
class RasterImage {
public:
    explicit RasterImage(Residue side, const Pixel& fill = Pixel{})
        : side_(side), pixels_(static_cast<std::size_t>(side) * side, fill) {
        if (side < 1) throw std::invalid_argument("RasterImage: side must be >= 1");
    }

    RasterImage(Residue side, std::vector<Pixel> pixels) : side_(side), pixels_(std::move(pixels)) {
        if (side < 1) throw std::invalid_argument("RasterImage: side must be >= 1");
        if (pixels_.size() != static_cast<std::size_t>(side) * side)
            throw std::invalid_argument("RasterImage: payload size does not match side^2");
    }

    Residue side() const { return side_; }

    Pixel& at(Residue row, Residue col) { return pixels_[row * side_ + col]; }
    const Pixel& at(Residue row, Residue col) const { return pixels_[row * side_ + col]; }

    const std::vector<Pixel>& pixels() const { return pixels_; }

    bool operator==(const RasterImage&) const = default;

private:
    Residue side_;
    std::vector<Pixel> pixels_;
};

/// t iterations of the cat map on an image. The t-step permutation is the
/// t-th matrix power, so one pass over the pixels suffices for any t; t = 0
/// is the identity and t = period restores the input bit-exactly.
template <class Pixel>
RasterImage<Pixel> scramble_image(const RasterImage<Pixel>& img, std::uint64_t iterations) {
    const Residue n = img.side();
    const ResidueMatrix power = mat_pow_mod(cat_map_2d(), iterations, n);
    RasterImage<Pixel> out(n);
    for (Residue row = 0; row < n; ++row) {
        for (Residue col = 0; col < n; ++col) {
            const Residue x = col;
            const Residue y = (n - 1) - row;
            const Residue nx = add_mod(mul_mod(power(0, 0), x, n), mul_mod(power(0, 1), y, n), n);
            const Residue ny = add_mod(mul_mod(power(1, 0), x, n), mul_mod(power(1, 1), y, n), n);
            out.at((n - 1) - ny, nx) = img.at(row, col);
        }
    }
    return out;
}

/// n-dimensional hypercube of side N, row-major (last coordinate fastest).
/// Unlike RasterImage there is no display flip: a cell's index tuple is its
/// map coordinate.
template <class Cell>
struct Hypercube {
    std::size_t dim;
    Residue side;
    std::vector<Cell> cells;

    Hypercube(std::size_t dim_, Residue side_, const Cell& fill = Cell{})
        : dim(dim_), side(side_), cells(cell_count(dim_, side_), fill) {}

    Hypercube(std::size_t dim_, Residue side_, std::vector<Cell> cells_)
        : dim(dim_), side(side_), cells(std::move(cells_)) {
        if (cells.size() != cell_count(dim, side))
            throw std::invalid_argument("Hypercube: payload size does not match side^dim");
    }

    static std::size_t cell_count(std::size_t dim, Residue side) {
        if (dim < 1) throw std::invalid_argument("Hypercube: dimension must be >= 1");
        if (side < 1) throw std::invalid_argument("Hypercube: side must be >= 1");
        unsigned __int128 total = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            total *= side;
            if (total > (static_cast<unsigned __int128>(1) << 40))
                throw std::invalid_argument("Hypercube: too many cells");
        }
        return static_cast<std::size_t>(total);
    }

    bool operator==(const Hypercube&) const = default;
};

/// t iterations of an n-dimensional map on a hypercube, by destination
/// assignment with the t-th matrix power, exactly as the 2-D scramble.
template <class Cell>
Hypercube<Cell> scramble_lattice(const Hypercube<Cell>& data, const ExactMatrix& a,
                                 std::uint64_t iterations) {
    if (a.dim() != data.dim)
        throw std::invalid_argument("scramble_lattice: matrix dimension " +
                                    std::to_string(a.dim()) + " does not match lattice dimension " +
                                    std::to_string(data.dim));
    const Residue n = data.side;
    const ResidueMatrix power = mat_pow_mod(a, iterations, n);
    Hypercube<Cell> out(data.dim, n);
    std::vector<Residue> coord(data.dim, 0), dest(data.dim, 0);
    for (std::size_t cell = 0; cell < data.cells.size(); ++cell) {
        std::size_t rest = cell;
        for (std::size_t i = data.dim; i-- > 0;) {
            coord[i] = static_cast<Residue>(rest % n);
            rest /= n;
        }
        detail::apply_residue(power, coord, dest);
        std::size_t dest_index = 0;
        for (std::size_t i = 0; i < data.dim; ++i) dest_index = dest_index * n + dest[i];
        out.cells[dest_index] = data.cells[cell];
    }
    return out;
}

} // namespace catmap
