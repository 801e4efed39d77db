#pragma once

#include "catmap/exact_matrix.hpp"
#include "catmap/residue_matrix.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

/// A point of the discrete n-dimensional grid: coordinates in [0, N).
struct LatticePoint {
    std::vector<Residue> coords;
    Residue modulus = 1;

    LatticePoint(std::vector<Residue> coords_, Residue modulus_)
        : coords(std::move(coords_)), modulus(modulus_) {
        if (modulus < 1) throw std::invalid_argument("LatticePoint: modulus must be >= 1");
        if (coords.empty()) throw std::invalid_argument("LatticePoint: needs at least one coordinate");
        for (Residue c : coords)
            if (c >= modulus)
                throw std::invalid_argument("LatticePoint: coordinate " + std::to_string(c) +
                                            " not in [0, " + std::to_string(modulus) + ")");
    }

    std::size_t arity() const { return coords.size(); }
    bool operator==(const LatticePoint&) const = default;
};

namespace detail {

inline void apply_residue(const ResidueMatrix& m, const std::vector<Residue>& in,
                          std::vector<Residue>& out) {
    const Residue modulus = m.modulus();
    for (std::size_t i = 0; i < in.size(); ++i) {
        Residue acc = 0;
        for (std::size_t j = 0; j < in.size(); ++j)
            acc = add_mod(acc, mul_mod(m(i, j), in[j], modulus), modulus);
        out[i] = acc;
    }
}

} // namespace detail

/// One application of the map: matrix-vector product reduced mod N.
inline LatticePoint step_point(const LatticePoint& p, const ExactMatrix& a) {
    if (a.dim() != p.arity())
        throw std::invalid_argument("step_point: matrix dimension " + std::to_string(a.dim()) +
                                    " does not match point arity " + std::to_string(p.arity()));
    const ResidueMatrix m = ResidueMatrix::reduce(a, p.modulus);
    std::vector<Residue> out(p.arity(), 0);
    detail::apply_residue(m, p.coords, out);
    return {std::move(out), p.modulus};
}

/// The full cycle of a point under the map: starts at `start`, lists every
/// distinct point visited, and closes back onto the start.
struct OrbitRecord {
    LatticePoint start;
    std::vector<LatticePoint> points;

    std::uint64_t length() const { return points.size(); }
};

inline OrbitRecord pixel_orbit(const LatticePoint& p, const ExactMatrix& a) {
    if (a.dim() != p.arity())
        throw std::invalid_argument("pixel_orbit: matrix dimension " + std::to_string(a.dim()) +
                                    " does not match point arity " + std::to_string(p.arity()));
    const ResidueMatrix m = ResidueMatrix::reduce(a, p.modulus);
    OrbitRecord orbit{p, {p}};
    std::vector<Residue> cur = p.coords, next(p.arity(), 0);
    while (true) {
        detail::apply_residue(m, cur, next);
        if (next == p.coords) break;
        orbit.points.emplace_back(next, p.modulus);
        cur = next;
    }
    return orbit;
}

/// Cycle structure of the map on the whole grid.
struct DensityReport {
    Residue grid_size = 1;
    std::size_t dimension = 2;
    std::uint64_t cell_count = 1;       ///< N^dim
    std::uint64_t cycle_count = 0;
    std::uint64_t max_cycle_length = 0;
    std::map<std::uint64_t, std::uint64_t> cycle_length_counts; ///< length -> how many cycles
    /// max_cycle_length <= cell_count / 2: no orbit visits more than half the
    /// grid, which is why an image is never dense in itself. Meaningful for
    /// the 2-dimensional map with N >= 3.
    bool half_bound_ok = false;

    double coverage_ratio() const {
        return static_cast<double>(max_cycle_length) / static_cast<double>(cell_count);
    }
};

/// Decomposes the full N^n grid into the map's cycles by walking each
/// unvisited cell's orbit once. Memory and time are linear in the number of
/// cells, so this is for desk-scale N.
inline DensityReport density_report(Residue n, const ExactMatrix& a) {
    if (n < 1) throw std::invalid_argument("density_report: N must be >= 1");
    const std::size_t dim = a.dim();
    unsigned __int128 cells_wide = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        cells_wide *= n;
        if (cells_wide > (static_cast<unsigned __int128>(1) << 40))
            throw std::invalid_argument("density_report: grid has too many cells to enumerate");
    }
    const std::uint64_t cells = static_cast<std::uint64_t>(cells_wide);

    const ResidueMatrix m = ResidueMatrix::reduce(a, n);
    std::vector<bool> seen(cells, false);
    std::vector<Residue> coord(dim, 0), next(dim, 0);

    const auto index_of = [&](const std::vector<Residue>& c) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < dim; ++i) idx = idx * n + c[i];
        return idx;
    };

    DensityReport report;
    report.grid_size = n;
    report.dimension = dim;
    report.cell_count = cells;

    for (std::uint64_t cell = 0; cell < cells; ++cell) {
        if (seen[cell]) continue;
        // unpack flat index into coordinates
        std::uint64_t rest = cell;
        for (std::size_t i = dim; i-- > 0;) {
            coord[i] = static_cast<Residue>(rest % n);
            rest /= n;
        }
        std::uint64_t length = 0;
        std::vector<Residue> cur = coord;
        do {
            seen[index_of(cur)] = true;
            ++length;
            detail::apply_residue(m, cur, next);
            cur = next;
        } while (cur != coord);
        ++report.cycle_count;
        ++report.cycle_length_counts[length];
        if (length > report.max_cycle_length) report.max_cycle_length = length;
    }
    report.half_bound_ok = 2 * report.max_cycle_length <= report.cell_count;
    return report;
}

} // namespace catmap
