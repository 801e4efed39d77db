#pragma once

#include "catmap/exact_matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

/// Descriptor of an n x n i-frame: the template whose i-th row and column
/// are zero except for a 1 at (i, i), with the remaining (n-1) x (n-1)
/// positions left open as the insertion slot. The blank slot is structural,
/// so the frame is carried as (dim, index) rather than a materialized matrix.
struct FrameSpec {
    std::size_t dim;   ///< n, must be >= 2
    std::size_t index; ///< i, 1-based, 1 <= i <= n

    FrameSpec(std::size_t dim_, std::size_t index_) : dim(dim_), index(index_) {
        if (dim < 2) throw std::invalid_argument("FrameSpec: frame dimension must be >= 2");
        if (index < 1 || index > dim)
            throw std::invalid_argument("FrameSpec: index " + std::to_string(index) +
                                        " out of range 1.." + std::to_string(dim));
    }
};

/// A basis map: an (n+1)-dimensional matrix that fixes the i-th coordinate
/// and acts as the inserted n-dimensional map on the rest.
struct BasisMap {
    ExactMatrix matrix;
    std::size_t fixed_index; ///< 1-based coordinate left fixed

    bool operator==(const BasisMap&) const = default;
};

/// Matrix union: inserts an n-dimensional matrix into an (n+1)-dimensional
/// i-frame. Row and column i of the output carry the frame's zeros and the
/// 1 at (i, i); the remaining positions take the input's entries in order,
/// skipping index i.
inline BasisMap matrix_union(const ExactMatrix& a, const FrameSpec& frame) {
    if (frame.dim != a.dim() + 1)
        throw std::invalid_argument("matrix_union: frame dimension " + std::to_string(frame.dim) +
                                    " does not extend a " + std::to_string(a.dim()) + "x" +
                                    std::to_string(a.dim()) + " matrix by one");
    const std::size_t m = frame.dim;
    const std::size_t skip = frame.index - 1;
    ExactMatrix out(m);
    out(skip, skip) = 1;
    std::size_t src_r = 0;
    for (std::size_t r = 0; r < m; ++r) {
        if (r == skip) continue;
        std::size_t src_c = 0;
        for (std::size_t c = 0; c < m; ++c) {
            if (c == skip) continue;
            out(r, c) = a(src_r, src_c);
            ++src_c;
        }
        ++src_r;
    }
    return {std::move(out), frame.index};
}

/// The union basis of a: the n+1 basis maps obtained by inserting a into
/// every (n+1)-dimensional i-frame, in ascending i.
inline std::vector<BasisMap> union_basis(const ExactMatrix& a) {
    if (a.dim() < 2) throw std::invalid_argument("union_basis: input dimension must be >= 2");
    std::vector<BasisMap> maps;
    maps.reserve(a.dim() + 1);
    for (std::size_t i = 1; i <= a.dim() + 1; ++i)
        maps.push_back(matrix_union(a, FrameSpec(a.dim() + 1, i)));
    return maps;
}

/// The n-dimensional discrete cat map matrix, built from the 2-dimensional
/// base by repeatedly multiplying out the union basis. The product runs over
/// ascending i, left to right; that order reproduces the known 3- and
/// 4-dimensional matrices exactly and is pinned by tests.
inline ExactMatrix build_dcm(std::size_t n) {
    if (n < 2) throw std::invalid_argument("build_dcm: dimension must be >= 2");
    ExactMatrix a = cat_map_2d();
    for (std::size_t k = 2; k < n; ++k) {
        std::vector<BasisMap> basis = union_basis(a);
        ExactMatrix product = basis.front().matrix;
        for (std::size_t i = 1; i < basis.size(); ++i) product = product * basis[i].matrix;
        a = std::move(product);
    }
    return a;
}

} // namespace catmap
