#pragma once

#include "catmap/exact_matrix.hpp"
#include "catmap/int_types.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

/// Square matrix over Z/N: every entry is the least non-negative residue of
/// its exact counterpart. Carries its modulus so mixed-modulus products are
/// rejected instead of silently wrong.
class ResidueMatrix {
public:
    ResidueMatrix(std::size_t dim, Residue modulus)
        : dim_(dim), modulus_(modulus), entries_(dim * dim, 0) {
        if (dim == 0) throw std::invalid_argument("ResidueMatrix: dimension must be positive");
        if (modulus < 1) throw std::invalid_argument("ResidueMatrix: modulus must be >= 1");
    }

    static ResidueMatrix identity(std::size_t dim, Residue modulus) {
        ResidueMatrix m(dim, modulus);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1 % modulus;
        return m;
    }

    /// Entry-wise reduction of an exact matrix.
    static ResidueMatrix reduce(const ExactMatrix& a, Residue modulus) {
        ResidueMatrix m(a.dim(), modulus);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = reduce_mod(a(i, j), modulus);
        return m;
    }

    std::size_t dim() const { return dim_; }
    Residue modulus() const { return modulus_; }

    Residue& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    Residue operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    bool operator==(const ResidueMatrix& other) const = default;

    ResidueMatrix operator*(const ResidueMatrix& other) const {
        if (dim_ != other.dim_ || modulus_ != other.modulus_)
            throw std::invalid_argument("ResidueMatrix: dimension or modulus mismatch in product");
        ResidueMatrix out(dim_, modulus_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Residue acc = 0;
                for (std::size_t k = 0; k < dim_; ++k)
                    acc = add_mod(acc, mul_mod((*this)(i, k), other(k, j), modulus_), modulus_);
                out(i, j) = acc;
            }
        return out;
    }

    /// True iff this is the identity of Z/N. For N = 1 every matrix is the
    /// (all-zero) identity.
    bool is_identity() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if ((*this)(i, j) != (i == j ? 1 % modulus_ : 0)) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const ResidueMatrix& m) {
        for (std::size_t i = 0; i < m.dim_; ++i) {
            for (std::size_t j = 0; j < m.dim_; ++j) {
                if (j) os << ' ';
                os << m(i, j);
            }
            if (i + 1 < m.dim_) os << '\n';
        }
        return os;
    }

private:
    std::size_t dim_;
    Residue modulus_;
    std::vector<Residue> entries_;
};

inline bool is_identity(const ResidueMatrix& m) { return m.is_identity(); }

/// a^t mod N by square-and-multiply, reducing after every product. t = 0
/// yields the identity of Z/N.
inline ResidueMatrix mat_pow_mod(const ExactMatrix& a, std::uint64_t t, Residue modulus) {
    if (modulus < 1) throw std::invalid_argument("mat_pow_mod: modulus must be >= 1");
    ResidueMatrix result = ResidueMatrix::identity(a.dim(), modulus);
    ResidueMatrix base = ResidueMatrix::reduce(a, modulus);
    while (t) {
        if (t & 1) result = result * base;
        base = base * base;
        t >>= 1;
    }
    return result;
}

} // namespace catmap
