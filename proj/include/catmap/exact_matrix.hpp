#pragma once

#include "catmap/int_types.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catmap {

/// Square matrix of exact arbitrary-precision integers, row-major.
///
/// This is the value type behind every cat-map matrix in the library; the
/// entries of the n-dimensional maps grow without bound (thousands of digits
/// by n = 8), so there is deliberately no fixed-width or floating escape
/// hatch anywhere in this class.
class ExactMatrix {
public:
    explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("ExactMatrix: dimension must be positive");
    }

    ExactMatrix(std::initializer_list<std::initializer_list<Int>> rows)
        : ExactMatrix(rows.size()) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != dim_)
                throw std::invalid_argument("ExactMatrix: row " + std::to_string(r + 1) +
                                            " has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(dim_));
            std::size_t c = 0;
            for (const auto& v : row) entries_[r * dim_ + c++] = v;
            ++r;
        }
    }

    static ExactMatrix identity(std::size_t dim) {
        ExactMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t dim() const { return dim_; }

    Int& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Int& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    bool operator==(const ExactMatrix& other) const = default;

    ExactMatrix operator*(const ExactMatrix& other) const {
        if (dim_ != other.dim_)
            throw std::invalid_argument("ExactMatrix: cannot multiply " + std::to_string(dim_) +
                                        "x" + std::to_string(dim_) + " by " +
                                        std::to_string(other.dim_) + "x" +
                                        std::to_string(other.dim_));
        ExactMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * other(k, j);
            }
        return out;
    }

    Int trace() const {
        Int t = 0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// division below is exact, so the result is the true integer value at
    /// any size.
    Int det() const {
        std::vector<Int> m = entries_;
        const std::size_t n = dim_;
        int sign = 1;
        Int prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m[k * n + k] == 0) {
                std::size_t pivot = k + 1;
                while (pivot < n && m[pivot * n + k] == 0) ++pivot;
                if (pivot == n) return 0;
                for (std::size_t j = 0; j < n; ++j)
                    std::swap(m[k * n + j], m[pivot * n + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
            prev = m[k * n + k];
        }
        return sign > 0 ? m[n * n - 1] : -m[n * n - 1];
    }

    std::string to_string() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
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
    std::vector<Int> entries_;
};

/// The 2x2 Fibonacci companion matrix [[0,1],[1,1]]; its square is the cat
/// map matrix, and its powers carry consecutive Fibonacci numbers.
inline ExactMatrix fibonacci_matrix() { return ExactMatrix{{0, 1}, {1, 1}}; }

/// The 2-dimensional discrete cat map matrix [[1,1],[1,2]].
inline ExactMatrix cat_map_2d() { return ExactMatrix{{1, 1}, {1, 2}}; }

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) { return a * b; }

} // namespace catmap
