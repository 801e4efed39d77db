#pragma once

#include "catmap/exact_matrix.hpp"
#include "catmap/int_types.hpp"

#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

/// Monic integer polynomial det(lambda*I - A). Note the normalization: some
/// sources print det(A - lambda*I) instead, which differs by a global factor
/// of (-1)^n for odd degrees.
class CharPolynomial {
public:
    /// Coefficients in ascending order: coeffs[k] multiplies lambda^k and
    /// coeffs.back() must be 1.
    explicit CharPolynomial(std::vector<Int> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        if (coeffs_.size() < 2)
            throw std::invalid_argument("CharPolynomial: degree must be >= 1");
        if (coeffs_.back() != 1)
            throw std::invalid_argument("CharPolynomial: leading coefficient must be 1");
    }

    std::size_t degree() const { return coeffs_.size() - 1; }

    /// Coefficient of lambda^k.
    const Int& coeff(std::size_t k) const { return coeffs_.at(k); }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// Exact integer evaluation by Horner's rule.
    Int eval(const Int& x) const {
        Int acc = coeffs_.back();
        for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    bool operator==(const CharPolynomial&) const = default;

    /// Descending coefficients separated by spaces, e.g. "1 -3 1".
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            os << coeffs_[k];
            if (k) os << ' ';
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const CharPolynomial& p) {
        return os << p.to_string();
    }

private:
    std::vector<Int> coeffs_;
};

/// Exact characteristic polynomial by the Faddeev-LeVerrier recurrence. The
/// per-step division by k is exact over the integers, so no rational
/// arithmetic is needed.
inline CharPolynomial char_poly(const ExactMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    ExactMatrix m = ExactMatrix::identity(n); // M_1
    c[n - 1] = -a.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1}*I
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        Int t = (a * m).trace();
        c[n - k] = -t / Int(k);
    }
    return CharPolynomial(std::move(c));
}

} // namespace catmap
