#pragma once

#include "catmap/dcm_builder.hpp"
#include "catmap/fibonacci.hpp"
#include "catmap/residue_matrix.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmap {

enum class PeriodMethod { fibonacci, matrix_order };

enum class DysonFalkClass {
    three_N,        ///< N = 2*5^s, s >= 1: period is exactly 3N
    two_N,          ///< N = 5^s (s >= 1) or 6*5^s (s >= 0): period is exactly 2N
    other,          ///< every other N >= 3: period is at most 12N/7
    small_N_special ///< N = 1 or 2, outside the classification
};

inline const char* to_string(PeriodMethod m) {
    return m == PeriodMethod::fibonacci ? "fibonacci" : "matrix-order";
}

inline const char* to_string(DysonFalkClass c) {
    switch (c) {
        case DysonFalkClass::three_N: return "three_N";
        case DysonFalkClass::two_N: return "two_N";
        case DysonFalkClass::other: return "other";
        default: return "small_N_special";
    }
}

struct PeriodReport {
    Residue grid_size = 1;
    std::size_t dimension = 2;
    std::uint64_t period = 1;
    PeriodMethod method = PeriodMethod::fibonacci;
    DysonFalkClass dyson_falk = DysonFalkClass::small_N_special;
    /// 2-dimensional theorem check 2M <= N^2; true by definition outside the
    /// theorem's regime (N < 3 or dimension > 2).
    bool bound_satisfied = true;
};

struct DysonFalkPrediction {
    DysonFalkClass cls = DysonFalkClass::other;
    std::uint64_t value = 0; ///< exact predicted period, or the 12N/7 bound
    bool exact = false;      ///< true when `value` is the period itself
};

namespace detail {

inline DysonFalkPrediction classify_dyson_falk(Residue n) {
    if (n < 3) return {DysonFalkClass::small_N_special, 0, false};
    // strip factors of 5, look at what is left
    Residue core = n;
    while (core % 5 == 0) core /= 5;
    const bool stripped = core != n;
    if (core == 2 && stripped) return {DysonFalkClass::three_N, 3 * n, true};
    if (core == 1 && stripped) return {DysonFalkClass::two_N, 2 * n, true};
    if (core == 6) return {DysonFalkClass::two_N, 2 * n, true};
    return {DysonFalkClass::other, 12 * n / 7, false};
}

/// Multiplicative order of a mod N by iterated multiplication with running
/// reduction; empty when the cap is hit first.
inline std::optional<std::uint64_t> matrix_order(const ExactMatrix& a, Residue modulus,
                                                 std::uint64_t cap) {
    const ResidueMatrix base = ResidueMatrix::reduce(a, modulus);
    ResidueMatrix cur = base;
    for (std::uint64_t t = 1; t <= cap; ++t) {
        if (cur.is_identity()) return t;
        cur = cur * base;
    }
    return std::nullopt;
}

} // namespace detail

/// Dyson-Falk classification of a grid size N >= 3, with the predicted
/// period (exact for the 2*5^s / 5^s / 6*5^s families) or the 12N/7 bound.
inline DysonFalkPrediction dyson_falk_class(Residue n) {
    if (n < 3)
        throw std::invalid_argument("dyson_falk_class: N must be >= 3, got " + std::to_string(n));
    return detail::classify_dyson_falk(n);
}

/// Restoration period of the 2-dimensional cat map on an N x N grid.
///
/// For N > 2 the period is half the Fibonacci residue cycle length: the
/// 2t-th power of the companion matrix carries (u_{2t-1}, u_{2t}, u_{2t+1}),
/// so the grid restores exactly when u_{2t} == 0 and u_{2t-1} == 1 mod N.
/// N = 1 and N = 2 fall outside that reduction and are handled directly.
inline PeriodReport dcm_period_2d(Residue n) {
    if (n < 1) throw std::invalid_argument("dcm_period_2d: N must be >= 1");
    PeriodReport report;
    report.grid_size = n;
    report.dimension = 2;
    report.dyson_falk = detail::classify_dyson_falk(n).cls;
    if (n == 1) {
        report.period = 1;
        report.method = PeriodMethod::fibonacci;
    } else if (n == 2) {
        report.period = *detail::matrix_order(cat_map_2d(), 2, 16);
        report.method = PeriodMethod::matrix_order;
    } else {
        report.period = residue_cycle(n).cycle_length / 2; // cycle length is even for N > 2
        report.method = PeriodMethod::fibonacci;
    }
    if (n >= 3)
        report.bound_satisfied =
            2 * static_cast<unsigned __int128>(report.period) <=
            static_cast<unsigned __int128>(n) * n;
    return report;
}

/// Outcome of an n-dimensional period search: either a report, or honest
/// partial progress when the iteration cap was reached first.
struct NdPeriodSearch {
    std::optional<PeriodReport> report;
    std::uint64_t iterations_done = 0;
    std::uint64_t cap = 0;

    bool cap_exceeded() const { return !report.has_value(); }
};

/// Restoration period of the n-dimensional cat map mod N: the smallest
/// t >= 1 with A_n^t == I mod N. Existence is guaranteed (det A_n = 1 makes
/// the map a permutation of the finite grid), but no closed form is known
/// for n > 2, so the search walks powers up to `cap`.
inline NdPeriodSearch dcm_period_nd(std::size_t dim, Residue n, std::uint64_t cap = 1'000'000) {
    if (dim < 2) throw std::invalid_argument("dcm_period_nd: dimension must be >= 2");
    if (n < 1) throw std::invalid_argument("dcm_period_nd: N must be >= 1");
    NdPeriodSearch search;
    search.cap = cap;
    const ExactMatrix a = build_dcm(dim);
    std::optional<std::uint64_t> order = detail::matrix_order(a, n, cap);
    if (!order) {
        search.iterations_done = cap;
        return search;
    }
    PeriodReport report;
    report.grid_size = n;
    report.dimension = dim;
    report.period = *order;
    report.method = PeriodMethod::matrix_order;
    report.dyson_falk = detail::classify_dyson_falk(n).cls;
    if (dim == 2 && n >= 3)
        report.bound_satisfied =
            2 * static_cast<unsigned __int128>(report.period) <=
            static_cast<unsigned __int128>(n) * n;
    search.report = report;
    search.iterations_done = *order;
    return search;
}

struct BoundsRow {
    Residue grid_size = 0;
    std::uint64_t period = 0;
    DysonFalkClass cls = DysonFalkClass::other;
    bool theorem_ok = true;    ///< 2M <= N^2
    bool dyson_falk_ok = true; ///< period matches the class prediction / bound
};

struct BoundsSummary {
    Residue from = 0;
    Residue to = 0;
    std::vector<BoundsRow> rows;       ///< one row per N, ascending
    std::vector<BoundsRow> violations; ///< rows failing either check (expected empty)
};

/// Sweeps N over [from, to], checking the N^2/2 theorem bound and the
/// Dyson-Falk prediction for every grid size. Violations are reported, not
/// thrown; none are expected.
inline BoundsSummary verify_bounds(Residue from, Residue to) {
    if (from < 3) throw std::invalid_argument("verify_bounds: range must start at N >= 3");
    if (from > to) throw std::invalid_argument("verify_bounds: empty range");
    BoundsSummary summary;
    summary.from = from;
    summary.to = to;
    summary.rows.reserve(to - from + 1);
    for (Residue n = from; n <= to; ++n) {
        const PeriodReport rep = dcm_period_2d(n);
        const DysonFalkPrediction pred = detail::classify_dyson_falk(n);
        BoundsRow row;
        row.grid_size = n;
        row.period = rep.period;
        row.cls = pred.cls;
        row.theorem_ok = rep.bound_satisfied;
        row.dyson_falk_ok = pred.exact ? rep.period == pred.value : rep.period <= pred.value;
        summary.rows.push_back(row);
        if (!row.theorem_ok || !row.dyson_falk_ok) summary.violations.push_back(row);
    }
    return summary;
}

} // namespace catmap
