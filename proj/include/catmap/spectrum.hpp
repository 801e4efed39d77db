#pragma once

#include "catmap/charpoly.hpp"
#include "catmap/dcm_builder.hpp"
#include "catmap/int_types.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catmap {

namespace detail {

// Integer polynomials, ascending coefficients; empty vector is the zero
// polynomial. All arithmetic below is exact.
using IntPoly = std::vector<Int>;

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::size_t poly_deg(const IntPoly& p) { return p.empty() ? 0 : p.size() - 1; }

inline IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Int(k) * p[k]);
    trim(d);
    return d;
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g; // 0 only for the zero polynomial
}

/// Divides out the content and makes the leading coefficient positive.
/// Fine for gcd and squarefree work where only roots matter; NOT for Sturm
/// chains, whose element signs are semantic.
inline IntPoly primitive(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    Int g = content(p);
    if (p.back() < 0) g = -g;
    for (Int& c : p) c /= g;
    return p;
}

/// Divides out the (positive) content only, preserving the sign of every
/// value the polynomial takes.
inline IntPoly primitive_keep_sign(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    const Int g = content(p);
    for (Int& c : p) c /= g;
    return p;
}

/// Remainder of f by g scaled by a positive power of |lc(g)|: division-free
/// elimination, with a final sign fix when lc(g) is negative and the number
/// of elimination steps is odd.
inline IntPoly positive_pseudo_remainder(IntPoly f, const IntPoly& g) {
    trim(f);
    const Int& lcg = g.back();
    std::size_t steps = 0;
    while (!f.empty() && f.size() >= g.size()) {
        const std::size_t shift = f.size() - g.size();
        const Int lead = f.back();
        for (Int& c : f) c *= lcg;
        for (std::size_t k = 0; k < g.size(); ++k) f[k + shift] -= lead * g[k];
        trim(f);
        ++steps;
    }
    if (lcg < 0 && (steps & 1))
        for (Int& c : f) c = -c;
    return f;
}

/// Exact quotient f / g; both operands and the result are integer
/// polynomials (callers guarantee divisibility).
inline IntPoly divide_exact(IntPoly f, const IntPoly& g) {
    trim(f);
    if (g.empty()) throw std::logic_error("divide_exact: division by zero polynomial");
    if (f.empty()) return {};
    if (f.size() < g.size()) throw std::logic_error("divide_exact: not divisible");
    IntPoly q(f.size() - g.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Int& num = f[k + g.size() - 1];
        if (num % g.back() != 0) throw std::logic_error("divide_exact: not divisible");
        q[k] = num / g.back();
        if (q[k] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) f[k + j] -= q[k] * g[j];
    }
    trim(f);
    if (!f.empty()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

/// Primitive positive-leading gcd by the primitive pseudo-remainder chain.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (poly_deg(a) < poly_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = primitive(positive_pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Yun's squarefree decomposition: returns (factor, multiplicity) pairs with
/// squarefree, pairwise coprime, positive-leading factors whose powers
/// multiply back to +/- the input.
inline std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(IntPoly f) {
    f = primitive(std::move(f));
    std::vector<std::pair<IntPoly, std::size_t>> out;
    if (poly_deg(f) == 0) return out;
    IntPoly fp = derivative(f);
    IntPoly g = poly_gcd(f, fp);
    if (poly_deg(g) == 0) {
        out.emplace_back(std::move(f), 1);
        return out;
    }
    IntPoly a = divide_exact(f, g);
    IntPoly b = divide_exact(fp, g);
    // c = b - a'
    IntPoly c = b;
    IntPoly ap = derivative(a);
    c.resize(std::max(c.size(), ap.size()));
    for (std::size_t k = 0; k < ap.size(); ++k) c[k] -= ap[k];
    trim(c);
    std::size_t mult = 1;
    while (poly_deg(a) > 0) {
        IntPoly d = poly_gcd(a, c);
        if (poly_deg(d) > 0) out.emplace_back(d, mult);
        a = divide_exact(a, d);
        IntPoly bb = divide_exact(c, d);
        ap = derivative(a);
        c = bb;
        c.resize(std::max(c.size(), ap.size()));
        for (std::size_t k = 0; k < ap.size(); ++k) c[k] -= ap[k];
        trim(c);
        ++mult;
    }
    return out;
}

/// Dyadic rational num / 2^shift.
struct Dyadic {
    Int num;
    unsigned shift = 0;

    BigFloat to_bigfloat() const {
        return boost::multiprecision::ldexp(BigFloat(num), -static_cast<int>(shift));
    }
};

/// Exact sign of p at num / 2^shift: evaluates p * 2^(shift*deg) by Horner,
/// which stays in the integers.
inline int sign_at(const IntPoly& p, const Int& num, unsigned shift) {
    if (p.empty()) return 0;
    Int acc = p.back();
    for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * num + (p[k] << (shift * (p.size() - 1 - k)));
    return acc.sign();
}

/// Sturm chain of a squarefree polynomial. Every rescaling along the chain
/// is by a positive constant: the sign pattern at any point is exactly that
/// of the classical chain.
inline std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(primitive_keep_sign(f));
    IntPoly d = primitive_keep_sign(derivative(f));
    if (d.empty()) return chain;
    chain.push_back(std::move(d));
    while (true) {
        const IntPoly& s0 = chain[chain.size() - 2];
        const IntPoly& s1 = chain.back();
        IntPoly r = positive_pseudo_remainder(s0, s1);
        if (r.empty()) break;
        for (Int& c : r) c = -c;
        chain.push_back(primitive_keep_sign(std::move(r)));
        if (poly_deg(chain.back()) == 0) break;
    }
    return chain;
}

inline int sign_variations(const std::vector<IntPoly>& chain, const Int& num, unsigned shift) {
    int count = 0, prev = 0;
    for (const IntPoly& s : chain) {
        const int sg = sign_at(s, num, shift);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

/// Open interval with dyadic endpoints, both non-roots of the polynomial it
/// was isolated for.
struct Isolation {
    Dyadic lo, hi;
};

struct IsolationResult {
    std::vector<Dyadic> exact_roots; ///< dyadic points where the factor vanishes exactly
    std::vector<Isolation> intervals;
    long min_exp = 0; ///< 2^min_exp lower-bounds every root magnitude of the final factor
};

/// Smallest power of two exceeding the Cauchy root bound of f.
inline Dyadic root_bound(const IntPoly& f) {
    Int maxabs = 0;
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        Int a = boost::multiprecision::abs(f[k]);
        if (a > maxabs) maxabs = a;
    }
    Int q = maxabs / boost::multiprecision::abs(f.back()) + 2;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(q)) + 1;
    Dyadic b;
    b.num = Int(1) << bits;
    b.shift = 0;
    return b;
}

/// 2^e lower-bounds every nonzero root's magnitude (Cauchy bound applied to
/// the reversed polynomial; requires a nonzero constant term).
inline long min_root_exponent(const IntPoly& f) {
    Int maxabs = 0;
    for (std::size_t k = 1; k < f.size(); ++k) {
        Int a = boost::multiprecision::abs(f[k]);
        if (a > maxabs) maxabs = a;
    }
    Int q = maxabs / boost::multiprecision::abs(f.front()) + 2;
    return -static_cast<long>(boost::multiprecision::msb(q)) - 1;
}

/// One subdivision of (lo, hi)/2^shift, all dyadic. Splits at zero when the
/// interval straddles it; at the power of two nearest the geometric middle
/// when the interval spans several octaves (the cat-map spectra spread over
/// hundreds of octaves, where arithmetic halving would take thousands of
/// steps to separate magnitudes); at the arithmetic midpoint otherwise.
struct SplitChoice {
    Int lo, mid, hi;
    unsigned shift;
};

inline SplitChoice choose_split(Int lo, Int hi, unsigned shift, long min_exp) {
    if (lo < 0 && hi > 0) return {std::move(lo), 0, std::move(hi), shift};
    const bool negative_side = hi <= 0;
    const Int inner = negative_side ? -hi : lo;  // smaller magnitude, >= 0
    const Int outer = negative_side ? -lo : hi;  // larger magnitude, > 0
    const long e_outer = static_cast<long>(boost::multiprecision::msb(outer)) - shift;
    const long e_inner = inner == 0
                             ? min_exp - 1
                             : static_cast<long>(boost::multiprecision::msb(inner)) - shift;
    if (e_outer - e_inner >= 2) {
        long m = (e_inner + e_outer) / 2;
        if (m <= e_inner) m = e_inner + 1;
        if (m >= e_outer) m = e_outer - 1;
        unsigned next_shift = shift;
        if (m < 0 && static_cast<unsigned>(-m) > next_shift)
            next_shift = static_cast<unsigned>(-m);
        const unsigned rescale = next_shift - shift;
        Int mid = Int(1) << static_cast<unsigned>(static_cast<long>(next_shift) + m);
        if (negative_side) mid = -mid;
        return {lo << rescale, std::move(mid), hi << rescale, next_shift};
    }
    Int mid = lo + hi;
    return {lo << 1, std::move(mid), hi << 1, shift + 1};
}

/// Isolates all real roots of a squarefree polynomial into disjoint open
/// dyadic intervals holding exactly one root each. Dyadic roots hit during
/// subdivision are deflated out and the scan restarts on the quotient, so
/// interval endpoints are never roots.
inline IsolationResult isolate_real_roots(IntPoly f) {
    IsolationResult result;
    f = primitive(std::move(f));

restart:
    if (poly_deg(f) == 0) return result;
    if (poly_deg(f) == 1) {
        // monic or primitive linear factor a1*x + a0: root only if exact
        if (f[0] % f[1] == 0) {
            result.exact_roots.push_back({-f[0] / f[1], 0});
            return result;
        }
        // fall through to bisection with the generic machinery
    }
    const std::vector<IntPoly> chain = sturm_chain(f);
    const Dyadic bound = root_bound(f);
    result.min_exp = min_root_exponent(f);
    struct Node {
        Int lo_num, hi_num;
        unsigned shift;
    };
    std::vector<Node> stack;
    stack.push_back({-bound.num, bound.num, 0});
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        if (node.shift > 200000)
            throw std::logic_error("isolate_real_roots: subdivision exceeded depth bound");
        const int count = sign_variations(chain, node.lo_num, node.shift) -
                          sign_variations(chain, node.hi_num, node.shift);
        if (count <= 0) continue;
        if (count == 1) {
            result.intervals.push_back(
                {{node.lo_num, node.shift}, {node.hi_num, node.shift}});
            continue;
        }
        SplitChoice split =
            choose_split(node.lo_num, node.hi_num, node.shift, result.min_exp);
        if (sign_at(f, split.mid, split.shift) == 0) {
            // exact dyadic root: record, deflate, start over on the quotient
            Int num = split.mid;
            unsigned shift = split.shift;
            if (num == 0)
                shift = 0;
            else
                while (shift > 0 && (num & 1) == 0) {
                    num >>= 1;
                    --shift;
                }
            result.exact_roots.push_back({num, shift});
            // divide by (2^shift * x - num), primitive since num is odd or shift 0
            IntPoly divisor = {-num, Int(1) << shift};
            f = primitive(divide_exact(f, divisor));
            result.intervals.clear(); // re-derived against the deflated polynomial
            goto restart;
        }
        stack.push_back({std::move(split.lo), split.mid, split.shift});
        stack.push_back({std::move(split.mid), std::move(split.hi), split.shift});
    }
    // deepest-first produced arbitrary order; sort intervals left to right
    std::sort(result.intervals.begin(), result.intervals.end(),
              [](const Isolation& a, const Isolation& b) {
                  return a.lo.to_bigfloat() < b.lo.to_bigfloat();
              });
    return result;
}

} // namespace detail

/// One located real root.
struct RootEstimate {
    BigFloat value;
    BigFloat error_bound;     ///< |value - exact root| <= error_bound; 0 for exact hits
    std::size_t multiplicity; ///< as a root of the analyzed polynomial
};

struct SpectrumEstimate {
    std::vector<RootEstimate> roots; ///< ascending by value; multiplicities sum to the degree
    BigFloat dominant_modulus;       ///< largest |root|
    bool has_unit_eigenvalue;        ///< decided exactly from the value of the polynomial at 1

    std::size_t root_count() const {
        std::size_t n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

/// Locates every root of a characteristic polynomial to relative accuracy
/// `tol` by exact real-root isolation (Sturm) and exact-sign bisection.
///
/// The accuracy contract is relative: each estimate satisfies
/// |value - root| <= tol * |root|, which for roots of modulus <= 1 is also an
/// absolute bound. Nothing here assumes the roots are real: if the isolation
/// accounts for fewer roots (with multiplicity) than the degree, the
/// remainder are a complex conjugate ensemble this real-only method cannot
/// locate, and the function refuses with an error naming the polynomial
/// rather than return a partial spectrum.
inline SpectrumEstimate estimate_roots(const CharPolynomial& p, const BigFloat& tol = BigFloat("1e-8")) {
    if (!(tol > 0) || tol >= 1)
        throw std::invalid_argument("estimate_roots: tolerance must be in (0, 1)");
    if (tol < BigFloat("1e-70"))
        throw std::invalid_argument("estimate_roots: tolerance below representable resolution (1e-70)");

    SpectrumEstimate out;
    out.has_unit_eigenvalue = p.eval(1) == 0;

    detail::IntPoly f(p.coeffs().begin(), p.coeffs().end());

    // strip zero roots exactly
    std::size_t zero_mult = 0;
    while (zero_mult < f.size() && f[zero_mult] == 0) ++zero_mult;
    if (zero_mult > 0) {
        f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(zero_mult));
        out.roots.push_back({BigFloat(0), BigFloat(0), zero_mult});
    }

    for (auto& [factor, mult] : detail::squarefree_decomposition(std::move(f))) {
        detail::IsolationResult iso = detail::isolate_real_roots(factor);
        for (const detail::Dyadic& r : iso.exact_roots)
            out.roots.push_back({r.to_bigfloat(), BigFloat(0), mult});
        for (const detail::Isolation& interval : iso.intervals) {
            // bisection on (lo, hi): the bracketed signs are opposite because
            // the factor is squarefree and the interval holds a single root
            Int lo = interval.lo.num, hi = interval.hi.num;
            unsigned shift = interval.lo.shift;
            const int lo_sign = detail::sign_at(factor, lo, shift);
            bool exact = false;
            constexpr unsigned kMaxSteps = 500000;
            unsigned step = 0;
            for (;; ++step) {
                if (step > kMaxSteps)
                    throw std::runtime_error("estimate_roots: bisection did not converge for " +
                                             p.to_string());
                // relative width test; skip while the interval still straddles 0
                if ((lo > 0) == (hi > 0) && lo != 0 && hi != 0) {
                    const BigFloat width = boost::multiprecision::ldexp(
                        BigFloat(hi - lo), -static_cast<int>(shift));
                    const BigFloat mag = boost::multiprecision::ldexp(
                        BigFloat(boost::multiprecision::abs(lo < 0 ? hi : lo)),
                        -static_cast<int>(shift));
                    if (width <= tol * mag) break;
                }
                detail::SplitChoice split = detail::choose_split(lo, hi, shift, iso.min_exp);
                shift = split.shift;
                const int mid_sign = detail::sign_at(factor, split.mid, shift);
                if (mid_sign == 0) {
                    lo = hi = split.mid;
                    exact = true;
                    break;
                }
                if (mid_sign == lo_sign) {
                    lo = std::move(split.mid);
                    hi = std::move(split.hi);
                } else {
                    lo = std::move(split.lo);
                    hi = std::move(split.mid);
                }
            }
            const BigFloat lo_bf = detail::Dyadic{lo, shift}.to_bigfloat();
            const BigFloat hi_bf = detail::Dyadic{hi, shift}.to_bigfloat();
            out.roots.push_back({(lo_bf + hi_bf) / 2,
                                 exact ? BigFloat(0) : (hi_bf - lo_bf) / 2, mult});
        }
    }

    if (out.root_count() != p.degree())
        throw std::runtime_error(
            "estimate_roots: polynomial has non-real roots, which this real-only method cannot "
            "locate: " + p.to_string());

    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootEstimate& a, const RootEstimate& b) { return a.value < b.value; });
    out.dominant_modulus = 0;
    for (const auto& r : out.roots) {
        BigFloat m = boost::multiprecision::abs(r.value);
        if (m > out.dominant_modulus) out.dominant_modulus = m;
    }
    return out;
}

/// Outcome of the eigenvalue-based chaos criterion: no eigenvalue equal to 1
/// and at least one eigenvalue of modulus above 1. The further condition on
/// orbits (not asymptotically periodic) concerns irrational starting points
/// of the continuous map and is reported as not evaluated here. The cited
/// textbook phrases the criterion through Lyapunov numbers; this record
/// implements the eigenvalue form as stated.
struct ChaosVerdict {
    Int char_poly_at_one;            ///< exact integer value of the polynomial at 1
    bool unit_eigenvalue;            ///< char_poly_at_one == 0
    BigFloat dominant_modulus;
    bool dominant_exceeds_one;       ///< decided with the estimation error margin
    bool chaotic;                    ///< !unit_eigenvalue && dominant_exceeds_one
    static constexpr const char* asymptotic_periodicity = "not evaluated";
};

inline ChaosVerdict chaos_check(const ExactMatrix& a) {
    const CharPolynomial p = char_poly(a);
    const SpectrumEstimate spectrum = estimate_roots(p);
    ChaosVerdict v{};
    v.char_poly_at_one = p.eval(1);
    v.unit_eigenvalue = v.char_poly_at_one == 0;
    v.dominant_modulus = spectrum.dominant_modulus;
    v.dominant_exceeds_one = false;
    for (const auto& r : spectrum.roots)
        if (boost::multiprecision::abs(r.value) - r.error_bound > 1) v.dominant_exceeds_one = true;
    v.chaotic = !v.unit_eigenvalue && v.dominant_exceeds_one;
    return v;
}

struct TrendEntry {
    std::size_t dimension;
    BigFloat dominant_modulus;
};

struct TrendReport {
    std::vector<TrendEntry> entries; ///< ascending dimension, 2..n_max
    bool strictly_increasing;        ///< observed over the computed range; a report, not a theorem
};

/// Dominant eigenvalue of the n-dimensional map for n = 2..n_max. The
/// monotone growth of these values is a conjecture; this function reports
/// what it computed and never asserts beyond the tested range.
inline TrendReport dominant_trend(std::size_t n_max, std::size_t practical_cap = 8) {
    if (n_max < 2) throw std::invalid_argument("dominant_trend: n_max must be >= 2");
    if (n_max > practical_cap)
        throw std::invalid_argument("dominant_trend: n_max " + std::to_string(n_max) +
                                    " exceeds practical cap " + std::to_string(practical_cap));
    TrendReport report;
    report.strictly_increasing = true;
    for (std::size_t n = 2; n <= n_max; ++n) {
        // tighter than the default root tolerance so every displayed digit
        // of the report is solid
        const SpectrumEstimate s = estimate_roots(char_poly(build_dcm(n)), BigFloat("1e-16"));
        if (!report.entries.empty() &&
            s.dominant_modulus <= report.entries.back().dominant_modulus)
            report.strictly_increasing = false;
        report.entries.push_back({n, s.dominant_modulus});
    }
    return report;
}

} // namespace catmap
