#pragma once

// Dimension estimates and exclusion tables for the classification sweep.
//
// For a Siegel domain of the second kind with cone rank k in C^n (so
// m = n - k), the graded decomposition bounds the automorphism dimension d:
//
//   d <= 2k + 4m + s + dim g(Omega)              (estim2)
//     <= 2k + 4m + m^2 + dim g(Omega)            (estim3, since s <= m^2)
//     <= n^2 + 4n + 1 + (3/2)k^2 - (2n + 5/2)k   (estim4, dim g(Omega) <=
//                                                 k(k-1)/2 + 1 for any cone)
//
// because dim g_1 <= dim g_{-1} = k, dim g_{1/2} <= dim g_{-1/2} = 2m, and
// dim g_0 = s + (dimension of the extendable cone subalgebra) <= s + dim g.
// estim4 depends only on (n, k), so a target value t with estim4 < t rules
// the pair (n, k) out without looking at any particular domain; the
// exclusion table enumerates exactly those pairs, with a convexity
// certificate extending the finite sweep to every n beyond the cap.
//
// All evaluations are exact rational arithmetic: the quadratics involved
// have half-integer coefficients and their sign at integer arguments is
// decided without floating point.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "siegel/cones.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// The three upper bounds for a domain with the given data, plus the generic
// cone-algebra bound used by the last one.
struct BoundReport {
    std::size_t n = 0;
    std::size_t k = 0;
    Rational gest_bound;  // k(k-1)/2 + 1 >= dim g(Omega) for every rank-k cone
    Rational estim2;
    Rational estim3;
    Rational estim4;

    // Whether a domain with these data could still have dimension `target`.
    bool consistent_with(std::size_t target) const {
        const Rational t(target);
        return t <= estim2 && t <= estim3 && t <= estim4;
    }
};

inline BoundReport bound_chain(std::size_t n, std::size_t k, std::size_t s, std::size_t dim_g_omega) {
    if (k < 1 || k > n) throw std::invalid_argument("bound_chain: need 1 <= k <= n");
    const std::size_t m = n - k;
    const Rational rn(n), rk(k);
    BoundReport out;
    out.n = n;
    out.k = k;
    out.gest_bound = Rational(cone_algebra_dim_bound(k));
    out.estim2 = Rational(2 * k + 4 * m + s + dim_g_omega);
    out.estim3 = Rational(2 * k + 4 * m + m * m + dim_g_omega);
    out.estim4 = make_rational(3, 2) * rk * rk - rk * (2 * rn + make_rational(5, 2)) + rn * rn + 4 * rn + 1;
    return out;
}

// phi_{n,offset}(k) = estim4(n, k) - (n^2 - offset).  The pair (n, k) is
// excluded for target dimension n^2 - offset exactly when this is negative.
inline Rational exclusion_phi(std::size_t target_offset, std::size_t n, std::size_t k) {
    const Rational rn(n), rk(k);
    return make_rational(3, 2) * rk * rk - rk * (2 * rn + make_rational(5, 2)) + 4 * rn + 1 +
           Rational(target_offset);
}

// The quadratic phi_n(t) = (3/2) t^2 - linear * t + constant for one value
// of n; its real roots, when the discriminant is nonnegative, are
// t = (linear ± sqrt(discriminant)) / 3, and the excluded k are the
// integers strictly between them.
struct ExclusionQuadratic {
    std::size_t n = 0;
    Rational linear;        // 2n + 5/2
    Rational constant;      // 4n + 1 + offset
    Rational discriminant;  // linear^2 - 6 * constant
};

struct ExclusionTable {
    std::size_t target_offset = 0;
    std::size_t ncap = 0;
    std::vector<std::pair<std::size_t, std::size_t>> excluded;  // (n, k), lexicographic
    std::vector<ExclusionQuadratic> quadratics;                 // one per n in [3, ncap]

    bool is_excluded(std::size_t n, std::size_t k) const {
        return std::binary_search(excluded.begin(), excluded.end(), std::make_pair(n, k));
    }
};

inline ExclusionTable exclusion_table(std::size_t target_offset, std::size_t ncap = 64) {
    if (target_offset != 7 && target_offset != 8)
        throw std::invalid_argument("exclusion_table: target offset must be 7 or 8");
    ExclusionTable out;
    out.target_offset = target_offset;
    out.ncap = ncap;
    for (std::size_t n = 3; n <= ncap; ++n) {
        ExclusionQuadratic q;
        q.n = n;
        q.linear = 2 * Rational(n) + make_rational(5, 2);
        q.constant = 4 * Rational(n) + 1 + Rational(target_offset);
        q.discriminant = q.linear * q.linear - 6 * q.constant;
        out.quadratics.push_back(q);
        for (std::size_t k = 1; k <= n; ++k)
            if (exclusion_phi(target_offset, n, k) < 0) out.excluded.emplace_back(n, k);
    }
    return out;
}

// Certificate that the excluded region is stable beyond any finite cap.
// phi_n is convex in k (leading coefficient 3/2 > 0), so it is negative on
// the whole integer range [4, n] once both endpoint values are, and the
// endpoint values
//
//   phi_n(3) = -2n + 7 + offset,
//   phi_n(4) = -4n + 15 + offset,
//   phi_n(n) = -n^2/2 + 3n/2 + 1 + offset
//
// are strictly decreasing in n for n >= 2.  The fields record the smallest
// n at which each endpoint value turns (and therefore stays) negative; for
// every n past the cap the excluded rows are k = 3 (once n >= k3) together
// with all 4 <= k <= n (once n >= max(k4, kn)).
struct TailCertificate {
    std::size_t target_offset = 0;
    std::size_t first_negative_k3 = 0;
    std::size_t first_negative_k4 = 0;
    std::size_t first_negative_kn = 0;
};

inline TailCertificate exclusion_tail_certificate(std::size_t target_offset) {
    if (target_offset != 7 && target_offset != 8)
        throw std::invalid_argument("exclusion_tail_certificate: target offset must be 7 or 8");
    const auto first_negative = [&](auto value_at) {
        for (std::size_t n = 3;; ++n)
            if (value_at(n) < 0) return n;
    };
    TailCertificate out;
    out.target_offset = target_offset;
    out.first_negative_k3 = first_negative([&](std::size_t n) { return exclusion_phi(target_offset, n, 3); });
    out.first_negative_k4 = first_negative([&](std::size_t n) { return exclusion_phi(target_offset, n, 4); });
    out.first_negative_kn = first_negative([&](std::size_t n) { return exclusion_phi(target_offset, n, n); });
    return out;
}

// All splittings B^l x B^{n-l}, 1 <= l <= n-1, whose automorphism dimension
//   l^2 + 2l + (n-l)^2 + 2(n-l) = 2l^2 - 2nl + n^2 + 2n
// equals the target.  Symmetric solutions l and n-l are both reported.
inline std::vector<std::size_t> ball_product_solver(std::size_t n, std::size_t target) {
    if (n < 2) throw std::invalid_argument("ball_product_solver: need n >= 2");
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l < n; ++l) {
        const long long ll = static_cast<long long>(l), nn = static_cast<long long>(n);
        const long long d = 2 * ll * ll - 2 * nn * ll + nn * nn + 2 * nn;
        if (d == static_cast<long long>(target)) out.push_back(l);
    }
    return out;
}

// Recognition threshold for Lorentz cones: every open convex cone of rank
// k >= 3 whose linear automorphism algebra has dimension strictly greater
// than (k-2)(k-3)/2 + k + 1 is linearly equivalent to the Lorentz cone
// Lambda_k.  The Lorentz algebra itself has dimension 1 + k(k-1)/2, which
// exceeds the threshold by k - 3.
struct LorentzThreshold {
    std::size_t threshold = 0;
    std::size_t lorentz_dim = 0;
};

inline LorentzThreshold lorentz_threshold(std::size_t k) {
    if (k < 3) throw std::invalid_argument("lorentz_threshold: need k >= 3");
    return {(k - 2) * (k - 3) / 2 + k + 1, 1 + k * (k - 1) / 2};
}

}  // namespace siegel
