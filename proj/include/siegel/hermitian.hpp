#pragma once

// Omega-Hermitian forms H = (H_1, ..., H_k) on C^m and the invariants the
// classification extracts from them:
//   * the space L of matrices that are simultaneously skew-Hermitian with
//     respect to every component, s = dim L;
//   * the centraliser dimension r^2 - 2p of a single Hermitian matrix
//     (p = number of unordered pairs of distinct eigenvalues);
//   * eigenvalue multiplicity profiles, computed without root-finding via
//     square-free decomposition of the characteristic polynomial.

#include <siegel/cones.hpp>
#include <siegel/matrix.hpp>
#include <siegel/polynomial.hpp>
#include <siegel/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

struct HermitianForm {
    std::size_t k = 0;            // number of components, = rank of the cone
    std::size_t m = 0;            // dimension of the w-space, = n - k (0 for tube domains)
    std::vector<MatC> components; // k matrices of size m x m

    static HermitianForm make(std::size_t k, std::size_t m, std::vector<MatC> comps) {
        if (comps.size() != k) throw std::invalid_argument("HermitianForm: expected k components");
        for (const auto& c : comps) {
            if (c.rows() != m || c.cols() != m)
                throw std::invalid_argument("HermitianForm: component is not m x m");
            if (!is_hermitian(c)) throw std::invalid_argument("HermitianForm: component is not Hermitian");
        }
        return {k, m, std::move(comps)};
    }

    // H(w, w') component-wise: (H_i(w, w'))_i with H_i(w, w') = w* H_i w'.
    std::vector<GaussianRational> eval(const std::vector<GaussianRational>& w,
                                       const std::vector<GaussianRational>& wp) const {
        if (w.size() != m || wp.size() != m) throw std::invalid_argument("HermitianForm: vector length != m");
        std::vector<GaussianRational> out(k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    out[i] += w[a].conj() * components[i](a, b) * wp[b];
        return out;
    }

    // H(w, w) is real; returns it as a rational k-vector.
    std::vector<Rational> eval_diag(const std::vector<GaussianRational>& w) const {
        auto v = eval(w, w);
        std::vector<Rational> out(k);
        for (std::size_t i = 0; i < k; ++i) out[i] = v[i].re;  // imaginary part vanishes by hermiticity
        return out;
    }
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks the two defining properties of an Omega-Hermitian form on the given
// data: (a) the designated combination sum_i combo_i H_i is positive
// definite (there must exist one; the caller supplies a witness), and
// (b) H(w,w) lies in the closed cone and is nonzero for each nonzero sample w.
inline ValidationReport validate_omega_hermitian(const HermitianForm& h, const ConeSpec& cone,
                                                 const std::vector<Rational>& combo,
                                                 const std::vector<std::vector<GaussianRational>>& samples) {
    if (combo.size() != h.k) throw std::invalid_argument("validate_omega_hermitian: combo length != k");
    if (cone.ambient_dim() != h.k)
        throw std::invalid_argument("validate_omega_hermitian: cone ambient dimension != k");
    ValidationReport rep;
    if (h.m == 0) return rep;  // tube domain: H = 0, nothing to check

    // (a) positive definiteness via leading principal minors.
    MatC combined(h.m, h.m);
    for (std::size_t i = 0; i < h.k; ++i)
        combined = combined + GaussianRational(combo[i]) * h.components[i];
    for (std::size_t lead = 1; lead <= h.m; ++lead) {
        MatC sub(lead, lead);
        for (std::size_t a = 0; a < lead; ++a)
            for (std::size_t b = 0; b < lead; ++b) sub(a, b) = combined(a, b);
        const GaussianRational det = determinant(sub);
        if (det.im != 0)
            throw std::logic_error("validate_omega_hermitian: non-real principal minor");
        if (det.re <= 0) {
            rep.valid = false;
            rep.violations.push_back("designated combination is not positive definite (leading minor " +
                                     std::to_string(lead) + " is " + to_string(det.re) + ")");
            break;
        }
    }

    // (b) samples.
    for (const auto& w : samples) {
        if (w.size() != h.m) throw std::invalid_argument("validate_omega_hermitian: sample length != m");
        bool wzero = true;
        for (const auto& c : w)
            if (!c.is_zero()) wzero = false;
        if (wzero) throw std::invalid_argument("validate_omega_hermitian: samples must be nonzero");
        const PointClass cls = classify_point(cone, h.eval_diag(w));
        if (cls != PointClass::Interior && cls != PointClass::BoundaryNonzero) {
            rep.valid = false;
            rep.violations.push_back("H(w,w) is " + std::string(to_string(cls)) +
                                     " (must be in the closed cone and nonzero)");
        }
    }
    return rep;
}

namespace detail {

// Variable indexing for an m x m complex matrix unknown B: b_{pq} -> p*m + q.
inline std::size_t bvar(std::size_t m, std::size_t p, std::size_t q) { return p * m + q; }

// Equations (H_i B + B^* H_i)_{pq} = 0 for all i, p, q.
inline std::vector<CEquation> skew_with_respect_to(const std::vector<MatC>& forms, std::size_t m) {
    std::vector<CEquation> sys;
    for (const auto& h : forms)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                CEquation eq;
                for (std::size_t u = 0; u < m; ++u) {
                    if (!h(p, u).is_zero()) eq.terms.push_back(CTerm::plain(h(p, u), bvar(m, u, q)));
                    if (!h(u, q).is_zero()) eq.terms.push_back(CTerm::conjugated(h(u, q), bvar(m, u, p)));
                }
                sys.push_back(std::move(eq));
            }
    return sys;
}

}  // namespace detail

// s = dim L, the real dimension of { B : H_i B + B^* H_i = 0 for all i }.
inline std::size_t compute_s(const HermitianForm& h) {
    if (h.m == 0) return 0;
    const auto sys = detail::skew_with_respect_to(h.components, h.m);
    return nullspace_basis(realify(sys, h.m * h.m)).dim();
}

// dim { B : B + B^* = 0, h B - B h = 0 } for a single Hermitian h; equals
// r^2 - 2p where p counts unordered pairs of distinct eigenvalues.
inline std::size_t centralizer_dim(const MatC& h) {
    if (!is_hermitian(h)) throw std::invalid_argument("centralizer_dim: input is not Hermitian");
    const std::size_t m = h.rows();
    if (m == 0) return 0;
    std::vector<CEquation> sys;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            CEquation skew;  // b_{pq} + conj(b_{qp}) = 0
            skew.terms.push_back(CTerm::plain(GaussianRational(1), detail::bvar(m, p, q)));
            skew.terms.push_back(CTerm::conjugated(GaussianRational(1), detail::bvar(m, q, p)));
            sys.push_back(std::move(skew));
            CEquation comm;  // (hB - Bh)_{pq} = 0
            for (std::size_t u = 0; u < m; ++u) {
                if (!h(p, u).is_zero()) comm.terms.push_back(CTerm::plain(h(p, u), detail::bvar(m, u, q)));
                if (!h(u, q).is_zero()) comm.terms.push_back(CTerm::plain(-h(u, q), detail::bvar(m, p, u)));
            }
            sys.push_back(std::move(comm));
        }
    return nullspace_basis(realify(sys, m * m)).dim();
}

struct MultiplicityProfile {
    std::vector<std::size_t> multiplicities;  // descending, one per distinct eigenvalue

    std::size_t total() const {
        return std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
    }
};

// Eigenvalue multiplicities of a Hermitian matrix with rational entries,
// via Yun square-free decomposition of the characteristic polynomial: the
// factor of multiplicity i is square-free with all-real roots, so it
// contributes deg(f_i) eigenvalues of multiplicity i each.
inline MultiplicityProfile multiplicity_profile(const MatC& h) {
    MultiplicityProfile out;
    if (h.rows() == 0) return out;
    const Poly p = char_poly_hermitian(h);
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        for (int e = 0; e < factor.degree(); ++e) out.multiplicities.push_back(static_cast<std::size_t>(mult));
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    return out;
}

// Number of unordered pairs of distinct eigenvalues, counted with
// multiplicity: p = sum_{i<j} m_i m_j = (r^2 - sum m_i^2) / 2.
inline std::size_t count_pairs(const MultiplicityProfile& profile) {
    std::size_t r = profile.total(), sq = 0;
    for (auto m : profile.multiplicities) sq += m * m;
    return (r * r - sq) / 2;
}

}  // namespace siegel
