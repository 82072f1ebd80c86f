#pragma once

// Graded decomposition of the automorphism algebra of a Siegel domain.
//
// A Siegel domain of the second kind is determined by an open convex cone
// Omega in R^k and an Omega-Hermitian form H on C^m; the domain lives in
// C^n with n = k + m.  The Lie algebra of its holomorphic automorphism group
// carries a grading
//
//     g = g_{-1} + g_{-1/2} + g_0 + g_{1/2} + g_1
//
// with dim g_{-1} = k (real translations) and dim g_{-1/2} = 2m (complex
// translations).  The remaining three components are cut out by finite
// systems of linear equations over Q(i) in the coefficients of the candidate
// vector fields, which this header assembles and solves exactly:
//
//   g_0:    pairs (A, B) with A in g(Omega) acting on z, B in gl(m, C)
//           acting on w, subject to  A H(w, w') = H(Bw, w') + H(w, Bw').
//   g_{1/2}: fields a(w) d/dz + b(z) d/dw with a C-bilinear-data map
//           Phi: C^k -> C^m and a symmetric form c on C^m, subject to the
//           cone-membership and compatibility equations below.
//   g_1:    fields with a real symmetric form a on R^k and a map
//           b: C^k x C^m -> C^m, subject to the four equation families
//           (idents), (i)-(iii) below.
//
// Every computation is a nullspace dimension (or the dimension of a
// coordinate projection of a nullspace, when auxiliary cone-membership
// coefficients are involved), so all results are exact integers.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "siegel/cones.hpp"
#include "siegel/hermitian.hpp"
#include "siegel/linear_system.hpp"
#include "siegel/matrix.hpp"

namespace siegel {

// A Siegel domain of the second kind, given by the ambient dimension n, the
// cone rank k, the cone itself, and the Omega-Hermitian form (k components,
// each an (n-k) x (n-k) Hermitian matrix).
struct SiegelDomainSpec {
    std::size_t n = 0;
    std::size_t k = 0;
    ConeSpec cone;
    HermitianForm h;

    static SiegelDomainSpec make(std::size_t n, std::size_t k, ConeSpec cone, HermitianForm h) {
        if (k < 1 || k > n) throw std::invalid_argument("SiegelDomainSpec: need 1 <= k <= n");
        if (cone.ambient_dim() != k) throw std::invalid_argument("SiegelDomainSpec: cone lives in wrong dimension");
        if (h.k != k) throw std::invalid_argument("SiegelDomainSpec: form has wrong number of components");
        if (h.m != n - k) throw std::invalid_argument("SiegelDomainSpec: form acts on wrong w-dimension");
        return {n, k, std::move(cone), std::move(h)};
    }

    std::size_t m() const { return n - k; }
};

// Dimensions attached to the pair space
//     {(A, B) : A in g(Omega), A H = H(B., .) + H(., B.)}.
// dim_pairs is the dimension of the whole space (= dim g_0 of the domain),
// dim_lin is the dimension of the kernel of the projection (A, B) -> A,
// i.e. the B with H(Bw, w') + H(w, Bw') = 0, and dim_image is the dimension
// of the image of that projection, the subalgebra of g(Omega) that extends
// to an automorphism of the pair (Omega, H).
struct AssocPairSpace {
    std::size_t dim_pairs = 0;
    std::size_t dim_lin = 0;
    std::size_t dim_image = 0;
};

namespace detail {

struct AssocSystem {
    SystemBuilder sys;
    std::vector<std::size_t> alpha_cols;  // coordinates of A in the g(Omega) basis
};

// Equations for the pair space: writing A = sum_t alpha_t B_t in the basis
// of g(Omega), the condition A H = H(B., .) + H(., B.) reads, entrywise in
// (p, q) for each component c,
//
//   sum_t alpha_t sum_j (B_t)_{cj} (H_j)_{pq}
//     - sum_u conj(b_{up}) (H_c)_{uq} - sum_u (H_c)_{pu} b_{uq} = 0,
//
// since H(Bw, w')_c = (Bw)* H_c w' = w* (B* H_c) w' and similarly on the
// right slot.  Only m > 0 calls this; for m = 0 the pair space is g(Omega).
inline AssocSystem build_assoc_system(const SiegelDomainSpec& spec, const ConeAlgebra& alg) {
    const std::size_t k = spec.k, m = spec.m();
    const auto& H = spec.h.components;

    AssocSystem out;
    auto& sys = out.sys;
    for (std::size_t t = 0; t < alg.basis.size(); ++t) out.alpha_cols.push_back(sys.add_real_var());
    std::vector<ComplexVar> b(m * m);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) b[bvar(m, p, q)] = sys.add_complex_var();

    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q) {
                ComplexLinExpr e;
                for (std::size_t t = 0; t < alg.basis.size(); ++t) {
                    GaussianRational coef;
                    for (std::size_t j = 0; j < k; ++j)
                        coef += GaussianRational(alg.basis[t](c, j)) * H[j](p, q);
                    e.add_times_real(coef, out.alpha_cols[t]);
                }
                for (std::size_t u = 0; u < m; ++u) {
                    e.add_times_complex(-H[c](u, q), b[bvar(m, u, p)], /*conjugated=*/true);
                    e.add_times_complex(-H[c](p, u), b[bvar(m, u, q)], /*conjugated=*/false);
                }
                sys.require_zero(e);
            }
    return out;
}

// Symmetric pair indexing for unordered index pairs in [0, d).
struct PairIndex {
    std::vector<std::vector<std::size_t>> at;
    std::size_t count = 0;

    explicit PairIndex(std::size_t d) : at(d, std::vector<std::size_t>(d, 0)) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                at[i][j] = at[j][i] = count;
                ++count;
            }
    }
};

}  // namespace detail

inline AssocPairSpace assoc_pair_space(const SiegelDomainSpec& spec) {
    const ConeAlgebra alg = lie_algebra_basis(spec.cone);
    if (spec.m() == 0) return {alg.basis.size(), 0, alg.basis.size()};
    auto as = detail::build_assoc_system(spec, alg);
    AssocPairSpace out;
    out.dim_pairs = as.sys.nullspace().dim();
    out.dim_lin = compute_s(spec.h);
    out.dim_image = out.dim_pairs - out.dim_lin;
    return out;
}

// Dimension of g_{1/2}.  A candidate field is determined by a C-linear map
// Phi: C^k -> C^m (columns Phi(e_j) with entries phi_{qj}) together with a
// symmetric C-bilinear form c on C^m with values in C^m (coefficients
// c_{q;ar} = c_{q;ra}).  The constraints are:
//
//  (membership)  for every w in C^m, the real k x k matrix
//                    M_w(c, j) = Im H(w, Phi(e_j))_c
//                  lies in g(Omega); by real-linearity in w it is enough to
//                  impose this for w = e_a and w = i e_a, a < m, where
//                    M_{e_a}(c, j)  =  Im sum_q (H_c)_{aq} phi_{qj},
//                    M_{i e_a}(c, j) = -Re sum_q (H_c)_{aq} phi_{qj}.
//
//  (compat)      matching coefficients of conj(w_q) w'_a w'_r in the
//                identity relating c to Phi gives, for every p < k, i < m
//                and unordered pair a <= r,
//                    sum_q (H_p)_{iq} c_{q;ar} * (a != r ? 2 : 1)
//                  - 2i sum_{q,j} conj(phi_{qj}) [ (H_p)_{qr} (H_j)_{ia}
//                        + (a != r ? (H_p)_{qa} (H_j)_{ir} : 0) ]  =  0.
//
// The result is the dimension of the projection of the solution space onto
// the (phi, c) coordinates (the membership constraints carry auxiliary
// span coefficients).
inline std::size_t g_half_dim(const SiegelDomainSpec& spec) {
    const std::size_t k = spec.k, m = spec.m();
    if (m == 0) return 0;
    const ConeAlgebra alg = lie_algebra_basis(spec.cone);
    const auto& H = spec.h.components;

    SystemBuilder sys;
    std::vector<std::size_t> main_cols;

    std::vector<ComplexVar> phi(m * k);  // phi[q*k + j] = phi_{qj}
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t j = 0; j < k; ++j) {
            phi[q * k + j] = sys.add_complex_var();
            main_cols.push_back(phi[q * k + j].re_col);
            main_cols.push_back(phi[q * k + j].im_col);
        }

    const detail::PairIndex pr(m);
    std::vector<ComplexVar> cf(m * pr.count);  // cf[q*count + pr.at[a][r]] = c_{q;ar}
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t t = 0; t < pr.count; ++t) {
            cf[q * pr.count + t] = sys.add_complex_var();
            main_cols.push_back(cf[q * pr.count + t].re_col);
            main_cols.push_back(cf[q * pr.count + t].im_col);
        }

    for (std::size_t a = 0; a < m; ++a) {
        std::vector<std::vector<RealLinExpr>> ent_im(k, std::vector<RealLinExpr>(k));
        std::vector<std::vector<RealLinExpr>> ent_negre(k, std::vector<RealLinExpr>(k));
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t j = 0; j < k; ++j) {
                ComplexLinExpr val;
                for (std::size_t q = 0; q < m; ++q)
                    val.add_times_complex(H[c](a, q), phi[q * k + j], /*conjugated=*/false);
                ent_im[c][j] = val.im;
                ent_negre[c][j] = val.re.negated();
            }
        require_in_span(sys, ent_im, alg.basis);
        require_in_span(sys, ent_negre, alg.basis);
    }

    const GaussianRational two_i(Rational(0), Rational(2));
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t r = a; r < m; ++r) {
                    ComplexLinExpr e;
                    const GaussianRational mult{Rational(a != r ? 2 : 1)};
                    for (std::size_t q = 0; q < m; ++q)
                        e.add_times_complex(mult * H[p](i, q), cf[q * pr.count + pr.at[a][r]],
                                            /*conjugated=*/false);
                    for (std::size_t q = 0; q < m; ++q)
                        for (std::size_t j = 0; j < k; ++j) {
                            GaussianRational bracket = H[p](q, r) * H[j](i, a);
                            if (a != r) bracket += H[p](q, a) * H[j](i, r);
                            e.add_times_complex(-(two_i * bracket), phi[q * k + j], /*conjugated=*/true);
                        }
                    sys.require_zero(e);
                }

    return projected_dim(sys.nullspace(), main_cols);
}

// Dimension of g_1.  A candidate field is determined by a real symmetric
// form a on R^k with values in R^k (coefficients a_{p;ij} = a_{p;ji}) and a
// map b: C^k x C^m -> C^m, C-linear in the first slot (coefficients
// b_{q;c,l} = b(e_c, e_l)_q).  The constraint families are:
//
//  (idents)  for every c < k the matrix (p, j) -> a_{p;cj} lies in g(Omega);
//
//  (i)       for every c, p < k and r, t < m,
//              sum_j a_{p;cj} (H_j)_{rt}
//                - 1/2 sum_u conj(b_{u;c,r}) (H_p)_{ut}
//                - 1/2 sum_u (H_p)_{ru} b_{u;c,t}  =  0,
//            together with the trace normalization
//              sum_q Im b_{q;c,q} = 0  for every c;
//
//  (ii)      for every l, s < m the matrices
//              (p, j) -> Im sum_u (H_p)_{su} b_{u;j,l}      (from w = e_l)
//              (p, j) -> Re sum_u (H_p)_{su} b_{u;j,l}      (from w = i e_l)
//            lie in g(Omega) (the remaining sign combinations repeat these);
//
//  (iii)     matching coefficients of conj(w_al) conj(w'_be) w''_ga w''_de
//            in H(w, b(H(w', w''), w'')) = H(b(H(w'', w), w'), w'') gives,
//            for every p < k, al, be < m and unordered pair ga <= de,
//              sum_{q,j} (H_p)_{al,q} [ b_{q;j,de} (H_j)_{be,ga}
//                    + (ga != de ? b_{q;j,ga} (H_j)_{be,de} : 0) ]
//            - sum_{q,j} conj(b_{q;j,be}) [ (H_j)_{al,ga} (H_p)_{q,de}
//                    + (ga != de ? (H_j)_{al,de} (H_p)_{q,ga} : 0) ]  =  0.
//
// The result is the dimension of the projection onto the (a, b) coordinates.
inline std::size_t g_one_dim(const SiegelDomainSpec& spec) {
    const std::size_t k = spec.k, m = spec.m();
    const ConeAlgebra alg = lie_algebra_basis(spec.cone);
    const auto& H = spec.h.components;

    SystemBuilder sys;
    std::vector<std::size_t> main_cols;

    const detail::PairIndex pk(k);
    std::vector<std::size_t> av(k * pk.count);  // av[p*count + pk.at[i][j]] = a_{p;ij}
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t t = 0; t < pk.count; ++t) {
            av[p * pk.count + t] = sys.add_real_var();
            main_cols.push_back(av[p * pk.count + t]);
        }

    std::vector<ComplexVar> bv(m * k * m);  // bv[(q*k + c)*m + l] = b_{q;c,l}
    for (std::size_t q = 0; q < m; ++q)
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t l = 0; l < m; ++l) {
                auto& var = bv[(q * k + c) * m + l];
                var = sys.add_complex_var();
                main_cols.push_back(var.re_col);
                main_cols.push_back(var.im_col);
            }

    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<RealLinExpr>> entries(k, std::vector<RealLinExpr>(k));
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t j = 0; j < k; ++j) entries[p][j].add(av[p * pk.count + pk.at[c][j]], Rational(1));
        require_in_span(sys, entries, alg.basis);
    }

    const GaussianRational half{make_rational(1, 2)};
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t t = 0; t < m; ++t) {
                    ComplexLinExpr e;
                    for (std::size_t j = 0; j < k; ++j) e.add_times_real(H[j](r, t), av[p * pk.count + pk.at[c][j]]);
                    for (std::size_t u = 0; u < m; ++u) {
                        e.add_times_complex(-(half * H[p](u, t)), bv[(u * k + c) * m + r], /*conjugated=*/true);
                        e.add_times_complex(-(half * H[p](r, u)), bv[(u * k + c) * m + t], /*conjugated=*/false);
                    }
                    sys.require_zero(e);
                }

    for (std::size_t c = 0; c < k && m > 0; ++c) {
        RealLinExpr tr;
        for (std::size_t q = 0; q < m; ++q) tr.add(bv[(q * k + c) * m + q].im_col, Rational(1));
        sys.require_zero(tr);
    }

    for (std::size_t l = 0; l < m; ++l)
        for (std::size_t s = 0; s < m; ++s) {
            std::vector<std::vector<RealLinExpr>> ent_im(k, std::vector<RealLinExpr>(k));
            std::vector<std::vector<RealLinExpr>> ent_re(k, std::vector<RealLinExpr>(k));
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t j = 0; j < k; ++j) {
                    ComplexLinExpr val;
                    for (std::size_t u = 0; u < m; ++u)
                        val.add_times_complex(H[p](s, u), bv[(u * k + j) * m + l], /*conjugated=*/false);
                    ent_im[p][j] = val.im;
                    ent_re[p][j] = val.re;
                }
            require_in_span(sys, ent_im, alg.basis);
            require_in_span(sys, ent_re, alg.basis);
        }

    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t al = 0; al < m; ++al)
            for (std::size_t be = 0; be < m; ++be)
                for (std::size_t ga = 0; ga < m; ++ga)
                    for (std::size_t de = ga; de < m; ++de) {
                        ComplexLinExpr e;
                        for (std::size_t q = 0; q < m; ++q)
                            for (std::size_t j = 0; j < k; ++j) {
                                e.add_times_complex(H[p](al, q) * H[j](be, ga), bv[(q * k + j) * m + de],
                                                    /*conjugated=*/false);
                                if (ga != de)
                                    e.add_times_complex(H[p](al, q) * H[j](be, de), bv[(q * k + j) * m + ga],
                                                        /*conjugated=*/false);
                                GaussianRational coef = H[j](al, ga) * H[p](q, de);
                                if (ga != de) coef += H[j](al, de) * H[p](q, ga);
                                e.add_times_complex(-coef, bv[(q * k + j) * m + be], /*conjugated=*/true);
                            }
                        sys.require_zero(e);
                    }

    return projected_dim(sys.nullspace(), main_cols);
}

// Dimensions of all five graded components and their sum d, the dimension of
// the full holomorphic automorphism group of the domain.
struct GradedDims {
    std::size_t g_m1 = 0;     // g_{-1}: real translations, = k
    std::size_t g_mhalf = 0;  // g_{-1/2}: complex translations, = 2m
    std::size_t g_0 = 0;
    std::size_t g_half = 0;
    std::size_t g_1 = 0;
    std::size_t d = 0;

    bool operator==(const GradedDims&) const = default;
};

inline GradedDims graded_dims(const SiegelDomainSpec& spec) {
    GradedDims out;
    out.g_m1 = spec.k;
    out.g_mhalf = 2 * spec.m();
    out.g_0 = assoc_pair_space(spec).dim_pairs;
    out.g_half = g_half_dim(spec);
    out.g_1 = g_one_dim(spec);
    out.d = out.g_m1 + out.g_mhalf + out.g_0 + out.g_half + out.g_1;
    return out;
}

// Dimension of the tangent space at x to the orbit of x under the group of
// cone automorphisms extending to the domain: the span of {A x} with A
// running over the image of the pair-space projection.  The domain is
// affine-homogeneous iff this equals k at every interior point; a value < k
// certifies non-homogeneity.  Requires x in the open cone.
inline std::size_t orbit_rank(const SiegelDomainSpec& spec, const std::vector<Rational>& x) {
    if (classify_point(spec.cone, x) != PointClass::Interior)
        throw std::invalid_argument("orbit_rank: point is not in the open cone");
    const ConeAlgebra alg = lie_algebra_basis(spec.cone);
    const std::size_t k = spec.k;

    std::vector<MatR> gens;
    if (spec.m() == 0) {
        gens = alg.basis;
    } else {
        auto as = detail::build_assoc_system(spec, alg);
        const SolutionSpace ns = as.sys.nullspace();
        for (const auto& v : ns.basis) {
            MatR a(k, k);
            for (std::size_t t = 0; t < alg.basis.size(); ++t)
                a = a + v(as.alpha_cols[t], 0) * alg.basis[t];
            gens.push_back(std::move(a));
        }
    }

    MatR stacked(gens.size(), k);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t r = 0; r < k; ++r) {
            Rational acc(0);
            for (std::size_t c = 0; c < k; ++c) acc += gens[i](r, c) * x[c];
            stacked(i, r) = acc;
        }
    return rank(stacked);
}

// Whether the pair (A, B) is an automorphism datum for H at the group level:
// A H(w, w') = H(Bw, Bw'), i.e. sum_j A_{cj} H_j = B* H_c B for every c.
inline bool check_assoc(const MatR& a, const MatC& b, const HermitianForm& h) {
    if (a.rows() != h.k || a.cols() != h.k) throw std::invalid_argument("check_assoc: A must be k x k");
    if (b.rows() != h.m || b.cols() != h.m) throw std::invalid_argument("check_assoc: B must be m x m");
    const MatC bstar = conj_transpose(b);
    for (std::size_t c = 0; c < h.k; ++c) {
        MatC lhs(h.m, h.m);
        for (std::size_t j = 0; j < h.k; ++j) lhs = lhs + GaussianRational(a(c, j)) * h.components[j];
        if (!(lhs == bstar * h.components[c] * b)) return false;
    }
    return true;
}

}  // namespace siegel
