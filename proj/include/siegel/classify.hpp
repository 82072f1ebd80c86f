#pragma once

// Case-by-case verification of the two classification sweeps.
//
// Theorem targets: among homogeneous Kobayashi-hyperbolic manifolds of
// complex dimension n with automorphism dimension d, find every domain with
// d = n^2 - 7 (theorem 1) and d = n^2 - 8 (theorem 2).  Every candidate is a
// product of balls and tube domains or a genuinely non-symmetric Siegel
// domain; each case fixes the pair (n, k) (or sweeps k = 2 over all n) and
// either exhibits a domain hitting the target exactly or excludes every
// candidate by one of three mechanisms:
//
//   * exact dimension count   (graded_dims, an integer, != target),
//   * non-homogeneity         (orbit_rank < k: no open orbit),
//   * a-priori bounds         (bound_chain / exclusion_table).
//
// The case drivers below recompute every one of those facts from scratch in
// exact arithmetic and record them as CaseOutcome rows; `ok` reports whether
// all internal consistency checks passed.  Facts imported from the
// literature that are not re-derived here (normal-form classifications up to
// linear equivalence) are recorded as human-readable assumption strings on
// the records that use them.

#include <array>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "siegel/bounds.hpp"
#include "siegel/cones.hpp"
#include "siegel/graded.hpp"
#include "siegel/hermitian.hpp"
#include "siegel/linear_system.hpp"
#include "siegel/matrix.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// ---------------------------------------------------------------------------
// Domain constructors
// ---------------------------------------------------------------------------

namespace detail {

inline HermitianForm zero_form(std::size_t k) {
    return HermitianForm::make(k, 0, std::vector<MatC>(k, MatC(0, 0)));
}

inline SiegelDomainSpec tube_domain(const ConeSpec& cone) {
    const std::size_t k = cone.ambient_dim();
    return SiegelDomainSpec::make(k, k, cone, zero_form(k));
}

// H_c = v_c * Id_m.
inline HermitianForm scalar_profile(const std::vector<Rational>& v, std::size_t m) {
    std::vector<MatC> comps;
    comps.reserve(v.size());
    for (const auto& c : v) {
        MatC h(m, m);
        for (std::size_t i = 0; i < m; ++i) h(i, i) = GaussianRational(c);
        comps.push_back(std::move(h));
    }
    return HermitianForm::make(v.size(), m, comps);
}

inline std::vector<Rational> rvec(std::vector<long long> xs) {
    std::vector<Rational> out;
    out.reserve(xs.size());
    for (long long x : xs) out.push_back(make_rational(x));
    return out;
}

}  // namespace detail

// The product B^{q_1} x ... x B^{q_k} realized as a single Siegel domain:
// cone R_+^k, one w-block of size q_c - 1 per factor, H_c the identity on
// its block.  n = sum q_c, and d must come out as sum (q_c^2 + 2 q_c).
inline SiegelDomainSpec ball_product(const std::vector<std::size_t>& qs) {
    const std::size_t k = qs.size();
    if (k == 0) throw std::invalid_argument("ball_product: need at least one factor");
    std::size_t m = 0;
    for (std::size_t q : qs) {
        if (q == 0) throw std::invalid_argument("ball_product: factors must have dimension >= 1");
        m += q - 1;
    }
    std::vector<MatC> comps(k, MatC(m, m));
    std::size_t off = 0;
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < qs[c] - 1; ++i) comps[c](off + i, off + i) = GaussianRational(1);
        off += qs[c] - 1;
    }
    return SiegelDomainSpec::make(m + k, k, ConeSpec::orthant(k), HermitianForm::make(k, m, comps));
}

// ---------------------------------------------------------------------------
// The classification list
// ---------------------------------------------------------------------------

struct ClassificationEntry {
    std::string item;         // roman label "i" .. "xxiv"
    std::string description;  // what the manifold is
    std::string canonical;    // short product name used for cross-references
    std::size_t n = 0;        // complex dimension (of the representative)
    std::size_t expected_d = 0;
    SiegelDomainSpec realization;
    std::vector<std::string> assumptions;
};

inline std::vector<ClassificationEntry> classification_entries() {
    using detail::tube_domain;
    const std::string rep_note = "parametric family scored at the stated representative dimension";
    std::vector<ClassificationEntry> out;
    auto add = [&](std::string item, std::string description, std::string canonical, std::size_t n,
                   std::size_t d, SiegelDomainSpec spec, std::vector<std::string> assumptions = {}) {
        out.push_back({std::move(item), std::move(description), std::move(canonical), n, d,
                       std::move(spec), std::move(assumptions)});
    };

    add("i", "unit ball B^n, d = n^2 + 2n (representative n = 3)", "B3", 3, 15, ball_product({3}),
        {rep_note});
    add("ii", "B^1 x B^(n-1), d = n^2 + 2 (representative n = 3)", "B1 x B2", 3, 11,
        ball_product({1, 2}), {rep_note});
    add("iii", "B^1 x B^1 x B^1", "B1 x B1 x B1", 3, 9, ball_product({1, 1, 1}));
    add("iv", "B^2 x B^2", "B2 x B2", 4, 16, ball_product({2, 2}));
    add("v", "B^1 x B^1 x B^2", "B1 x B1 x B2", 4, 14, ball_product({1, 1, 2}));
    add("vi", "B^2 x B^3", "B2 x B3", 5, 23, ball_product({2, 3}));
    add("vii", "B^1 x B^1 x B^1 x B^1", "B1 x B1 x B1 x B1", 4, 12, ball_product({1, 1, 1, 1}));
    add("viii", "B^1 x B^1 x B^3", "B1 x B1 x B3", 5, 21, ball_product({1, 1, 3}));
    add("ix", "B^2 x B^4", "B2 x B4", 6, 32, ball_product({2, 4}));
    add("x", "B^1 x B^2 x B^2", "B1 x B2 x B2", 5, 19, ball_product({1, 2, 2}));
    add("xi", "B^3 x B^3", "B3 x B3", 6, 30, ball_product({3, 3}));
    add("xii", "B^1 x B^1 x B^4", "B1 x B1 x B4", 6, 30, ball_product({1, 1, 4}));
    add("xiii", "B^2 x B^5", "B2 x B5", 7, 43, ball_product({2, 5}));
    add("xiv", "B^1 x B^1 x B^1 x B^2", "B1 x B1 x B1 x B2", 5, 17, ball_product({1, 1, 1, 2}));
    add("xv", "B^1 x B^1 x B^5", "B1 x B1 x B5", 7, 41, ball_product({1, 1, 5}));
    add("xvi", "B^2 x B^6", "B2 x B6", 8, 56, ball_product({2, 6}));
    add("xvii", "tube over the rank-3 Lorentz cone", "T3", 3, 10, tube_domain(ConeSpec::lorentz(3)));
    add("xviii", "tube over the rank-4 Lorentz cone", "T4", 4, 15, tube_domain(ConeSpec::lorentz(4)));
    add("xix", "tube over the rank-5 Lorentz cone", "T5", 5, 21, tube_domain(ConeSpec::lorentz(5)));
    add("xx", "tube over the rank-6 Lorentz cone", "T6", 6, 28, tube_domain(ConeSpec::lorentz(6)));
    add("xxi", "B^1 x T3", "B1 x T3", 4, 13,
        tube_domain(ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(1)})));
    add("xxii", "B^2 x T3", "B2 x T3", 5, 18,
        SiegelDomainSpec::make(5, 4, ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(1)}),
                               detail::scalar_profile(detail::rvec({0, 0, 0, 1}), 1)));
    add("xxiii", "B^1 x T4", "B1 x T4", 5, 18,
        tube_domain(ConeSpec::product({ConeSpec::lorentz(4), ConeSpec::orthant(1)})));
    add("xxiv", "the non-symmetric rank-3 domain with d = n^2 - 6", "D(2,1)", 4, 10,
        SiegelDomainSpec::make(4, 3, ConeSpec::lorentz(3),
                               detail::scalar_profile(detail::rvec({1, 1, 0}), 1)));
    return out;
}

struct ItemScore {
    ClassificationEntry entry;
    GradedDims computed;
    bool pass = false;
};

inline std::vector<ItemScore> verify_classification() {
    std::vector<ItemScore> out;
    for (auto& e : classification_entries()) {
        ItemScore score;
        score.computed = graded_dims(e.realization);
        score.pass = score.computed.d == e.expected_d && e.realization.n == e.n;
        score.entry = std::move(e);
        out.push_back(std::move(score));
    }
    return out;
}

inline bool classification_ok(const std::vector<ItemScore>& scores) {
    for (const auto& s : scores)
        if (!s.pass) return false;
    return scores.size() == 24;
}

// ---------------------------------------------------------------------------
// Obstruction matrices for the half-component at irreducible rank-3 forms
// ---------------------------------------------------------------------------
//
// For the rank-3 Lorentz cone with m = 2 and kernel dimension s = 1, the
// half-component equations for the map Phi reduce to a C-linear 10 x 6
// system M(a2, v) Phi = 0 in the six unknowns (phi_1^1, phi_2^1, phi_3^1,
// phi_1^2, phi_2^2, phi_3^2), where a2 is the complex modulus of the normal
// form (the third coefficient normalized to 1) and v in the closed cone is
// the value H(e_2, e_2).  Full rank forces Phi = 0 and hence g_{1/2} = 0.
// There are two normal-form branches, distinguished by the vector
// H(e_1, e_1): the axis branch (u = (1,0,0)) and the edge branch
// (u = (1,1,0)).

struct ObstructionParams {
    GaussianRational a2;
    std::array<Rational, 3> v;
};

inline MatC obstruction_matrix(int branch, const ObstructionParams& p) {
    if (branch != 1 && branch != 2) throw std::invalid_argument("obstruction_matrix: branch must be 1 or 2");
    const GaussianRational a2 = p.a2;
    const GaussianRational a2c = p.a2.conj();
    const GaussianRational v1{p.v[0]}, v2{p.v[1]}, v3{p.v[2]};
    const GaussianRational one{Rational(1)}, zero{};
    MatC m(10, 6);
    auto row = [&](std::size_t r, std::initializer_list<GaussianRational> vals) {
        std::size_t c = 0;
        for (const auto& x : vals) m(r, c++) = x;
    };
    if (branch == 1) {
        row(0, {one, zero, zero, zero, -a2, zero});
        row(1, {one, zero, zero, zero, zero, -one});
        row(2, {zero, -a2c, zero, v1, -v2, zero});
        row(3, {zero, zero, -one, v1, zero, -v3});
        row(4, {zero, one, zero, -a2, zero, zero});
        row(5, {-a2c, zero, zero, -v2, v1, zero});
        row(6, {zero, zero, one, -one, zero, zero});
        row(7, {-one, zero, zero, -v3, zero, v1});
        row(8, {zero, zero, zero, zero, one, a2});
        row(9, {zero, one, a2c, zero, v3, v2});
    } else {
        row(0, {one, -one, zero, zero, -a2, zero});
        row(1, {one, zero, zero, zero, zero, -one});
        row(2, {zero, -a2c, zero, v1, -v2, zero});
        row(3, {zero, zero, -one, v1, zero, -v3});
        row(4, {-one, one, zero, -a2, zero, zero});
        row(5, {-a2c, zero, zero, -v2, v1, zero});
        row(6, {zero, zero, one, -one, zero, zero});
        row(7, {one, zero, zero, v3, zero, -v1});
        row(8, {zero, zero, one, zero, one, a2});
        row(9, {zero, one, a2c, zero, v3, v2});
    }
    return m;
}

// Rank over the Gaussian rationals (the system is C-linear: no conjugated
// unknowns appear, only conjugated parameters).
inline std::size_t lemma_matrix_rank(const MatC& m) { return rank(m); }

// Realification cross-check: viewing each complex equation as two real ones
// doubles the rank of a C-linear system exactly.
inline std::size_t lemma_matrix_rank_realified(const MatC& m) {
    std::vector<CEquation> eqs(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!is_zero(m(r, c))) eqs[r].terms.push_back(CTerm::plain(m(r, c), c));
    return rank(realify(eqs, m.cols()));
}

// ---------------------------------------------------------------------------
// Rank-2 pipeline
// ---------------------------------------------------------------------------
//
// For k = 2, normalize H_1 = Id and H_2 = diag(lambda) with lambda the
// eigenvalue profile.  If the profile has r >= 2 distinct values with
// multiplicities (m_1, ..., m_r), the kernel dimension is
// s = sum m_i^2 = (n-2)^2 - 2p with p the number of unordered index pairs
// in distinct blocks.  Reaching d = n^2 - offset needs
// s >= n^2 - offset - (4n - 2), which caps p at (offset + 2) / 2, and
// s <= (n-3)^2 + 1 (at least two blocks) caps n at p + 3.  The enumeration
// below lists every (p, n, profile) surviving both caps.

struct RankTwoConfig {
    std::size_t pairs = 0;                  // p
    std::size_t n = 0;                      // ambient dimension
    std::vector<std::size_t> multiplicities;  // descending, >= 2 parts, sum = n - 2
};

inline std::vector<RankTwoConfig> rank_two_configs(std::size_t target_offset) {
    if (target_offset != 7 && target_offset != 8)
        throw std::invalid_argument("rank_two_configs: target offset must be 7 or 8");
    const std::size_t pmax = (target_offset + 2) / 2;  // 2p <= offset + 2
    std::vector<RankTwoConfig> out;
    for (std::size_t p = 1; p <= pmax; ++p)
        for (std::size_t n = 4; n <= p + 3; ++n) {
            const std::size_t mw = n - 2;
            const long long target_sq = static_cast<long long>(mw) * static_cast<long long>(mw) -
                                        2 * static_cast<long long>(p);
            if (target_sq < static_cast<long long>(mw)) continue;  // sum of squares >= sum
            // enumerate partitions of mw into >= 2 parts, descending
            std::vector<std::size_t> parts;
            auto recurse = [&](auto&& self, std::size_t remaining, std::size_t maxpart) -> void {
                if (remaining == 0) {
                    if (parts.size() < 2) return;
                    long long sq = 0;
                    for (std::size_t part : parts) sq += static_cast<long long>(part) * part;
                    if (sq == target_sq) out.push_back({p, n, parts});
                    return;
                }
                for (std::size_t next = std::min(remaining, maxpart); next >= 1; --next) {
                    parts.push_back(next);
                    self(self, remaining - next, next);
                    parts.pop_back();
                }
            };
            recurse(recurse, mw, mw - 1);  // maxpart mw - 1 forces >= 2 parts
        }
    return out;
}

// The representative form for a rank-2 configuration: H_1 = Id_{n-2} and
// H_2 with eigenvalue c + 1 on the c-th multiplicity block (any distinct
// positive values give the same kernel dimension).
inline HermitianForm rank_two_form(const RankTwoConfig& cfg) {
    const std::size_t m = cfg.n - 2;
    std::vector<MatC> comps(2, MatC(m, m));
    for (std::size_t i = 0; i < m; ++i) comps[0](i, i) = GaussianRational(1);
    std::size_t off = 0;
    for (std::size_t block = 0; block < cfg.multiplicities.size(); ++block) {
        for (std::size_t i = 0; i < cfg.multiplicities[block]; ++i)
            comps[1](off + i, off + i) = GaussianRational(static_cast<long long>(block) + 1);
        off += cfg.multiplicities[block];
    }
    return HermitianForm::make(2, m, comps);
}

// ---------------------------------------------------------------------------
// Lemma suite
// ---------------------------------------------------------------------------

struct LemmaCheck {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail;
};

namespace detail {

// The rank-3 form with s = 1 lying on the edge-branch exceptional set:
// H_1 = Id, H_2 = diag(1, -1), H_3 = the symmetric unit.
inline HermitianForm split_rank3_form() {
    MatC h1(2, 2), h2(2, 2), h3(2, 2);
    h1(0, 0) = GaussianRational(1);
    h1(1, 1) = GaussianRational(1);
    h2(0, 0) = GaussianRational(1);
    h2(1, 1) = GaussianRational(-1);
    h3(0, 1) = GaussianRational(1);
    h3(1, 0) = GaussianRational(1);
    return HermitianForm::make(3, 2, {h1, h2, h3});
}

inline ConeSpec omega5() { return ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(1)}); }

// Deterministic sample stream of obstruction parameters with v in the open
// cone (v1 > |v2| + |v3| >= sqrt(v2^2 + v3^2)) and (v2, v3) != (0, 0), so no
// sample can touch either exceptional set.
struct ObstructionSampler {
    std::mt19937 gen{20260817u};
    std::uniform_int_distribution<int> num{-5, 5};
    std::uniform_int_distribution<int> den{1, 4};

    Rational draw_rational() { return make_rational(num(gen), den(gen)); }

    ObstructionParams next() {
        ObstructionParams p;
        p.a2 = GaussianRational(draw_rational(), draw_rational());
        for (;;) {
            const Rational v2 = draw_rational(), v3 = draw_rational();
            if (is_zero(v2) && is_zero(v3)) continue;
            const Rational v1 = abs(v2) + abs(v3) + make_rational(den(gen), 1);
            p.v = {v1, v2, v3};
            return p;
        }
    }
};

}  // namespace detail

inline std::vector<std::string> lemma_ids() {
    return {"finallemma-i",    "finallemma-ii",     "component-axis",       "component-edge",
            "component-mixed", "profile-half-vanishing", "split-form-half", "ball-half-saturation",
            "pair-image-rank3", "pair-image-rank4", "skew-centralizer-sweep"};
}

// Rank report for one obstruction branch at explicit parameters.
inline LemmaCheck run_lemma_at(const std::string& id, const ObstructionParams& params) {
    const int branch = id == "finallemma-i" ? 1 : id == "finallemma-ii" ? 2 : 0;
    if (branch == 0) throw std::invalid_argument("run_lemma_at: only the obstruction lemmas take parameters");
    const MatC m = obstruction_matrix(branch, params);
    const std::size_t r = lemma_matrix_rank(m);
    LemmaCheck out;
    out.id = id;
    out.description = "half-component obstruction rank at explicit parameters";
    out.pass = r == 6;
    out.detail = "rank " + std::to_string(r) + " of 6 (realified " +
                 std::to_string(lemma_matrix_rank_realified(m)) + " of 12)";
    return out;
}

inline LemmaCheck run_lemma(const std::string& id) {
    using detail::omega5;
    using detail::rvec;
    using detail::scalar_profile;
    LemmaCheck out;
    out.id = id;

    auto half_dim_of = [](SiegelDomainSpec spec) { return g_half_dim(spec); };

    if (id == "finallemma-i" || id == "finallemma-ii") {
        const int branch = id == "finallemma-i" ? 1 : 2;
        out.description = branch == 1
                              ? "axis-branch obstruction matrix: full rank off the exceptional set"
                              : "edge-branch obstruction matrix: full rank off the exceptional set";
        bool ok = true;
        // Exceptional points have deficient rank.
        std::vector<ObstructionParams> exceptional;
        if (branch == 1) {
            exceptional.push_back({GaussianRational(Rational(0), Rational(1)),
                                   {Rational(1), Rational(0), Rational(0)}});
            exceptional.push_back({GaussianRational(Rational(0), Rational(-1)),
                                   {Rational(1), Rational(0), Rational(0)}});
        } else {
            exceptional.push_back({GaussianRational(), {Rational(1), Rational(-1), Rational(0)}});
        }
        std::size_t min_exc_rank = 6;
        for (const auto& p : exceptional) {
            const std::size_t r = lemma_matrix_rank(obstruction_matrix(branch, p));
            if (r >= 6) ok = false;
            min_exc_rank = std::min(min_exc_rank, r);
        }
        // Nearby non-exceptional points keep full rank (the set is exact).
        std::vector<ObstructionParams> near;
        if (branch == 1) {
            near.push_back({GaussianRational(Rational(0), Rational(2)),
                            {Rational(1), Rational(0), Rational(0)}});  // a2 = 2i
            near.push_back({GaussianRational(Rational(1), Rational(1)),
                            {Rational(1), Rational(0), Rational(0)}});  // a2 = 1 + i
            near.push_back({GaussianRational(Rational(0), Rational(1)),
                            {Rational(1), Rational(1), Rational(0)}});  // v on another ray
        } else {
            near.push_back({GaussianRational(Rational(1)), {Rational(1), Rational(-1), Rational(0)}});
            near.push_back({GaussianRational(), {Rational(1), Rational(1), Rational(0)}});
        }
        for (const auto& p : near)
            if (lemma_matrix_rank(obstruction_matrix(branch, p)) != 6) ok = false;
        // 200 deterministic interior samples: always full rank, and the
        // realified rank is exactly double.
        detail::ObstructionSampler sampler;
        for (int i = 0; i < 200 && ok; ++i) {
            const auto p = sampler.next();
            const MatC m = obstruction_matrix(branch, p);
            const std::size_t r = lemma_matrix_rank(m);
            if (r != 6 || lemma_matrix_rank_realified(m) != 2 * r) ok = false;
        }
        out.pass = ok;
        out.detail = "exceptional rank " + std::to_string(min_exc_rank) +
                     "; 200 interior samples at full rank 6";
        return out;
    }
    if (id == "component-axis" || id == "component-edge" || id == "component-mixed") {
        const std::vector<long long> v = id == "component-axis"   ? std::vector<long long>{1, 0, 0, 0}
                                         : id == "component-edge" ? std::vector<long long>{1, 1, 0, 0}
                                                                  : std::vector<long long>{1, 1, 0, 1};
        out.description = "half-component vanishes on the boundary-component form over the product cone";
        const auto spec = SiegelDomainSpec::make(5, 4, omega5(), scalar_profile(rvec(v), 1));
        const std::size_t h = half_dim_of(spec);
        out.pass = h == 0;
        out.detail = "g_{1/2} = " + std::to_string(h);
        return out;
    }
    if (id == "profile-half-vanishing") {
        out.description = "half-component vanishes for the boundary profile over the rank-3 Lorentz cone";
        const auto spec =
            SiegelDomainSpec::make(4, 3, ConeSpec::lorentz(3), scalar_profile(rvec({1, 1, 0}), 1));
        const std::size_t h = half_dim_of(spec);
        out.pass = h == 0;
        out.detail = "g_{1/2} = " + std::to_string(h);
        return out;
    }
    if (id == "split-form-half") {
        out.description = "the split s = 1 form has vanishing half-component";
        const auto form = detail::split_rank3_form();
        const std::size_t s = compute_s(form);
        const auto spec = SiegelDomainSpec::make(5, 3, ConeSpec::lorentz(3), form);
        const std::size_t h = half_dim_of(spec);
        out.pass = s == 1 && h == 0;
        out.detail = "s = " + std::to_string(s) + ", g_{1/2} = " + std::to_string(h);
        return out;
    }
    if (id == "ball-half-saturation") {
        out.description = "unit balls saturate the half-component bound 2(n-1)";
        const std::size_t h2 = half_dim_of(ball_product({2}));
        const std::size_t h3 = half_dim_of(ball_product({3}));
        out.pass = h2 == 2 && h3 == 4;
        out.detail = "n = 2: " + std::to_string(h2) + ", n = 3: " + std::to_string(h3);
        return out;
    }
    if (id == "pair-image-rank3" || id == "pair-image-rank4") {
        const bool r3 = id == "pair-image-rank3";
        out.description = "dimension of the extendable cone subalgebra for the boundary profile";
        const auto spec = r3 ? SiegelDomainSpec::make(4, 3, ConeSpec::lorentz(3),
                                                      scalar_profile(rvec({1, 1, 0}), 1))
                             : SiegelDomainSpec::make(5, 4, ConeSpec::lorentz(4),
                                                      scalar_profile(rvec({1, 1, 0, 0}), 1));
        const auto ap = assoc_pair_space(spec);
        out.pass = ap.dim_image == (r3 ? 3u : 5u) && ap.dim_pairs == (r3 ? 4u : 6u);
        out.detail = "image " + std::to_string(ap.dim_image) + ", pairs " + std::to_string(ap.dim_pairs);
        return out;
    }
    if (id == "skew-centralizer-sweep") {
        out.description = "centralizer dimension r^2 - 2p across all multiplicity profiles, r <= 4";
        bool ok = true;
        std::size_t checked = 0;
        for (std::size_t r = 1; r <= 4; ++r) {
            // all partitions of r as eigenvalue multiplicities
            std::vector<std::size_t> parts;
            auto recurse = [&](auto&& self, std::size_t remaining, std::size_t maxpart) -> void {
                if (remaining == 0) {
                    MatC h(r, r);
                    std::size_t off = 0;
                    for (std::size_t b = 0; b < parts.size(); ++b) {
                        for (std::size_t i = 0; i < parts[b]; ++i)
                            h(off + i, off + i) = GaussianRational(make_rational(static_cast<long long>(b) + 1,
                                                                                 static_cast<long long>(b) + 2));
                        off += parts[b];
                    }
                    long long sq = 0;
                    for (std::size_t part : parts) sq += static_cast<long long>(part) * part;
                    const std::size_t p = (r * r - static_cast<std::size_t>(sq)) / 2;
                    if (centralizer_dim(h) != r * r - 2 * p) ok = false;
                    ++checked;
                    return;
                }
                for (std::size_t next = std::min(remaining, maxpart); next >= 1; --next) {
                    parts.push_back(next);
                    self(self, remaining - next, next);
                    parts.pop_back();
                }
            };
            recurse(recurse, r, r);
        }
        out.pass = ok && checked == 1 + 2 + 3 + 5;  // partition counts of 1..4
        out.detail = std::to_string(checked) + " profiles checked";
        return out;
    }
    throw std::invalid_argument("run_lemma: unknown id '" + id + "'");
}

inline std::vector<LemmaCheck> verify_lemma_suite() {
    std::vector<LemmaCheck> out;
    for (const auto& id : lemma_ids()) out.push_back(run_lemma(id));
    return out;
}

// ---------------------------------------------------------------------------
// Case drivers
// ---------------------------------------------------------------------------

struct CaseOutcome {
    std::string candidate;
    bool contributes = false;
    std::string detail;   // exclusion reason, or the canonical contributed domain
    std::size_t d = 0;    // computed dimension when one was computed
};

struct CaseRecord {
    int theorem = 0;  // 1: target n^2 - 7, 2: target n^2 - 8
    std::string case_id;
    std::size_t n = 0;       // 0 for the rank-2 family (ranges over n)
    std::size_t k = 0;
    std::size_t target = 0;  // 0 for the rank-2 family
    std::vector<std::string> candidate_domains;
    std::vector<CaseOutcome> outcomes;
    std::vector<std::string> assumptions;
    bool ok = true;
};

inline std::vector<std::string> all_case_ids() {
    std::vector<std::string> out;
    for (int c = 1; c <= 8; ++c) out.push_back("T1-C" + std::to_string(c));
    for (int c = 1; c <= 9; ++c) out.push_back("T2-C" + std::to_string(c));
    return out;
}

namespace detail {

inline void exclude(CaseRecord& rec, std::string candidate, std::string reason, std::size_t d = 0) {
    rec.candidate_domains.push_back(candidate);
    rec.outcomes.push_back({std::move(candidate), false, std::move(reason), d});
}

inline void contribute(CaseRecord& rec, std::string candidate, std::string canonical, std::size_t d) {
    rec.candidate_domains.push_back(candidate);
    rec.outcomes.push_back({std::move(candidate), true, std::move(canonical), d});
}

// Shared skeleton for the rank-2 case (all n >= 4 at once).
inline CaseRecord case_rank2(int theorem, std::size_t offset, std::size_t ncap) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C1";
    rec.k = 2;
    rec.assumptions = {
        "rank-2 data normalized to H1 = Id, H2 = diag(lambda) up to linear equivalence",
        "homogeneous rank-2 domains are products of two balls",
    };

    // Equal profile, lambda = 0: B^(n-1) x B^1 with d = n^2 + 2 > n^2 - offset.
    {
        const auto rep = graded_dims(ball_product({1, 3}));
        rec.ok = rec.ok && rep.d == 18;  // n = 4 representative of n^2 + 2
        exclude(rec, "equal profile, zero", "d = n^2 + 2 exceeds the target for every n", rep.d);
    }
    // Equal profile, lambda > 0: no open orbit.
    {
        const auto rep = SiegelDomainSpec::make(4, 2, ConeSpec::orthant(2),
                                                scalar_profile(rvec({1, 1}), 2));
        const std::size_t orank = orbit_rank(rep, rvec({1, 1}));
        rec.ok = rec.ok && orank < 2;
        exclude(rec, "equal profile, positive", "orbit rank " + std::to_string(orank) + " < 2", 0);
    }
    // Mixed profile: enumerate the eigenvalue configurations compatible with
    // the target, verify each kernel dimension exactly, then solve the
    // ball-product dimension equation for every n up to the cap.
    {
        const auto configs = rank_two_configs(offset);
        rec.ok = rec.ok && configs.size() == (offset == 7 ? 6u : 8u);
        for (const auto& cfg : configs) {
            const std::size_t expect_s = (cfg.n - 2) * (cfg.n - 2) - 2 * cfg.pairs;
            if (compute_s(rank_two_form(cfg)) != expect_s) rec.ok = false;
        }
        bool contributed = false;
        for (std::size_t n = 4; n <= ncap; ++n) {
            const auto sols = ball_product_solver(n, n * n - offset);
            for (const std::size_t l : sols) {
                contribute(rec, "mixed profile, n = " + std::to_string(n),
                           "B" + std::to_string(std::min(l, n - l)) + " x B" + std::to_string(std::max(l, n - l)),
                           n * n - offset);
                contributed = true;
                // only report each n once (l and n - l describe the same product)
                break;
            }
        }
        if (offset == 7) {
            // parity: 2l^2 - 2nl + 2n + 7 is odd, so no solution for any n
            rec.ok = rec.ok && !contributed;
            exclude(rec, "mixed profile", "no ball product solves d = n^2 - 7 (parity)", 0);
        } else if (!contributed) {
            rec.ok = false;  // offset 8 must find B2 x B6 at n = 8
        }
    }
    return rec;
}

// k = 3, n = 4 (m = 1).
inline CaseRecord case_rank3_n4(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C2";
    rec.n = 4;
    rec.k = 3;
    rec.target = 16 - offset;
    rec.assumptions = {"m = 1 profiles normalized up to cone automorphism and scaling"};

    // Orthant: supported profiles up to permutation are (0,0,1), (1,1,0), (1,1,1).
    {
        const auto d3 = graded_dims(ball_product({1, 1, 2}));
        rec.ok = rec.ok && d3.d == 14;
        exclude(rec, "orthant, single support", "d = 14 != target (B1 x B1 x B2)", d3.d);

        for (const auto& v : {std::vector<long long>{1, 1, 0}, std::vector<long long>{1, 1, 1}}) {
            const auto spec = SiegelDomainSpec::make(4, 3, ConeSpec::orthant(3), scalar_profile(rvec(v), 1));
            const std::size_t orank = orbit_rank(spec, rvec({1, 1, 1}));
            rec.ok = rec.ok && orank < 3;
            exclude(rec, "orthant, support " + std::to_string(v[0] + v[1] + v[2]),
                    "orbit rank " + std::to_string(orank) + " < 3", 0);
        }
    }
    // Lorentz: v interior has no open orbit; v boundary is the sporadic
    // domain with d = 10 = n^2 - 6, missing both targets.
    {
        const auto interior = SiegelDomainSpec::make(4, 3, ConeSpec::lorentz(3),
                                                     scalar_profile(rvec({1, 0, 0}), 1));
        const std::size_t orank = orbit_rank(interior, rvec({2, 1, 1}));
        rec.ok = rec.ok && orank < 3;
        exclude(rec, "Lorentz, v interior", "orbit rank " + std::to_string(orank) + " < 3", 0);

        const auto boundary = SiegelDomainSpec::make(4, 3, ConeSpec::lorentz(3),
                                                     scalar_profile(rvec({1, 1, 0}), 1));
        const auto gd = graded_dims(boundary);
        rec.ok = rec.ok && gd.d == 10;
        exclude(rec, "Lorentz, v boundary", "d = 10 = n^2 - 6 misses the target", gd.d);
    }
    return rec;
}

// k = 3, n = 5 (m = 2).
inline CaseRecord case_rank3_n5(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C3";
    rec.n = 5;
    rec.k = 3;
    rec.target = 25 - offset;
    rec.assumptions = {
        "kernel dimensions for m = 2 lie in {1, 2, 4} (commutant dimensions of *-algebras in M_2)",
        "s = 1 forms reduce to the two obstruction branches plus the split exceptional form",
    };

    // Orthant: ball products.
    for (const auto& qs : {std::vector<std::size_t>{1, 1, 3}, std::vector<std::size_t>{1, 2, 2}}) {
        const auto gd = graded_dims(ball_product(qs));
        const std::size_t expect = qs[1] == 1 ? 21 : 19;
        rec.ok = rec.ok && gd.d == expect;
        exclude(rec, "orthant, blocks " + std::to_string(qs[1]) + "+" + std::to_string(qs[2]),
                "d = " + std::to_string(gd.d) + " != target", gd.d);
    }
    // Lorentz, s = 4: the scalar boundary profile.
    {
        const auto gd = graded_dims(SiegelDomainSpec::make(5, 3, ConeSpec::lorentz(3),
                                                           scalar_profile(rvec({1, 1, 0}), 2)));
        rec.ok = rec.ok && gd.d == 15;
        exclude(rec, "Lorentz, s = 4", "d = 15 != target", gd.d);
    }
    // Lorentz, s = 2: no open orbit.
    {
        MatC h1(2, 2), h2(2, 2), h3(2, 2);
        h1(0, 0) = GaussianRational(1);
        h1(1, 1) = GaussianRational(1);
        h2(0, 0) = GaussianRational(1);
        h2(1, 1) = GaussianRational(-1);
        const auto form = HermitianForm::make(3, 2, {h1, h2, h3});
        rec.ok = rec.ok && compute_s(form) == 2;
        const auto spec = SiegelDomainSpec::make(5, 3, ConeSpec::lorentz(3), form);
        const std::size_t orank = orbit_rank(spec, rvec({2, 1, 1}));
        rec.ok = rec.ok && orank < 3;
        exclude(rec, "Lorentz, s = 2", "orbit rank " + std::to_string(orank) + " < 3", 0);
    }
    // Lorentz, s = 1: the half-component vanishes (full-rank obstruction off
    // the exceptional set; the exceptional form computed directly), so
    // d <= k + 2m + (s + dim image) + 0 + k <= 15 < target.
    {
        const bool lemma_i = run_lemma("finallemma-i").pass;
        const bool lemma_ii = run_lemma("finallemma-ii").pass;
        const bool split = run_lemma("split-form-half").pass;
        rec.ok = rec.ok && lemma_i && lemma_ii && split;
        const auto split_gd = graded_dims(SiegelDomainSpec::make(5, 3, ConeSpec::lorentz(3),
                                                                 detail::split_rank3_form()));
        rec.ok = rec.ok && split_gd.g_half == 0 && split_gd.d < rec.target;
        exclude(rec, "Lorentz, s = 1",
                "half-component vanishes; d <= 15 < target (split form d = " +
                    std::to_string(split_gd.d) + ")",
                split_gd.d);
    }
    return rec;
}

// k = 3, n = 6 (m = 3).
inline CaseRecord case_rank3_n6(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C4";
    rec.n = 6;
    rec.k = 3;
    rec.target = 36 - offset;
    rec.assumptions = {
        "kernel dimensions for m = 3 lie in {1, 2, 3, 5, 9} (commutant dimensions of *-algebras in M_3)",
    };

    // Orthant: the three ball products.
    for (const auto& qs : {std::vector<std::size_t>{1, 1, 4}, std::vector<std::size_t>{1, 2, 3},
                           std::vector<std::size_t>{2, 2, 2}}) {
        const auto gd = graded_dims(ball_product(qs));
        const std::size_t expect = qs[0] == 2 ? 24 : (qs[1] == 1 ? 30 : 26);
        rec.ok = rec.ok && gd.d == expect;
        exclude(rec,
                "orthant, blocks " + std::to_string(qs[0]) + "+" + std::to_string(qs[1]) + "+" +
                    std::to_string(qs[2]),
                "d = " + std::to_string(gd.d) + " != target", gd.d);
    }
    // Lorentz: d <= 22 + s needs s >= target - 22 >= 6, and the only kernel
    // dimension >= 6 is 9 = m^2, which forces the scalar profile H = v |w|^2.
    {
        const auto chain = bound_chain(6, 3, 5, 4);  // largest non-scalar kernel
        rec.ok = rec.ok && !chain.consistent_with(rec.target);

        const auto interior = SiegelDomainSpec::make(6, 3, ConeSpec::lorentz(3),
                                                     scalar_profile(rvec({1, 0, 0}), 3));
        const std::size_t orank = orbit_rank(interior, rvec({2, 1, 1}));
        rec.ok = rec.ok && orank < 3;
        exclude(rec, "Lorentz, v interior", "orbit rank " + std::to_string(orank) + " < 3", 0);

        const auto gd = graded_dims(SiegelDomainSpec::make(6, 3, ConeSpec::lorentz(3),
                                                           scalar_profile(rvec({1, 1, 0}), 3)));
        rec.ok = rec.ok && gd.d == 22;
        exclude(rec, "Lorentz, v boundary", "d = 22 != target", gd.d);
    }
    return rec;
}

// k = 3, n = 7 (m = 4).
inline CaseRecord case_rank3_n7(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C5";
    rec.n = 7;
    rec.k = 3;
    rec.target = 49 - offset;
    rec.assumptions = {
        "kernel dimension >= 15 forces s = 16 = m^2 and the scalar profile (commutant dimensions in M_4 "
        "are {16, 10, 8, 6, 4, ...} after 16)",
    };

    // d <= 2k + 4m + s + dim g = 22 + s + dim g, so s + dim g >= target - 22.
    const std::size_t need = rec.target - 22;

    // Orthant (dim g = 3): s >= need - 3.
    if (offset == 7) {
        // s >= 17 > 16 = m^2: impossible.
        rec.ok = rec.ok && need - 3 > 16;
        exclude(rec, "orthant", "would need kernel dimension 17 > 16", 0);
    } else {
        // s = 16: scalar profile; multi-support profiles have no open orbit,
        // single support is the ball product B1 x B1 x B5.
        const auto multi = SiegelDomainSpec::make(7, 3, ConeSpec::orthant(3),
                                                  scalar_profile(rvec({1, 1, 0}), 4));
        const std::size_t orank = orbit_rank(multi, rvec({1, 1, 1}));
        rec.ok = rec.ok && orank < 3;
        exclude(rec, "orthant, multi support", "orbit rank " + std::to_string(orank) + " < 3", 0);

        const auto gd = graded_dims(ball_product({1, 1, 5}));
        rec.ok = rec.ok && gd.d == 41 && gd.d == rec.target;
        contribute(rec, "orthant, single support", "B1 x B1 x B5", gd.d);
    }
    // Lorentz (dim g = 4): s >= need - 4 >= 15 forces the scalar profile.
    {
        const auto interior = SiegelDomainSpec::make(7, 3, ConeSpec::lorentz(3),
                                                     scalar_profile(rvec({1, 0, 0}), 4));
        const std::size_t orank = orbit_rank(interior, rvec({2, 1, 1}));
        rec.ok = rec.ok && orank < 3;
        exclude(rec, "Lorentz, v interior", "orbit rank " + std::to_string(orank) + " < 3", 0);

        const auto gd = graded_dims(SiegelDomainSpec::make(7, 3, ConeSpec::lorentz(3),
                                                           scalar_profile(rvec({1, 1, 0}), 4)));
        rec.ok = rec.ok && gd.d == 31;
        exclude(rec, "Lorentz, v boundary", "d = 31 != target", gd.d);
    }
    return rec;
}

// k = 4, n = 4: tube domains over the three cones in R^4.
inline CaseRecord case_rank4_tubes(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C6";
    rec.n = 4;
    rec.k = 4;
    rec.target = 16 - offset;
    rec.assumptions = {"the cones in R^4 are the orthant, Lambda_3 x R_+, and Lambda_4"};

    const std::vector<std::pair<ConeSpec, std::size_t>> cones = {
        {ConeSpec::orthant(4), 12},
        {omega5(), 13},
        {ConeSpec::lorentz(4), 15},
    };
    for (const auto& [cone, expect] : cones) {
        const auto gd = graded_dims(tube_domain(cone));
        rec.ok = rec.ok && gd.d == expect;
        exclude(rec, "tube over " + cone_name(cone), "d = " + std::to_string(gd.d) + " != target", gd.d);
    }
    return rec;
}

// k = 4, n = 5 (m = 1).
inline CaseRecord case_rank4_n5(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C7";
    rec.n = 5;
    rec.k = 4;
    rec.target = 25 - offset;
    rec.assumptions = {
        "the cones in R^4 are the orthant, Lambda_3 x R_+, and Lambda_4",
        "m = 1 profiles normalized to boundary-component representatives up to cone automorphism",
    };

    // m = 1 gives s = 1, so d <= 2k + 4m + 1 + dim g = 13 + dim g and the
    // cone algebra needs dim g >= target - 13.
    const std::size_t need = rec.target - 13;  // 5 at offset 7, 4 at offset 8

    // Orthant (dim g = 4): admitted only at offset 8.
    if (need > 4) {
        exclude(rec, "orthant", "needs dim g(Omega) >= " + std::to_string(need) + " > 4", 0);
    } else {
        const auto multi = SiegelDomainSpec::make(5, 4, ConeSpec::orthant(4),
                                                  scalar_profile(rvec({1, 1, 0, 0}), 1));
        const std::size_t orank = orbit_rank(multi, rvec({1, 1, 1, 1}));
        rec.ok = rec.ok && orank < 4;
        exclude(rec, "orthant, multi support", "orbit rank " + std::to_string(orank) + " < 4", 0);

        const auto gd = graded_dims(ball_product({1, 1, 1, 2}));
        rec.ok = rec.ok && gd.d == 17 && gd.d == rec.target;
        contribute(rec, "orthant, single support", "B1 x B1 x B1 x B2", gd.d);
    }
    // Product cone Lambda_3 x R_+ (dim g = 5): boundary components.
    {
        const auto ival = SiegelDomainSpec::make(5, 4, omega5(), scalar_profile(rvec({1, 0, 0, 1}), 1));
        const std::size_t orank = orbit_rank(ival, rvec({2, 1, 1, 1}));
        rec.ok = rec.ok && orank < 4;
        exclude(rec, "product cone, v interior", "orbit rank " + std::to_string(orank) + " < 4", 0);

        const std::vector<std::pair<std::string, std::vector<long long>>> comps = {
            {"axis", {1, 0, 0, 0}}, {"edge", {1, 1, 0, 0}}, {"mixed", {1, 1, 0, 1}}};
        for (const auto& [name, v] : comps) {
            const auto spec = SiegelDomainSpec::make(5, 4, omega5(), scalar_profile(rvec(v), 1));
            const auto gd = graded_dims(spec);
            rec.ok = rec.ok && gd.g_half == 0 && gd.d < rec.target;
            exclude(rec, "product cone, " + name + " component",
                    "half-component vanishes, d = " + std::to_string(gd.d) + " < target", gd.d);
        }
        const auto last = SiegelDomainSpec::make(5, 4, omega5(), scalar_profile(rvec({0, 0, 0, 1}), 1));
        const auto gd = graded_dims(last);
        rec.ok = rec.ok && gd.d == 18;
        if (rec.target == 18) {
            contribute(rec, "product cone, ray component", "B2 x T3", gd.d);
        } else {
            exclude(rec, "product cone, ray component", "d = 18 != target (B2 x T3)", gd.d);
            rec.assumptions.push_back(
                "the ray component over the product cone is scored here by its exact dimension 18");
        }
    }
    // Lorentz cone Lambda_4 (dim g = 7): boundary profile has vanishing
    // half-component and exact dimension below both targets.
    {
        const auto ival = SiegelDomainSpec::make(5, 4, ConeSpec::lorentz(4),
                                                 scalar_profile(rvec({1, 0, 0, 0}), 1));
        const std::size_t orank = orbit_rank(ival, rvec({2, 1, 1, 0}));
        rec.ok = rec.ok && orank < 4;
        exclude(rec, "Lorentz, v interior", "orbit rank " + std::to_string(orank) + " < 4", 0);

        const auto spec = SiegelDomainSpec::make(5, 4, ConeSpec::lorentz(4),
                                                 scalar_profile(rvec({1, 1, 0, 0}), 1));
        const auto gd = graded_dims(spec);
        rec.ok = rec.ok && gd.g_half == 0 && gd.g_0 == 6 && gd.d < rec.target;
        exclude(rec, "Lorentz, v boundary",
                "half-component vanishes, d = " + std::to_string(gd.d) + " < target", gd.d);
    }
    return rec;
}

// k = 5, n = 5: tube domains over the six cones in R^5.
inline CaseRecord case_rank5_tubes(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C8";
    rec.n = 5;
    rec.k = 5;
    rec.target = 25 - offset;
    rec.assumptions = {
        "the cones in R^5 are the orthant, Lambda_3 x R_+^2, Lambda_4 x R_+, Lambda_5, and the two "
        "5-dimensional non-self-dual cones",
    };

    const std::vector<ConeSpec> cones = {
        ConeSpec::orthant(5),
        ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(2)}),
        ConeSpec::product({ConeSpec::lorentz(4), ConeSpec::orthant(1)}),
        ConeSpec::lorentz(5),
        ConeSpec::vinberg(),
        ConeSpec::dual_vinberg(),
    };
    for (const auto& cone : cones) {
        const auto gd = graded_dims(tube_domain(cone));
        if (gd.d == rec.target) {
            const bool is_b1t4 =
                cone.variant == ConeVariant::Product && cone.factors.size() == 2 &&
                cone.factors[0].variant == ConeVariant::Lorentz && cone.factors[0].k == 4;
            rec.ok = rec.ok && is_b1t4;  // only Lambda_4 x R_+ may hit 18, and only at offset 7
            contribute(rec, "tube over " + cone_name(cone), "B1 x T4", gd.d);
        } else {
            exclude(rec, "tube over " + cone_name(cone), "d = " + std::to_string(gd.d) + " != target",
                    gd.d);
        }
    }
    return rec;
}

// k = 6, n = 6 (offset 8 only): tube domains over cones in R^6.
inline CaseRecord case_rank6_tubes(int theorem, std::size_t offset) {
    CaseRecord rec;
    rec.theorem = theorem;
    rec.case_id = "T" + std::to_string(theorem) + "-C9";
    rec.n = 6;
    rec.k = 6;
    rec.target = 36 - offset;
    rec.assumptions = {
        "cones in R^6 not equivalent to Lambda_6 have algebra dimension at most the recognition "
        "threshold",
    };

    // d = k + dim g + g_1 <= 2k + dim g = 12 + dim g, so the target 28 needs
    // dim g >= 16 > threshold(6) = 13: the cone must be Lambda_6.
    const auto thr = lorentz_threshold(6);
    rec.ok = rec.ok && rec.target >= 12 && rec.target - 12 > thr.threshold;
    exclude(rec, "non-Lorentz cones",
            "would need dim g(Omega) >= " + std::to_string(rec.target - 12) + " > threshold " +
                std::to_string(thr.threshold),
            0);

    const auto gd = graded_dims(tube_domain(ConeSpec::lorentz(6)));
    rec.ok = rec.ok && gd.d == 28 && gd.d == rec.target;
    contribute(rec, "tube over " + cone_name(ConeSpec::lorentz(6)), "T6", gd.d);
    return rec;
}

}  // namespace detail

inline CaseRecord run_case(const std::string& case_id, std::size_t ncap = 64) {
    int theorem = 0;
    int number = 0;
    if (case_id.size() >= 4 && case_id[0] == 'T' && case_id[2] == '-' && case_id[3] == 'C') {
        theorem = case_id[1] - '0';
        try {
            number = std::stoi(case_id.substr(4));
        } catch (const std::exception&) {
            number = 0;
        }
    }
    const std::size_t offset = theorem == 1 ? 7 : 8;
    if (theorem == 1 || theorem == 2) {
        switch (number) {
            case 1: return detail::case_rank2(theorem, offset, ncap);
            case 2: return detail::case_rank3_n4(theorem, offset);
            case 3: return detail::case_rank3_n5(theorem, offset);
            case 4: return detail::case_rank3_n6(theorem, offset);
            case 5: return detail::case_rank3_n7(theorem, offset);
            case 6: return detail::case_rank4_tubes(theorem, offset);
            case 7: return detail::case_rank4_n5(theorem, offset);
            case 8: return detail::case_rank5_tubes(theorem, offset);
            case 9:
                if (theorem == 2) return detail::case_rank6_tubes(theorem, offset);
                break;
            default: break;
        }
    }
    throw std::invalid_argument("run_case: unknown case id '" + case_id + "'");
}

inline std::vector<CaseRecord> run_all_cases(std::size_t ncap = 64) {
    std::vector<CaseRecord> out;
    for (const auto& id : all_case_ids()) out.push_back(run_case(id, ncap));
    return out;
}

}  // namespace siegel
