#pragma once

// The catalog of homogeneous open convex cones of rank <= 5 used by the
// classification: positive orthants, Lorentz (ice-cream) cones, products of
// such, and the two rank-3 Vinberg cones.  Provides exact membership /
// boundary classification, the Lie algebra g(Omega) of the automorphism
// group of each cone as an explicit matrix basis, the boundary
// stratification of the product cone Lambda_3 x R_+, and the symmetric
// matrix model of the dual Vinberg cone.
//
// Conventions.  Lorentz(k) = { x in R^k : x_1 > sqrt(x_2^2+...+x_k^2) }.
// Lorentz cones start at k = 3: the k = 2 instance is linearly equivalent to
// the quarter-plane via (x_1, x_2) -> (x_1 + x_2, x_1 - x_2), so it is
// represented as Orthant(2).
//
// Vinberg cones.  V denotes the 5-dimensional space of symmetric matrices
//     [ x_1 x_4 x_5 ]
//     [ x_4 x_2  0  ]
//     [ x_5  0  x_3 ],
// and the dual Vinberg cone is the set of x whose matrix is positive
// definite: x_1 > 0, x_1 x_2 - x_4^2 > 0, x_1 x_2 x_3 - x_3 x_4^2 - x_2 x_5^2 > 0.
// The Vinberg cone is { x : x_1 > 0, x_1 x_2 - x_4^2 > 0, x_1 x_3 - x_5^2 > 0 },
// i.e. both 2x2 corner blocks [[x_1,x_4],[x_4,x_2]] and [[x_1,x_5],[x_5,x_3]]
// positive definite; it is the dual of the former cone.

#include <siegel/matrix.hpp>
#include <siegel/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace siegel {

enum class ConeVariant { Orthant, Lorentz, Product, Vinberg, DualVinberg };

struct ConeNameError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ConeSpec {
    ConeVariant variant = ConeVariant::Orthant;
    std::size_t k = 1;               // ambient dimension for Orthant/Lorentz
    std::vector<ConeSpec> factors;   // Product only

    static ConeSpec orthant(std::size_t k) {
        if (k < 1) throw std::invalid_argument("ConeSpec: orthant requires k >= 1");
        return {ConeVariant::Orthant, k, {}};
    }
    static ConeSpec lorentz(std::size_t k) {
        if (k < 3)
            throw std::invalid_argument(
                "ConeSpec: lorentz requires k >= 3 (k = 2 is represented as orthant:2)");
        return {ConeVariant::Lorentz, k, {}};
    }
    static ConeSpec product(std::vector<ConeSpec> fs) {
        if (fs.empty()) throw std::invalid_argument("ConeSpec: product requires >= 1 factor");
        return {ConeVariant::Product, 0, std::move(fs)};
    }
    static ConeSpec vinberg() { return {ConeVariant::Vinberg, 5, {}}; }
    static ConeSpec dual_vinberg() { return {ConeVariant::DualVinberg, 5, {}}; }

    std::size_t ambient_dim() const {
        switch (variant) {
            case ConeVariant::Orthant:
            case ConeVariant::Lorentz:
                return k;
            case ConeVariant::Vinberg:
            case ConeVariant::DualVinberg:
                return 5;
            case ConeVariant::Product: {
                std::size_t d = 0;
                for (const auto& f : factors) d += f.ambient_dim();
                return d;
            }
        }
        return 0;
    }

    friend bool operator==(const ConeSpec& a, const ConeSpec& b) {
        return a.variant == b.variant && a.k == b.k && a.factors == b.factors;
    }
};

// ---------------------------------------------------------------------------
// Text names: "orthant:k", "lorentz:k", "product:[...]", "vinberg",
// "dual_vinberg".  These are the names accepted in domain-spec files.
// ---------------------------------------------------------------------------

inline std::string cone_name(const ConeSpec& c) {
    switch (c.variant) {
        case ConeVariant::Orthant:
            return "orthant:" + std::to_string(c.k);
        case ConeVariant::Lorentz:
            return "lorentz:" + std::to_string(c.k);
        case ConeVariant::Vinberg:
            return "vinberg";
        case ConeVariant::DualVinberg:
            return "dual_vinberg";
        case ConeVariant::Product: {
            std::string s = "product:[";
            for (std::size_t i = 0; i < c.factors.size(); ++i) {
                if (i) s += ",";
                s += cone_name(c.factors[i]);
            }
            return s + "]";
        }
    }
    return {};
}

namespace detail {

inline ConeSpec parse_cone_at(std::string_view text, std::size_t& pos);

inline std::size_t parse_cone_count(std::string_view text, std::size_t& pos) {
    std::size_t v = 0, digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
        if (++digits > 6) throw ConeNameError("unknown cone name: dimension out of range");
    }
    if (digits == 0) throw ConeNameError("unknown cone name: expected a dimension");
    return v;
}

inline ConeSpec parse_cone_at(std::string_view text, std::size_t& pos) {
    auto starts = [&](std::string_view word) {
        if (text.substr(pos, word.size()) != word) return false;
        pos += word.size();
        return true;
    };
    if (starts("orthant:")) {
        const std::size_t k = parse_cone_count(text, pos);
        if (k < 1) throw ConeNameError("unknown cone name: orthant dimension must be >= 1");
        return ConeSpec::orthant(k);
    }
    if (starts("lorentz:")) {
        const std::size_t k = parse_cone_count(text, pos);
        if (k < 3) throw ConeNameError("unknown cone name: lorentz:k requires k >= 3");
        return ConeSpec::lorentz(k);
    }
    if (starts("product:[")) {
        std::vector<ConeSpec> fs;
        fs.push_back(parse_cone_at(text, pos));
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            fs.push_back(parse_cone_at(text, pos));
        }
        if (pos >= text.size() || text[pos] != ']')
            throw ConeNameError("unknown cone name: unterminated product");
        ++pos;
        return ConeSpec::product(std::move(fs));
    }
    if (starts("dual_vinberg")) return ConeSpec::dual_vinberg();
    if (starts("vinberg")) return ConeSpec::vinberg();
    throw ConeNameError("unknown cone name at '" + std::string(text.substr(pos)) + "'");
}

}  // namespace detail

inline ConeSpec parse_cone_name(std::string_view text) {
    std::size_t pos = 0;
    ConeSpec c = detail::parse_cone_at(text, pos);
    if (pos != text.size()) throw ConeNameError("unknown cone name: trailing text in '" + std::string(text) + "'");
    return c;
}

// ---------------------------------------------------------------------------
// Membership and boundary classification
// ---------------------------------------------------------------------------

enum class PointClass { Interior, BoundaryNonzero, Zero, Exterior };

inline const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::Interior: return "Interior";
        case PointClass::BoundaryNonzero: return "BoundaryNonzero";
        case PointClass::Zero: return "Zero";
        case PointClass::Exterior: return "Exterior";
    }
    return "?";
}

// The symmetric matrix model of a point of the (dual) Vinberg space.
inline MatR vinberg_embed(const std::vector<Rational>& x) {
    if (x.size() != 5) throw std::invalid_argument("vinberg_embed: expected a 5-vector");
    MatR m(3, 3);
    m(0, 0) = x[0];
    m(1, 1) = x[1];
    m(2, 2) = x[2];
    m(0, 1) = m(1, 0) = x[3];
    m(0, 2) = m(2, 0) = x[4];
    return m;
}

namespace detail {

inline bool sym3_positive_definite(const MatR& m) {
    // Leading principal minors (Sylvester).
    if (m(0, 0) <= 0) return false;
    if (m(0, 0) * m(1, 1) - m(0, 1) * m(0, 1) <= 0) return false;
    return determinant(m) > 0;
}

inline bool sym3_positive_semidefinite(const MatR& m) {
    // PSD for symmetric matrices == all principal minors (not just leading
    // ones) are non-negative.
    for (std::size_t i = 0; i < 3; ++i)
        if (m(i, i) < 0) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (m(i, i) * m(j, j) - m(i, j) * m(i, j) < 0) return false;
    return determinant(m) >= 0;
}

inline PointClass classify_from_closures(bool interior, bool in_closure, bool zero) {
    if (!in_closure) return PointClass::Exterior;
    if (interior) return PointClass::Interior;
    return zero ? PointClass::Zero : PointClass::BoundaryNonzero;
}

}  // namespace detail

inline PointClass classify_point(const ConeSpec& cone, const std::vector<Rational>& x) {
    if (x.size() != cone.ambient_dim())
        throw std::invalid_argument("classify_point: vector length != cone ambient dimension");
    const bool zero = [&] {
        for (const auto& v : x)
            if (v != 0) return false;
        return true;
    }();
    switch (cone.variant) {
        case ConeVariant::Orthant: {
            bool interior = true, closure = true;
            for (const auto& v : x) {
                if (v <= 0) interior = false;
                if (v < 0) closure = false;
            }
            return detail::classify_from_closures(interior, closure, zero);
        }
        case ConeVariant::Lorentz: {
            Rational q = x[0] * x[0];
            for (std::size_t i = 1; i < x.size(); ++i) q -= x[i] * x[i];
            const bool interior = x[0] > 0 && q > 0;
            const bool closure = x[0] >= 0 && q >= 0;
            return detail::classify_from_closures(interior, closure, zero);
        }
        case ConeVariant::DualVinberg: {
            const MatR m = vinberg_embed(x);
            return detail::classify_from_closures(detail::sym3_positive_definite(m),
                                                  detail::sym3_positive_semidefinite(m), zero);
        }
        case ConeVariant::Vinberg: {
            // Both 2x2 corner blocks positive (semi)definite.
            const Rational d1 = x[0] * x[1] - x[3] * x[3];
            const Rational d2 = x[0] * x[2] - x[4] * x[4];
            const bool interior = x[0] > 0 && d1 > 0 && d2 > 0;
            const bool closure = x[0] >= 0 && x[1] >= 0 && x[2] >= 0 && d1 >= 0 && d2 >= 0;
            return detail::classify_from_closures(interior, closure, zero);
        }
        case ConeVariant::Product: {
            bool all_interior = true, all_zero = true;
            std::size_t off = 0;
            for (const auto& f : cone.factors) {
                std::vector<Rational> seg(x.begin() + static_cast<std::ptrdiff_t>(off),
                                          x.begin() + static_cast<std::ptrdiff_t>(off + f.ambient_dim()));
                off += f.ambient_dim();
                switch (classify_point(f, seg)) {
                    case PointClass::Exterior: return PointClass::Exterior;
                    case PointClass::Interior: all_zero = false; break;
                    case PointClass::BoundaryNonzero: all_interior = false; all_zero = false; break;
                    case PointClass::Zero: all_interior = false; break;
                }
            }
            if (all_interior) return PointClass::Interior;
            if (all_zero) return PointClass::Zero;
            return PointClass::BoundaryNonzero;
        }
    }
    throw std::logic_error("classify_point: unreachable");
}

// ---------------------------------------------------------------------------
// Boundary stratification of the product cone Lambda_3 x R_+ (ambient R^4).
// The boundary splits into four orbit strata of the identity component of
// the cone's automorphism group:
//   C1: interior of Lambda_3 in the first three coordinates, x_4 = 0;
//   C2: (boundary of Lambda_3) \ {0}, x_4 = 0;
//   C3: (boundary of Lambda_3) \ {0}, x_4 > 0;
//   C4: x_1 = x_2 = x_3 = 0, x_4 > 0.
// ---------------------------------------------------------------------------

enum class Omega5Component { C1, C2, C3, C4, NotOnBoundary };

inline const char* to_string(Omega5Component c) {
    switch (c) {
        case Omega5Component::C1: return "C1";
        case Omega5Component::C2: return "C2";
        case Omega5Component::C3: return "C3";
        case Omega5Component::C4: return "C4";
        case Omega5Component::NotOnBoundary: return "NotOnBoundary";
    }
    return "?";
}

inline Omega5Component omega5_boundary_component(const std::vector<Rational>& x) {
    if (x.size() != 4) throw std::invalid_argument("omega5_boundary_component: expected a 4-vector");
    const ConeSpec lambda3 = ConeSpec::lorentz(3);
    const std::vector<Rational> head(x.begin(), x.begin() + 3);
    const PointClass hc = classify_point(lambda3, head);
    if (x[3] == 0) {
        if (hc == PointClass::Interior) return Omega5Component::C1;
        if (hc == PointClass::BoundaryNonzero) return Omega5Component::C2;
        return Omega5Component::NotOnBoundary;  // head zero (origin) or exterior
    }
    if (x[3] > 0) {
        if (hc == PointClass::BoundaryNonzero) return Omega5Component::C3;
        if (hc == PointClass::Zero) return Omega5Component::C4;
        return Omega5Component::NotOnBoundary;  // interior point of the cone, or exterior
    }
    return Omega5Component::NotOnBoundary;
}

// ---------------------------------------------------------------------------
// Lie algebras g(Omega) of the cone automorphism groups
// ---------------------------------------------------------------------------

struct ConeAlgebra {
    std::size_t ambient_dim = 0;
    std::vector<MatR> basis;  // ambient_dim x ambient_dim, linearly independent

    std::size_t dim() const { return basis.size(); }
};

namespace detail {

inline MatR unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
    MatR m(n, n);
    m(i, j) = 1;
    return m;
}

// The five-dimensional triangular subgroup H acting transitively on the
// dual Vinberg cone consists of matrices preserving the symmetric-matrix
// slice V (zero (2,3) entry) under X -> A X A^T.  A basis of its Lie algebra:
inline std::vector<MatR> vinberg_h_basis() {
    return {unit_matrix(3, 0, 0), unit_matrix(3, 0, 1), unit_matrix(3, 0, 2),
            unit_matrix(3, 1, 1), unit_matrix(3, 2, 2)};
}

inline std::vector<Rational> vinberg_coords(const MatR& m) {
    return {m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2)};
}

// 5x5 matrix of x -> coords(M X + X M^T) on the slice V.
inline MatR dual_vinberg_generator(const MatR& m) {
    MatR out(5, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        std::vector<Rational> e(5);
        e[j] = 1;
        const MatR x = vinberg_embed(e);
        const MatR y = m * x + x * m.transpose();
        if (y(1, 2) != 0)
            throw std::logic_error("dual_vinberg_generator: generator leaves the matrix slice");
        const auto c = vinberg_coords(y);
        for (std::size_t i = 0; i < 5; ++i) out(i, j) = c[i];
    }
    return out;
}

}  // namespace detail

inline ConeAlgebra lie_algebra_basis(const ConeSpec& cone) {
    ConeAlgebra out;
    out.ambient_dim = cone.ambient_dim();
    switch (cone.variant) {
        case ConeVariant::Orthant:
            for (std::size_t i = 0; i < cone.k; ++i)
                out.basis.push_back(detail::unit_matrix(cone.k, i, i));
            break;
        case ConeVariant::Lorentz: {
            // Scalings plus so(1, k-1): identity, symmetric boosts E_{0j}+E_{j0},
            // rotations E_{ij}-E_{ji} of the space-like coordinates.
            const std::size_t k = cone.k;
            out.basis.push_back(MatR::identity(k));
            for (std::size_t j = 1; j < k; ++j)
                out.basis.push_back(detail::unit_matrix(k, 0, j) + detail::unit_matrix(k, j, 0));
            for (std::size_t i = 1; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    out.basis.push_back(detail::unit_matrix(k, i, j) - detail::unit_matrix(k, j, i));
            break;
        }
        case ConeVariant::Product: {
            std::size_t off = 0;
            for (const auto& f : cone.factors) {
                const ConeAlgebra sub = lie_algebra_basis(f);
                for (const auto& b : sub.basis) {
                    MatR big(out.ambient_dim, out.ambient_dim);
                    for (std::size_t i = 0; i < sub.ambient_dim; ++i)
                        for (std::size_t j = 0; j < sub.ambient_dim; ++j) big(off + i, off + j) = b(i, j);
                    out.basis.push_back(std::move(big));
                }
                off += f.ambient_dim();
            }
            break;
        }
        case ConeVariant::DualVinberg:
            for (const auto& m : detail::vinberg_h_basis())
                out.basis.push_back(detail::dual_vinberg_generator(m));
            break;
        case ConeVariant::Vinberg: {
            // Transport through duality: if B generates automorphisms of a
            // cone K then -B^* generates automorphisms of the dual cone,
            // where * is the adjoint under the pairing identifying the two.
            // The dual of the dual Vinberg cone under the dot product is the
            // Vinberg cone stretched by T = diag(1,1,1,2,2), so the basis is
            // V_i = -T^{-1} D_i^T T.
            std::vector<Rational> tdiag = {1, 1, 1, 2, 2};
            for (const auto& m : detail::vinberg_h_basis()) {
                const MatR d = detail::dual_vinberg_generator(m).transpose();
                MatR v(5, 5);
                for (std::size_t i = 0; i < 5; ++i)
                    for (std::size_t j = 0; j < 5; ++j) v(i, j) = -d(i, j) * tdiag[j] / tdiag[i];
                out.basis.push_back(std::move(v));
            }
            break;
        }
    }
    return out;
}

// Span dimension of the five dual-Vinberg generators, with an exact check
// that sample group elements A in the triangular group H preserve positive
// definiteness of sample points (A X A^T stays in the cone).
inline std::size_t vinberg_generator_dim() {
    const auto gens = detail::vinberg_h_basis();
    MatR stacked(gens.size(), 25);
    std::vector<MatR> reps;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const MatR d = detail::dual_vinberg_generator(gens[g]);
        reps.push_back(d);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) stacked(g, 5 * i + j) = d(i, j);
    }
    // Exact invariance probe: unipotent and diagonal group elements.
    const std::vector<Rational> samples[] = {
        {1, 1, 1, 0, 0}, {2, 2, 2, 1, 1}, {3, 1, 2, 1, 1}, {5, 2, 1, 2, 1}, {2, 5, 3, -1, 1}};
    std::vector<MatR> group_elems;
    for (const auto& m : gens) {
        MatR a = MatR::identity(3) + m;  // I + M lies in H for each basis M
        group_elems.push_back(a);
    }
    for (const auto& a : group_elems)
        for (const auto& s : samples) {
            const MatR x = vinberg_embed(s);
            if (!detail::sym3_positive_definite(x)) continue;
            if (!detail::sym3_positive_definite(a * x * a.transpose()))
                throw std::logic_error("vinberg_generator_dim: group element left the cone");
        }
    return rank(stacked);
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

// The twelve cones of rank k <= 5 appearing in the classification, in
// catalog order, addressed by their text names.
inline std::vector<ConeSpec> cone_catalog() {
    return {
        ConeSpec::orthant(2),
        ConeSpec::orthant(3),
        ConeSpec::lorentz(3),
        ConeSpec::orthant(4),
        ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(1)}),
        ConeSpec::lorentz(4),
        ConeSpec::orthant(5),
        ConeSpec::product({ConeSpec::lorentz(3), ConeSpec::orthant(2)}),
        ConeSpec::product({ConeSpec::lorentz(4), ConeSpec::orthant(1)}),
        ConeSpec::lorentz(5),
        ConeSpec::dual_vinberg(),
        ConeSpec::vinberg(),
    };
}

// Upper bound dim g(Omega) <= k^2/2 - k/2 + 1 for a homogeneous open convex
// cone of ambient dimension k that is not linearly equivalent to a Lorentz
// cone (equality characterises the Lorentz family).
inline std::size_t cone_algebra_dim_bound(std::size_t k) {
    return (k * (k - 1)) / 2 + 1;
}

// Is this catalog cone linearly equivalent to a Lorentz cone?  Covers the
// low-dimensional degenerations: R_+ and the quarter-plane (orthant:2 maps
// onto the k=2 Lorentz cone under (x1,x2) -> (x1+x2, x1-x2)), and products
// of orthants aggregating to one of those.
inline bool lorentz_equivalent(const ConeSpec& cone) {
    switch (cone.variant) {
        case ConeVariant::Lorentz:
            return true;
        case ConeVariant::Orthant:
            return cone.k <= 2;
        case ConeVariant::Product: {
            std::size_t total = 0;
            for (const auto& f : cone.factors) {
                if (f.variant != ConeVariant::Orthant) return f.variant == ConeVariant::Lorentz && cone.factors.size() == 1;
                total += f.k;
            }
            return total <= 2;
        }
        default:
            return false;
    }
}

}  // namespace siegel
