#pragma once

// Incremental builder for homogeneous real-linear systems.
//
// The graded-component computations in graded.hpp all reduce to the same
// shape of problem: a finite list of unknowns, some real and some complex,
// subject to equations that are real-linear in the real unknowns and
// real-linear in the real/imaginary parts of the complex unknowns (complex
// unknowns may enter conjugated, which is why the equations are generally not
// complex-linear).  This header provides a small builder that
//
//   * hands out column indices for fresh real and complex unknowns,
//   * accumulates linear expressions term by term, splitting every complex
//     coefficient times (possibly conjugated) complex variable into its real
//     and imaginary parts, and
//   * materializes the collected equations as a rational matrix whose
//     nullspace is the solution space.
//
// Keeping the realification in one tested place avoids re-deriving the
// re/im bookkeeping in every constraint system.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "siegel/matrix.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// A complex unknown, stored as the pair of columns holding its real and
// imaginary parts.
struct ComplexVar {
    std::size_t re_col = 0;
    std::size_t im_col = 0;
};

// Sparse real-linear expression: map from column index to coefficient.
struct RealLinExpr {
    std::map<std::size_t, Rational> coeff;

    void add(std::size_t col, const Rational& c) {
        if (is_zero(c)) return;
        auto it = coeff.try_emplace(col, Rational(0)).first;
        it->second += c;
        if (is_zero(it->second)) coeff.erase(it);
    }

    RealLinExpr negated() const {
        RealLinExpr out;
        for (const auto& [col, c] : coeff) out.coeff.emplace(col, -c);
        return out;
    }

    bool empty() const { return coeff.empty(); }
};

// Complex-valued expression, kept as its real and imaginary parts. For a
// coefficient g = gr + i*gi and a complex unknown z = x + i*y:
//
//   g * z       = (gr*x - gi*y) + i*(gi*x + gr*y)
//   g * conj(z) = (gr*x + gi*y) + i*(gi*x - gr*y)
//
// and for a real unknown t, g * t = gr*t + i*(gi*t).
struct ComplexLinExpr {
    RealLinExpr re, im;

    void add_times_complex(const GaussianRational& g, const ComplexVar& v, bool conjugated = false) {
        re.add(v.re_col, g.re);
        re.add(v.im_col, conjugated ? g.im : Rational(-g.im));
        im.add(v.re_col, g.im);
        im.add(v.im_col, conjugated ? Rational(-g.re) : g.re);
    }

    void add_times_real(const GaussianRational& g, std::size_t col) {
        re.add(col, g.re);
        im.add(col, g.im);
    }
};

class SystemBuilder {
public:
    std::size_t add_real_var() { return cols_++; }

    ComplexVar add_complex_var() {
        ComplexVar v{cols_, cols_ + 1};
        cols_ += 2;
        return v;
    }

    // Require expr = 0.  Identically-zero expressions are dropped; they
    // contribute nothing to the nullspace computation.
    void require_zero(const RealLinExpr& e) {
        if (!e.empty()) rows_.push_back(e.coeff);
    }

    void require_zero(const ComplexLinExpr& e) {
        require_zero(e.re);
        require_zero(e.im);
    }

    std::size_t num_vars() const { return cols_; }
    std::size_t num_equations() const { return rows_.size(); }

    MatR matrix() const {
        MatR m(rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i]) m(i, c) = v;
        return m;
    }

    SolutionSpace nullspace() const { return nullspace_basis(matrix()); }

private:
    std::size_t cols_ = 0;
    std::vector<std::map<std::size_t, Rational>> rows_;
};

// Constrain a square matrix of linear expressions to lie in the real span of
// the given basis matrices.  Fresh auxiliary coefficient variables mu_t are
// allocated and the equations entries[i][j] - sum_t mu_t * basis[t](i, j) = 0
// are added.  Callers that later project the solution space onto their
// primary unknowns simply leave the mu columns out of the projection.
inline void require_in_span(SystemBuilder& sys,
                            const std::vector<std::vector<RealLinExpr>>& entries,
                            const std::vector<MatR>& basis) {
    const std::size_t d = entries.size();
    for (const auto& row : entries)
        if (row.size() != d) throw std::invalid_argument("require_in_span: entries must be square");
    for (const auto& b : basis)
        if (b.rows() != d || b.cols() != d)
            throw std::invalid_argument("require_in_span: basis shape mismatch");

    std::vector<std::size_t> mu;
    mu.reserve(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) mu.push_back(sys.add_real_var());

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            RealLinExpr e = entries[i][j];
            for (std::size_t t = 0; t < basis.size(); ++t) e.add(mu[t], -basis[t](i, j));
            sys.require_zero(e);
        }
}

}  // namespace siegel
