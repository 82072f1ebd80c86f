#pragma once

// Univariate polynomials over Q: just enough exact machinery to extract
// eigenvalue multiplicity profiles of Hermitian matrices without ever
// computing an eigenvalue.  A Hermitian matrix has a real spectrum, so its
// characteristic polynomial p factors over R as prod (x - lambda_j)^{m_j};
// Yun's square-free decomposition p = prod a_i^i recovers exactly the
// multiset of multiplicities (each square-free a_i contributes deg(a_i)
// eigenvalues of multiplicity i), even when the eigenvalues themselves are
// irrational.

#include <siegel/matrix.hpp>
#include <siegel/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace siegel {

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }

    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(std::size_t k) const { return c_[k]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational leading() const {
        if (c_.empty()) throw std::domain_error("Poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Poly monic() const {
        if (is_zero()) return *this;
        Poly r = *this;
        const Rational l = leading();
        for (auto& v : r.c_) v /= l;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly r = a;
        std::vector<Rational> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            const Rational f = r.leading() / b.leading();
            q[shift] = f;
            for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k + shift] -= f * b.c_[k];
            r.trim();
        }
        return {Poly(std::move(q)), std::move(r)};
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;  // ascending: c_[k] is the coefficient of x^k
};

// Exact quotient; throws if the division is not exact.
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
}

// Monic gcd over Q via the Euclidean algorithm (field coefficients, so no
// content bookkeeping is needed).
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Yun's square-free decomposition: f = prod a_i^i with the a_i square-free,
// pairwise coprime and monic.  Returns (a_i, i) for every i with deg a_i >= 1.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f_in) {
    std::vector<std::pair<Poly, int>> out;
    if (f_in.degree() < 1) return out;
    const Poly f = f_in.monic();
    const Poly df = f.derivative();
    Poly g = poly_gcd(f, df);
    Poly b = exact_div(f, g);
    Poly c = exact_div(df, g);
    Poly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        const Poly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

// Characteristic polynomial det(xI - A) of a Hermitian matrix, computed by
// the Faddeev–LeVerrier recursion over Q(i).  Hermitian input forces real
// coefficients; a nonzero imaginary residue means the input was not
// Hermitian and is rejected.
inline Poly char_poly_hermitian(const MatC& a) {
    if (!is_hermitian(a)) throw std::invalid_argument("char_poly_hermitian: input is not Hermitian");
    const std::size_t n = a.rows();
    std::vector<GaussianRational> coeff(n + 1);
    coeff[n] = GaussianRational(1);
    MatC m = MatC(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A*M_k)/k
        MatC am = a * m;
        for (std::size_t i = 0; i < n; ++i) am(i, i) += coeff[n - k + 1];
        m = std::move(am);
        GaussianRational tr;
        MatC prod = a * m;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
        coeff[n - k] = -tr / GaussianRational(Rational(static_cast<long>(k)));
    }
    std::vector<Rational> real_coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (coeff[k].im != 0)
            throw std::invalid_argument("char_poly_hermitian: input is not Hermitian");
        real_coeffs[k] = coeff[k].re;
    }
    return Poly(std::move(real_coeffs));
}

}  // namespace siegel
