#pragma once

// Exact rational and Gaussian-rational scalars.
//
// All linear algebra in this library runs over Q or Q(i); no floating point
// is ever used in a rank or sign decision.  Rationals are GMP-backed via
// Boost.Multiprecision, which keeps values canonicalised (gcd-reduced,
// positive denominator) after every operation.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace siegel {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Build p/q, rejecting q == 0 up front (GMP aborts on a zero denominator
// instead of throwing, so the guard has to live here).
inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(Integer(num), Integer(den));
}

// Parse "p" or "p/q" with optional leading minus signs on either part.
// Throws std::invalid_argument on malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
    return Rational(Integer{std::string(num)}, d);
}

// Render as "p" or "p/q" (canonical reduced form).
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline int sign(const Rational& r) {
    return r.sign();
}

// Element of Q(i).  Hermitian-form entries and complex system coefficients
// live here; conjugation is exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}                      // NOLINT(google-explicit-constructor)
    GaussianRational(long long r) : re(make_rational(r)) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        const Rational n = o.norm2();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i2 = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& g) { return g.conj(); }

inline std::string to_string(const GaussianRational& g) {
    if (g.im == 0) return to_string(g.re);
    std::string s = to_string(g.re);
    s += (g.im.sign() < 0) ? " - " : " + ";
    Rational a = abs(g.im);
    if (a != 1) {
        s += to_string(a);
        s += "*";
    }
    s += "i";
    return s;
}

// Uniform zero tests so templated linear algebra works over both fields.
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussianRational& g) { return g.is_zero(); }

}  // namespace siegel
