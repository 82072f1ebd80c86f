#pragma once

// Dense exact linear algebra: reduced row echelon form, rank, nullspace
// bases, and realification of complex-linear systems that may involve
// conjugated unknowns.
//
// Everything here is a pure function over immutable values.  Dimensions in
// this project stay in the low hundreds of columns, so dense storage and
// classical Gaussian elimination are the right tools; pivoting picks the
// first nonzero entry (exact arithmetic needs no magnitude heuristics) which
// also makes every result deterministic.

#include <siegel/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace siegel {

template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::initializer_list<T> entries)
        : rows_(rows), cols_(cols), e_(entries) {
        if (e_.size() != rows * cols) throw std::invalid_argument("Mat: entry count mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    friend Mat operator*(const T& s, Mat m) {
        for (auto& v : m.e_) v = s * v;
        return m;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero_matrix() const {
        for (const auto& v : e_)
            if (!is_zero(v)) return false;
        return true;
    }

  private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> e_;
};

using MatR = Mat<Rational>;
using MatC = Mat<GaussianRational>;

inline bool is_hermitian(const MatC& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (m(i, j) != m(j, i).conj()) return false;
    return true;
}

inline MatC conj_transpose(const MatC& m) {
    MatC r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
    return r;
}

// ---------------------------------------------------------------------------
// Reduced row echelon form
// ---------------------------------------------------------------------------

template <typename T>
struct RrefResult {
    Mat<T> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

template <typename T>
RrefResult<T> rref(Mat<T> m) {
    RrefResult<T> out;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const T inv_pivot = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

template <typename T>
std::size_t rank(const Mat<T>& m) {
    return rref(m).rank;
}

template <typename T>
Mat<T> inverse(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Mat<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    const auto rr = rref(aug);
    if (rr.rank < n) throw std::domain_error("inverse: singular matrix");
    Mat<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = rr.reduced(i, n + j);
    return out;
}

// Laplace expansion; fine for the tiny (n <= 5) matrices this is used on.
template <typename T>
T determinant(const Mat<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m(0, j))) continue;
        Mat<T> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, sc = 0; c < n; ++c)
                if (c != j) sub(r - 1, sc++) = m(r, c);
        const T term = m(0, j) * determinant(sub);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// ---------------------------------------------------------------------------
// Nullspace
// ---------------------------------------------------------------------------

template <typename T>
struct SolutionSpaceT {
    std::size_t ambient_dim = 0;
    std::vector<Mat<T>> basis;  // ambient_dim × 1 column vectors, linearly independent

    std::size_t dim() const { return basis.size(); }
};

using SolutionSpace = SolutionSpaceT<Rational>;

template <typename T>
SolutionSpaceT<T> nullspace_basis(const Mat<T>& m) {
    const auto rr = rref(m);
    SolutionSpaceT<T> out;
    out.ambient_dim = m.cols();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;

    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Mat<T> v(m.cols(), 1);
        v(free_col, 0) = T(1);
        for (std::size_t pr = 0; pr < rr.pivot_cols.size(); ++pr)
            v(rr.pivot_cols[pr], 0) = -rr.reduced(pr, free_col);
        out.basis.push_back(std::move(v));
    }
    return out;
}

// Dimension of the projection of a solution space onto a subset of
// coordinates: rank of the basis restricted to those columns.  Used when a
// constraint system carries auxiliary cone-membership coordinates whose
// values are determined by the primary unknowns.
template <typename T>
std::size_t projected_dim(const SolutionSpaceT<T>& space, const std::vector<std::size_t>& coords) {
    Mat<T> sub(space.basis.size(), coords.size());
    for (std::size_t i = 0; i < space.basis.size(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j) sub(i, j) = space.basis[i](coords[j], 0);
    return rank(sub);
}

// ---------------------------------------------------------------------------
// Realification
// ---------------------------------------------------------------------------
//
// A complex-linear equation in unknowns z_0..z_{N-1} and their conjugates is
// real-linear in the coordinates x_j = Re z_j, y_j = Im z_j but usually not
// complex-linear (e.g. B + B* = 0).  realify() turns a list of such
// equations into one real matrix with interleaved columns
// (x_0, y_0, x_1, y_1, ...); each complex equation becomes two real rows
// (its real and imaginary parts).  Real solution vectors of the output
// correspond one-to-one with complex solutions of the input.

struct CTerm {
    GaussianRational coeff;
    // Factors of the monomial: (unknown index, conjugated?).  A linear term
    // has exactly one factor; anything else is rejected by realify.
    std::vector<std::pair<std::size_t, bool>> factors;

    static CTerm plain(GaussianRational c, std::size_t var) { return {std::move(c), {{var, false}}}; }
    static CTerm conjugated(GaussianRational c, std::size_t var) { return {std::move(c), {{var, true}}}; }
};

struct CEquation {
    std::vector<CTerm> terms;  // sum of terms = 0
};

inline MatR realify(const std::vector<CEquation>& system, std::size_t num_vars) {
    MatR out(2 * system.size(), 2 * num_vars);
    for (std::size_t e = 0; e < system.size(); ++e) {
        for (const CTerm& t : system[e].terms) {
            if (t.factors.size() != 1)
                throw std::invalid_argument("realify: system is not real-linear (non-linear term)");
            const auto [var, conjugated] = t.factors.front();
            if (var >= num_vars) throw std::invalid_argument("realify: unknown index out of range");
            const Rational& cr = t.coeff.re;
            const Rational& ci = t.coeff.im;
            const std::size_t xc = 2 * var, yc = 2 * var + 1;
            if (!conjugated) {
                // c·z = (cr·x − ci·y) + i(ci·x + cr·y)
                out(2 * e, xc) += cr;
                out(2 * e, yc) -= ci;
                out(2 * e + 1, xc) += ci;
                out(2 * e + 1, yc) += cr;
            } else {
                // c·z̄ = (cr·x + ci·y) + i(ci·x − cr·y)
                out(2 * e, xc) += cr;
                out(2 * e, yc) += ci;
                out(2 * e + 1, xc) += ci;
                out(2 * e + 1, yc) -= cr;
            }
        }
    }
    return out;
}

}  // namespace siegel
