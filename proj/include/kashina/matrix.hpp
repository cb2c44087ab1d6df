#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kashina/errors.hpp"
#include "kashina/scalar.hpp"

namespace kashina {

/// Dense matrix over Q(xi), row-major. Immutable use is the norm: operations
/// return fresh values and never round.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
        return m;
    }
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw ShapeError("matrix add: shape mismatch");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += y.a_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw ShapeError("matrix sub: shape mismatch");
        Matrix r = x;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= y.a_[k];
        return r;
    }
    friend Matrix operator*(const Scalar& s, Matrix m) {
        for (auto& v : m.a_) v *= s;
        return m;
    }

    /// Exact matrix product. Shapes must conform.
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_)
            throw ShapeError("matrix mul: " + std::to_string(x.rows_) + "x" +
                             std::to_string(x.cols_) + " by " + std::to_string(y.rows_) + "x" +
                             std::to_string(y.cols_));
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const Scalar& xv = x(i, k);
                if (xv.is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    const Scalar& yv = y(k, j);
                    if (!yv.is_zero()) r(i, j) += xv * yv;
                }
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        if (v.size() != cols_) throw ShapeError("matrix apply: vector length mismatch");
        std::vector<Scalar> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::size_t rank() const;
    std::vector<std::vector<Scalar>> kernel_basis() const;
    std::optional<Matrix> inverse() const;

    /// Deterministic key for memoization tables.
    std::string key() const {
        std::string k = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
        for (const auto& v : a_) {
            k += v.str();
            k += ',';
        }
        return k;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Kronecker product; index pairs (i1,i2) map to i1*b.rows()+i2, so the
/// leftmost tensor factor is the most significant digit.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& av = a(i, j);
            if (av.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& bv = b(k, l);
                    if (!bv.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = av * bv;
                }
        }
    return r;
}

inline Matrix mat_pow(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw ShapeError("mat_pow: square matrix required");
    Matrix acc = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

namespace detail {

/// Gaussian integer used inside the fraction-free elimination.
struct GaussInt {
    mpz_class re, im;
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

inline GaussInt gi_mul(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussInt gi_sub(const GaussInt& a, const GaussInt& b) {
    return GaussInt{a.re - b.re, a.im - b.im};
}

/// Exact division in Z[xi]; the quotient is known to be integral
/// (Bareiss pivots divide every eliminated entry).
inline GaussInt gi_divexact(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.re * b.re + b.im * b.im;
    mpz_class ure = a.re * b.re + a.im * b.im;
    mpz_class uim = a.im * b.re - a.re * b.im;
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), ure.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), uim.get_mpz_t(), n.get_mpz_t());
    return q;
}

struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<GaussInt>> rows; // fraction-free row echelon form
    std::size_t cols = 0;
};

/// Fraction-free (Bareiss) row reduction. Rows are first scaled to Gaussian
/// integers; the pivot rule is deterministic: columns in order, first row
/// with a nonzero entry.
inline Echelon echelonize(const Matrix& m) {
    Echelon e;
    e.cols = m.cols();
    std::vector<std::vector<GaussInt>> w(m.rows(), std::vector<GaussInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).im().get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpq_class re = m(i, j).re() * l;
            mpq_class im = m(i, j).im() * l;
            w[i][j] = GaussInt{re.get_num(), im.get_num()};
        }
    }

    mpz_class oneimag(0);
    GaussInt prev{mpz_class(1), mpz_class(0)};
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && w[piv][col].is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) std::swap(w[piv], w[r]);
        const GaussInt pivot = w[r][col];
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (w[i][col].is_zero()) {
                // still rescale so the Bareiss denominators stay aligned
                for (std::size_t j = col + 1; j < m.cols(); ++j)
                    w[i][j] = gi_divexact(gi_mul(w[i][j], pivot), prev);
            } else {
                const GaussInt factor = w[i][col];
                for (std::size_t j = col + 1; j < m.cols(); ++j)
                    w[i][j] = gi_divexact(
                        gi_sub(gi_mul(w[i][j], pivot), gi_mul(factor, w[r][j])), prev);
                w[i][col] = GaussInt{mpz_class(0), mpz_class(0)};
            }
        }
        prev = pivot;
        e.pivot_cols.push_back(col);
        ++r;
    }
    e.rank = r;
    w.resize(r);
    e.rows = std::move(w);
    return e;
}

inline Scalar gi_to_scalar(const GaussInt& g) {
    return Scalar(mpq_class(g.re), mpq_class(g.im));
}

} // namespace detail

inline std::size_t Matrix::rank() const { return detail::echelonize(*this).rank; }

/// Basis of the right kernel: one vector per free column, in ascending column
/// order, with a 1 in the free slot. Exact back-substitution from the
/// fraction-free echelon form.
inline std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
    detail::Echelon e = detail::echelonize(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_);
        v[f] = Scalar::one();
        for (std::size_t kk = e.rank; kk-- > 0;) {
            std::size_t p = e.pivot_cols[kk];
            Scalar s;
            for (std::size_t j = p + 1; j < cols_; ++j) {
                if (!v[j].is_zero()) s += detail::gi_to_scalar(e.rows[kk][j]) * v[j];
            }
            v[p] = -(s / detail::gi_to_scalar(e.rows[kk][p]));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse: square matrix required");
    const std::size_t n = rows_;
    Matrix w = *this;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(piv, j), w(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Scalar d = w(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col).is_zero()) continue;
            Scalar f = w(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace kashina
