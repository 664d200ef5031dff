#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "mvop/errors.hpp"
#include "mvop/pi_rational.hpp"
#include "mvop/rational.hpp"

namespace mvop {

namespace detail {

inline bool scalar_is_zero(const Rational& s) { return s.is_zero(); }
inline bool scalar_is_zero(const PiRational& s) { return s.is_zero(); }
inline bool scalar_is_zero(double s) { return s == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& s) { return s == 0.0; }

// Pivot preference; exact scalars only need "nonzero".
inline double pivot_weight(const Rational&) { return 1.0; }
inline double pivot_weight(double s) { return std::abs(s); }

}  // namespace detail

/// Dense row-major matrix over an exact or floating scalar.
template <typename S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, S(0)) {
        if (rows < 0 || cols < 0) throw DomainError("Matrix: negative shape");
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw DomainError("Matrix: ragged rows");
            for (const auto& x : r) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix diagonal(const std::vector<S>& d) {
        Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    S& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const S& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!detail::scalar_is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] + o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] = a_[i] - o.a_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : a_) x = x * s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (detail::scalar_is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    std::vector<S> operator*(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DomainError("Matrix: vector length mismatch");
        std::vector<S> r(rows_, S(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<S> a_;
};

/// Reduced row echelon form; returns the pivot columns.
template <typename S>
std::vector<int> rref_in_place(Matrix<S>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int best = -1;
        double best_w = 0.0;
        for (int i = row; i < m.rows(); ++i) {
            if (detail::scalar_is_zero(m(i, col))) continue;
            double w = detail::pivot_weight(m(i, col));
            if (best < 0 || w > best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best < 0) continue;
        if (best != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
        S inv = S(1) / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || detail::scalar_is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename S>
int rank(Matrix<S> m) {
    return static_cast<int>(rref_in_place(m).size());
}

/// Basis of the null space, free variables in ascending column order.
template <typename S>
std::vector<std::vector<S>> kernel(Matrix<S> m) {
    const int n = m.cols();
    std::vector<int> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(n, S(0));
        v[free] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact solution of A x = b for square invertible A.
template <typename S>
std::vector<S> solve(const Matrix<S>& a, const std::vector<S>& b) {
    if (!a.is_square()) throw DomainError("solve: matrix not square");
    if (static_cast<int>(b.size()) != a.rows()) throw DomainError("solve: rhs length mismatch");
    const int n = a.rows();
    Matrix<S> m(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    std::vector<int> pivots = rref_in_place(m);
    if (static_cast<int>(pivots.size()) != n || pivots.back() == n)
        throw SingularMatrix("solve: singular matrix");
    std::vector<S> x(n);
    for (int i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

template <typename S>
Matrix<S> inverse(const Matrix<S>& a) {
    if (!a.is_square()) throw DomainError("inverse: matrix not square");
    const int n = a.rows();
    Matrix<S> m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = S(1);
    }
    std::vector<int> pivots = rref_in_place(m);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw SingularMatrix("inverse: singular matrix");
    Matrix<S> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = m(i, n + j);
    return r;
}

/// Unique exact solution of a (possibly overdetermined) stacked system.
/// Demands full column rank and consistency.
template <typename S>
std::vector<S> solve_unique(const Matrix<S>& a, const std::vector<S>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw DomainError("solve_unique: rhs length mismatch");
    const int n = a.cols();
    Matrix<S> m(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    std::vector<int> pivots = rref_in_place(m);
    for (int c : pivots)
        if (c == n) throw InconsistentSystem("solve_unique: inconsistent system");
    if (static_cast<int>(pivots.size()) < n)
        throw InconsistentSystem("solve_unique: solution not unique");
    std::vector<S> x(n);
    for (int i = 0; i < n; ++i) x[i] = m(i, n);
    return x;
}

template <typename S>
Matrix<double> to_double(const Matrix<S>& m) {
    Matrix<double> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if constexpr (std::is_same_v<S, double>)
                r(i, j) = m(i, j);
            else
                r(i, j) = m(i, j).to_double();
        }
    return r;
}

template <typename S>
std::ostream& operator<<(std::ostream& os, const Matrix<S>& m) {
    for (int i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < m.cols(); ++j) os << m(i, j) << (j + 1 < m.cols() ? ", " : "");
        os << (i + 1 < m.rows() ? ";\n" : "]");
    }
    return os;
}

}  // namespace mvop
