#pragma once

#include <vector>

#include "mvop/matrix.hpp"

namespace mvop {

/// Polynomial in one variable with matrix coefficients, degree-indexed.
/// Canonical form keeps the trailing stored coefficient nonzero; the zero
/// polynomial is stored as a single zero coefficient.
template <typename S>
class MatPoly {
public:
    MatPoly() : rows_(0), cols_(0) {}
    MatPoly(int rows, int cols) : rows_(rows), cols_(cols), c_(1, Matrix<S>(rows, cols)) {}
    explicit MatPoly(Matrix<S> constant)
        : rows_(constant.rows()), cols_(constant.cols()), c_{std::move(constant)} {}
    MatPoly(int rows, int cols, std::vector<Matrix<S>> coeffs)
        : rows_(rows), cols_(cols), c_(std::move(coeffs)) {
        if (c_.empty()) c_.emplace_back(rows_, cols_);
        for (const auto& m : c_)
            if (m.rows() != rows_ || m.cols() != cols_)
                throw DomainError("MatPoly: coefficient shape mismatch");
        normalize();
    }

    static MatPoly monomial(Matrix<S> coeff, int degree) {
        std::vector<Matrix<S>> c(static_cast<size_t>(degree) + 1, Matrix<S>(coeff.rows(), coeff.cols()));
        int r = coeff.rows(), k = coeff.cols();
        c[degree] = std::move(coeff);
        return MatPoly(r, k, std::move(c));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }

    Matrix<S> coeff(int k) const {
        if (k < 0 || k > degree()) return Matrix<S>(rows_, cols_);
        return c_[k];
    }
    Matrix<S> leading_coeff() const { return c_.back(); }

    void set_coeff(int k, Matrix<S> m) {
        if (m.rows() != rows_ || m.cols() != cols_) throw DomainError("MatPoly: coefficient shape mismatch");
        if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, Matrix<S>(rows_, cols_));
        c_[k] = std::move(m);
        normalize();
    }

    Matrix<S> eval(const S& y) const {
        Matrix<S> acc = c_.back();
        for (int k = degree() - 1; k >= 0; --k) acc = acc * y + c_[k];
        return acc;
    }

    MatPoly derivative(int order = 1) const {
        MatPoly r = *this;
        for (int o = 0; o < order; ++o) {
            if (r.c_.size() == 1) {
                r.c_[0] = Matrix<S>(rows_, cols_);
                continue;
            }
            std::vector<Matrix<S>> d;
            d.reserve(r.c_.size() - 1);
            for (size_t k = 1; k < r.c_.size(); ++k) d.push_back(r.c_[k] * S(static_cast<long>(k)));
            r.c_ = std::move(d);
        }
        r.normalize();
        return r;
    }

    MatPoly transpose() const {
        std::vector<Matrix<S>> t;
        t.reserve(c_.size());
        for (const auto& m : c_) t.push_back(m.transpose());
        return MatPoly(cols_, rows_, std::move(t));
    }

    MatPoly operator-() const {
        MatPoly r = *this;
        for (auto& m : r.c_) m = -m;
        return r;
    }

    friend MatPoly operator+(const MatPoly& a, const MatPoly& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("MatPoly: shape mismatch");
        std::vector<Matrix<S>> c(std::max(a.c_.size(), b.c_.size()), Matrix<S>(a.rows_, a.cols_));
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] += a.c_[k];
            if (k < b.c_.size()) c[k] += b.c_[k];
        }
        return MatPoly(a.rows_, a.cols_, std::move(c));
    }
    friend MatPoly operator-(const MatPoly& a, const MatPoly& b) { return a + (-b); }

    friend MatPoly operator*(const MatPoly& a, const MatPoly& b) {
        if (a.cols_ != b.rows_) throw DomainError("MatPoly: shape mismatch in product");
        std::vector<Matrix<S>> c(a.c_.size() + b.c_.size() - 1, Matrix<S>(a.rows_, b.cols_));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return MatPoly(a.rows_, b.cols_, std::move(c));
    }

    friend MatPoly operator*(const Matrix<S>& m, const MatPoly& p) {
        std::vector<Matrix<S>> c;
        c.reserve(p.c_.size());
        for (const auto& x : p.c_) c.push_back(m * x);
        return MatPoly(m.rows(), p.cols_, std::move(c));
    }

    friend MatPoly operator*(const MatPoly& p, const Matrix<S>& m) {
        std::vector<Matrix<S>> c;
        c.reserve(p.c_.size());
        for (const auto& x : p.c_) c.push_back(x * m);
        return MatPoly(p.rows_, m.cols(), std::move(c));
    }

    friend MatPoly operator*(const MatPoly& p, const S& s) {
        MatPoly r = p;
        for (auto& m : r.c_) m *= s;
        r.normalize();
        return r;
    }
    friend MatPoly operator*(const S& s, const MatPoly& p) { return p * s; }

    /// Multiplies by the scalar polynomial sum_k s[k] y^k.
    MatPoly scale_by_poly(const std::vector<S>& s) const {
        std::vector<Matrix<S>> c(c_.size() + s.size() - 1, Matrix<S>(rows_, cols_));
        for (size_t i = 0; i < s.size(); ++i) {
            if (detail::scalar_is_zero(s[i])) continue;
            for (size_t j = 0; j < c_.size(); ++j) c[i + j] += c_[j] * s[i];
        }
        return MatPoly(rows_, cols_, std::move(c));
    }

    friend bool operator==(const MatPoly& a, const MatPoly& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
    }
    friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

private:
    void normalize() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }

    int rows_, cols_;
    std::vector<Matrix<S>> c_;
};

template <typename S>
MatPoly<double> to_double(const MatPoly<S>& p) {
    std::vector<Matrix<double>> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(to_double(p.coeff(k)));
    return MatPoly<double>(p.rows(), p.cols(), std::move(c));
}

/// 1x1 convenience: scalar polynomial from low-to-high coefficients.
template <typename S>
MatPoly<S> scalar_poly(const std::vector<S>& coeffs) {
    std::vector<Matrix<S>> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.push_back(Matrix<S>{{x}});
    return MatPoly<S>(1, 1, std::move(c));
}

template <typename S>
std::vector<S> scalar_coeffs(const MatPoly<S>& p) {
    if (p.rows() != 1 || p.cols() != 1) throw DomainError("scalar_coeffs: not a 1x1 polynomial");
    std::vector<S> r;
    for (int k = 0; k <= p.degree(); ++k) r.push_back(p.coeff(k)(0, 0));
    return r;
}

}  // namespace mvop
