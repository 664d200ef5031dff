#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "mvop/errors.hpp"
#include "mvop/rational.hpp"

namespace mvop {

/// Exact scalar of the form q * pi^e with rational q and integer e.
/// Grades never mix: adding values of different nonzero grade is an error,
/// never a silent coercion. Canonical zero has grade 0.
class PiRational {
public:
    PiRational() : q_(0), pi_(0) {}
    PiRational(int q) : q_(q), pi_(0) {}
    PiRational(long q) : q_(q), pi_(0) {}
    explicit PiRational(Rational q, int pi_power = 0) : q_(std::move(q)), pi_(pi_power) {
        if (q_.is_zero()) pi_ = 0;
    }

    const Rational& coeff() const { return q_; }
    int pi_power() const { return pi_; }
    bool is_zero() const { return q_.is_zero(); }
    int sign() const { return q_.sign(); }

    PiRational operator-() const { return PiRational(-q_, pi_); }

    friend PiRational operator+(const PiRational& a, const PiRational& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_ != b.pi_)
            throw PiGradeMismatch("pi-grade mismatch: " + a.str() + " + " + b.str());
        return PiRational(a.q_ + b.q_, a.pi_);
    }
    friend PiRational operator-(const PiRational& a, const PiRational& b) { return a + (-b); }
    friend PiRational operator*(const PiRational& a, const PiRational& b) {
        return PiRational(a.q_ * b.q_, a.pi_ + b.pi_);
    }
    friend PiRational operator*(const PiRational& a, const Rational& r) {
        return PiRational(a.q_ * r, a.pi_);
    }
    friend PiRational operator*(const Rational& r, const PiRational& a) { return a * r; }

    PiRational& operator+=(const PiRational& o) { return *this = *this + o; }
    PiRational& operator-=(const PiRational& o) { return *this = *this - o; }
    PiRational& operator*=(const PiRational& o) { return *this = *this * o; }

    friend bool operator==(const PiRational& a, const PiRational& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.pi_ == b.pi_ && a.q_ == b.q_;
    }
    friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

    std::string str() const {
        if (pi_ == 0) return q_.str();
        if (pi_ == 1) return q_.str() + "*pi";
        return q_.str() + "*pi^" + std::to_string(pi_);
    }

    double to_double() const { return q_.to_double() * std::pow(M_PI, pi_); }

private:
    Rational q_;
    int pi_;
};

inline std::ostream& operator<<(std::ostream& os, const PiRational& p) { return os << p.str(); }

}  // namespace mvop
