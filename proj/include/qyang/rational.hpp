#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "qyang/errors.hpp"

namespace qyang {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; arithmetic never rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) fail(errc::invalid_argument, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_string(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(errc::invalid_argument, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

    /// "p" when the denominator is 1, otherwise "p/q" with q > 0.
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(std::string_view s) {
    if (s.empty()) fail(errc::parse_error, "empty rational literal");
    try {
        mpq_class v(std::string(s), 10);
        if (v.get_den() == 0) fail(errc::parse_error, "zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    } catch (const std::invalid_argument&) {
        fail(errc::parse_error, "bad rational literal: " + std::string(s));
    }
}

/// (-1)^e for any integer exponent.
inline int sign_pow(long e) { return (e & 1) ? -1 : 1; }

}  // namespace qyang
