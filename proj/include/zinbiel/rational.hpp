#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "zinbiel/errors.hpp"

namespace zinbiel {

/// Arbitrary-precision rational number, always kept in reduced canonical
/// form: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw division_by_zero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw division_by_zero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    // Accepts "p/q", "p", optional leading '-'; whitespace is not allowed.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw usage_error("invalid rational literal: '" + text + "'");
        if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) throw division_by_zero();
        q.canonicalize();
        return Rational(q);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw division_by_zero();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational inv() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1 / v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_; // canonical at all times
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace zinbiel
