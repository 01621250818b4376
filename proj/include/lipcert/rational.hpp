#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "lipcert/errors.hpp"

namespace lipcert {

using Integer = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
    Rational(int n) : v_(n) {}                             // NOLINT
    Rational(const Integer& n) : v_(n) {}                  // NOLINT

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "n" or "n/d" with optional leading sign.
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw Error("malformed rational '" + text + "'");
        if (q.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
        q.canonicalize();
        Rational r;
        r.v_ = q;
        return r;
    }

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(unsigned e) const {
        mpq_class r(1);
        mpq_class b = v_;
        unsigned k = e;
        while (k > 0) {
            if (k & 1u) r *= b;
            k >>= 1u;
            if (k > 0) b *= b;
        }
        return Rational(r);
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;  // canonical by construction
};

}  // namespace lipcert
