#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "shiftlab/errors.hpp"

namespace shiftlab {

// Exact rational arithmetic, backed by GMP.  Values are kept canonical
// (lowest terms, denominator > 0) at all times, so equality is plain
// comparison and to_string() is the canonical "p/q" form the reports use.
//
// Only text in "p/q" or integer form is accepted: decimal input would smuggle
// a binary rounding into the exact backend, so it is rejected outright.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) fail(errc::domain, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "p", "-p" or "p/q".  Whitespace is not tolerated: these strings
    // travel through CLI args and JSON values where stray spaces mean typos.
    static Rational parse(const std::string& text);

    std::string to_string() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (sgn(o.v_) == 0) fail(errc::domain, "rational division by zero");
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

    // Integer powers only; fractional exponents live in the approximate backend.
    Rational pow(long e) const;

    // Exact square root when one exists (numerator and denominator both
    // perfect squares), nullopt otherwise.
    std::optional<Rational> exact_sqrt() const;

private:
    mpq_class v_;
};

// n! and C(n, i) as exact integers, returned as Rational for direct use in
// difference sums.  Arguments are small (depths, orders); negatives are bugs.
Rational factorial(long n);
Rational binomial(long n, long i);

} // namespace shiftlab
