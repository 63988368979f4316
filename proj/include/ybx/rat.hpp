#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "ybx/errors.hpp"

namespace ybx {

/// Arbitrary-precision rational number, always reduced: gcd(|num|, den) = 1,
/// den > 0, and zero is 0/1. Backed by GMP.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw ZeroDenominatorError("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw ZeroDenominatorError("Rat: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    /// Parses "a" or "a/b" with optional leading '-'.
    static Rat from_string(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const {
        Rat r(*this);
        r.v_ = ::abs(r.v_);
        return r;
    }

    Rat operator-() const {
        Rat r(*this);
        r.v_ = -r.v_;
        return r;
    }

    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ZeroDenominatorError("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    /// "a" when integral, otherwise "a/b".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  private:
    mpq_class v_;
};

/// Binomial coefficient with the combinatorial convention: 0 when k < 0 or
/// k > n (n may be any integer; negative n gives 0 as well, which is the
/// convention the matrix coefficient formula relies on).
Rat binomial(long n, long k);

} // namespace ybx
