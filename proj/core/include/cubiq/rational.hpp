#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "cubiq/errors.hpp"
#include "cubiq/integer.hpp"

namespace cubiq {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Zero is 0/1. Immutable value semantics throughout.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                 // NOLINT: deliberate implicit embed
    Rat(const Int& n) : v_(n) {}           // NOLINT
    Rat(const Int& num, const Int& den) {
        if (sgn(den) == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "a" or "a/b" with optional sign, arbitrary precision.
    static Rat parse(const std::string& s);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Field-element hooks (context-free for Q).
    Rat zero() const { return Rat(); }
    Rat one() const { return Rat(1); }
    Rat scalar_from_int(long n) const { return Rat(n); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DomainError("rational division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(den(), num());
    }

    std::string to_string() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline int field_compare(const Rat& a, const Rat& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

Rat pow_int(const Rat& base, long e);

}  // namespace cubiq
