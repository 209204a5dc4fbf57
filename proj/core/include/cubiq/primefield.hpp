#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubiq/errors.hpp"

namespace cubiq {

/// Element of F_p for a runtime prime p < 2^31. Every value carries its
/// modulus; mixing moduli throws.
class Fp {
public:
    Fp() = default;  // unusable sentinel (p = 0); real values come from the ctor
    Fp(long long r, long long p) : p_(p) {
        if (p < 2 || p > (1LL << 31)) throw DomainError("prime field modulus out of range");
        r_ = r % p;
        if (r_ < 0) r_ += p;
    }

    long long residue() const { return r_; }
    long long modulus() const { return p_; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp scalar_from_int(long n) const { return Fp(n, p_); }

    Fp operator-() const { return Fp(-r_, p_); }
    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.r_ + b.r_, a.joint(b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.r_ - b.r_, a.joint(b)); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.r_ * b.r_ % a.joint(b), a.p_); }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    Fp inverse() const {
        if (r_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
        // extended Euclid; p prime so any nonzero residue is invertible
        long long t = 0, nt = 1, r = p_, nr = r_;
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return Fp(t, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.r_ == b.r_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string to_string() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a);

private:
    long long joint(const Fp& o) const {
        if (p_ != o.p_) throw DomainError("mixed prime-field moduli");
        if (p_ == 0) throw DomainError("uninitialized prime field element");
        return p_;
    }
    long long p_ = 0;
    long long r_ = 0;
};

inline int field_compare(const Fp& a, const Fp& b) {
    return a.residue() < b.residue() ? -1 : (b.residue() < a.residue() ? 1 : 0);
}

inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }

}  // namespace cubiq
