#pragma once

#include <string>

#include "cubiq/errors.hpp"
#include "cubiq/field.hpp"

namespace cubiq {

/// Point of P^1(K) in homogeneous coordinates [x : y], canonicalized to
/// [x : 1] when finite and [1 : 0] at infinity.
template <FieldElement K>
class ProjPoint {
public:
    ProjPoint(const K& x, const K& y) : x_(x), y_(y) {
        if (y_.is_zero()) {
            if (x_.is_zero()) throw DomainError("[0 : 0] is not a projective point");
            x_ = x_.one();
        } else {
            x_ = x_ / y_;
            y_ = y_.one();
        }
    }
    explicit ProjPoint(const K& finite) : ProjPoint(finite, finite.one()) {}

    static ProjPoint infinity(const K& context) { return ProjPoint(context.one(), context.zero()); }

    bool is_infinity() const { return y_.is_zero(); }
    const K& value() const {
        if (is_infinity()) throw DomainError("finite value of the point at infinity");
        return x_;
    }
    const K& x() const { return x_; }
    const K& y() const { return y_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string to_string() const { return is_infinity() ? "inf" : x_.to_string(); }

private:
    K x_, y_;
};

// Canonical order: finite points by field_compare on their value, infinity last.
template <FieldElement K>
int point_compare(const ProjPoint<K>& a, const ProjPoint<K>& b) {
    if (a.is_infinity() && b.is_infinity()) return 0;
    if (a.is_infinity()) return 1;
    if (b.is_infinity()) return -1;
    return field_compare(a.value(), b.value());
}

template <FieldElement K>
bool point_less(const ProjPoint<K>& a, const ProjPoint<K>& b) {
    return point_compare(a, b) < 0;
}

}  // namespace cubiq
