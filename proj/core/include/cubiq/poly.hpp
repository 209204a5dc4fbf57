#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/field.hpp"

namespace cubiq {

/// Dense univariate polynomial over a field. coeff(i) multiplies z^i; the
/// zero polynomial is the empty list, any other leading coefficient is
/// nonzero. degree() of zero is -1.
template <FieldElement K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& leading() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return c_.back();
    }
    // i-th coefficient; i may exceed the degree.
    K coeff(int i) const {
        if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
        if (is_zero()) throw DomainError("coefficient context of zero polynomial");
        return c_[0].zero();
    }
    const std::vector<K>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& x : c_) r.push_back(-x);
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const K z = a.c_[0].zero();
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), z);
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        const K z = a.c_[0].zero();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, z);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const K& s) const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& x : c_) r.push_back(x * s);
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        if (is_zero()) return x.zero();
        K acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * c_[i].scalar_from_int(static_cast<long>(i)));
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        const K inv = leading().one() / leading();
        return scaled(inv);
    }

    // Multiply by z^k.
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> r(c_.size() + static_cast<size_t>(k), c_[0].zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + static_cast<size_t>(k)] = c_[i];
        return Poly(std::move(r));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")";
            if (i >= 1) s += "*x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <FieldElement K>
std::pair<Poly<K>, Poly<K>> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    const K z = b.leading().zero();
    std::vector<K> rem(a.coeffs());
    std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, z);
    const K lead_inv = b.leading().one() / b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        K q = rem[static_cast<size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        quo[static_cast<size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            size_t k = static_cast<size_t>(i - b.degree() + j);
            rem[k] = rem[k] - q * b.coeff(j);
        }
    }
    return {Poly<K>(std::move(quo)), Poly<K>(std::move(rem))};
}

template <FieldElement K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divrem(a, b).first;
}

template <FieldElement K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divrem(a, b).second;
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldElement K>
Poly<K> gcd_poly(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

template <FieldElement K>
Poly<K> pow_poly(const Poly<K>& base, int e) {
    if (e < 0) throw DomainError("negative polynomial power");
    if (base.is_zero()) {
        if (e == 0) throw DomainError("0^0 for the zero polynomial");
        return base;
    }
    Poly<K> acc{base.leading().one()};
    Poly<K> b = base;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

/// Resultant by the Euclidean recurrence
///   Res(A, B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R),  R = A mod B,
/// with Res(A, const c) = c^{deg A}. Zero iff A and B share a root. This is
/// the Sylvester-determinant convention: Res(z^2+2z, 2z+3) = -3.
template <FieldElement K>
K resultant(Poly<K> a, Poly<K> b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant of zero polynomial");
    K acc = a.leading().one();
    bool negate = false;
    while (true) {
        if (b.degree() == 0) {
            K lc = b.leading();
            for (int i = 0; i < a.degree(); ++i) acc = acc * lc;
            break;
        }
        Poly<K> r = a % b;
        if (r.is_zero()) return acc.zero();  // common root
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
        const K lc = b.leading();
        for (int i = 0; i < a.degree() - r.degree(); ++i) acc = acc * lc;
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -acc : acc;
}

}  // namespace cubiq
