#pragma once

#include <string>

#include "weylrec/poly.hpp"

namespace weylrec {

// Element of Q(q) in normal form: gcd(num, den) = 1 and den is a primitive
// integer polynomial with positive leading coefficient (den = 1 whenever the
// value is polynomial).
class RatFuncQ {
public:
    RatFuncQ() : num_(), den_(1) {}
    RatFuncQ(long c) : num_(c), den_(1) {}
    RatFuncQ(const Rational& c) : num_(c), den_(1) {}
    RatFuncQ(const PolyQ& p) : num_(p), den_(1) {}
    RatFuncQ(PolyQ num, PolyQ den);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    // Throws std::domain_error when the value is not polynomial.
    PolyQ as_polynomial() const;

    RatFuncQ operator-() const;
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    RatFuncQ& operator/=(const RatFuncQ& o) { return *this = *this / o; }
    bool operator==(const RatFuncQ&) const = default;

    // Value at q = x; throws std::domain_error on a pole.
    Rational evaluate(const Rational& x) const;

    std::string to_string() const;

private:
    void normalize();
    PolyQ num_, den_;
};

inline bool ring_is_zero(const RatFuncQ& a) { return a.is_zero(); }
inline RatFuncQ ring_scale(const RatFuncQ& a, const Rational& s) {
    return a * RatFuncQ(s);
}

}  // namespace weylrec
