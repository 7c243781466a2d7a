#pragma once

#include <string>
#include <vector>

#include "weylrec/rational.hpp"

namespace weylrec {

// Univariate polynomial in q with exact rational coefficients.
// Normal form has no trailing zero coefficients; degree() of zero is -1.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long c) { coeffs_.assign(1, Rational(c)); trim(); }
    PolyQ(const Rational& c) { coeffs_.assign(1, c); trim(); }
    explicit PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PolyQ monomial(const Rational& c, int k);
    static PolyQ q() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Rational coeff(int k) const {
        return (k >= 0 && k <= degree()) ? coeffs_[static_cast<size_t>(k)] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    PolyQ operator-() const;
    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }
    bool operator==(const PolyQ&) const = default;

    PolyQ scaled(const Rational& c) const;
    Rational evaluate(const Rational& x) const;

    // Quotient/remainder with remainder degree < divisor degree.
    static void divrem(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem);
    // Exact division; throws std::domain_error on a nonzero remainder.
    PolyQ divide_exact(const PolyQ& b) const;

    // gcd of rational contents, as a positive rational (0 for the zero poly).
    Rational content() const;
    // this / content(), with positive leading coefficient; integer coeffs.
    PolyQ primitive_part() const;

    std::string to_string() const;  // ascii, e.g. "1-q-q^2+q^3"

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic-reduced gcd convention: primitive with positive leading coefficient;
// gcd(0,0) = 0.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

// (q^k; q)_m = prod_{i=0}^{m-1} (1 - q^{k+i}); the empty product is 1.
PolyQ pochhammer_finite(int k, int m);
inline PolyQ pochhammer_qq(int m) { return pochhammer_finite(1, m); }

}  // namespace weylrec
