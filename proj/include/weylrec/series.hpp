#pragma once

#include <string>
#include <vector>

#include "weylrec/poly.hpp"
#include "weylrec/ratfunc.hpp"

namespace weylrec {

// Power series in q with exact rational coefficients, known through q^order.
// Binary operations carry the weaker of the two orders, so precision loss is
// always explicit in the result.
class QSeries {
public:
    // Default-constructed value is the exact zero of indeterminate order; it
    // behaves as the additive identity and absorbs under multiplication.
    QSeries() : order_(-1) {}
    explicit QSeries(int order) : order_(order), coeffs_(static_cast<size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
    }
    static QSeries constant(const Rational& c, int order);
    static QSeries from_poly(const PolyQ& p, int order);

    int order() const { return order_; }
    Rational coeff(int k) const {
        return (k >= 0 && k <= order_) ? coeffs_[static_cast<size_t>(k)] : Rational(0);
    }
    void set_coeff(int k, const Rational& c);
    bool is_zero() const;

    // Smallest k with nonzero coefficient; order()+1 when all stored
    // coefficients vanish.
    int valuation() const;
    bool coeffs_are_nonneg_integers() const;

    QSeries truncated(int new_order) const;  // new_order <= order

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    bool operator==(const QSeries&) const = default;

    QSeries scaled(const Rational& c) const;
    QSeries mul_poly(const PolyQ& p) const;
    // Reciprocal; requires nonzero constant term.
    QSeries inverse() const;
    QSeries div(const QSeries& b) const { return *this * b.inverse(); }
    QSeries div_poly(const PolyQ& p) const;

    bool agrees_with(const QSeries& o, int through) const;

    std::string to_string() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
};

// Power-series expansion of f at q=0, truncated at q^N. Rejects denominators
// vanishing at q=0.
QSeries series_from_ratfunc(const RatFuncQ& f, int N);

// 1/(q;q)_inf^k truncated at q^N; only factors (1-q^i) with i <= N matter.
QSeries pochhammer_inf_inverse_pow(int k, int N);

inline bool ring_is_zero(const QSeries& a) { return a.is_zero(); }
inline QSeries ring_scale(const QSeries& a, const Rational& s) { return a.scaled(s); }

}  // namespace weylrec
