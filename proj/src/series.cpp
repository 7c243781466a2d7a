#include "weylrec/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylrec {

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::from_poly(const PolyQ& p, int order) {
    QSeries s(order);
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[static_cast<size_t>(k)] = p.coeff(k);
    return s;
}

void QSeries::set_coeff(int k, const Rational& c) {
    if (k < 0 || k > order_) throw std::out_of_range("QSeries::set_coeff");
    coeffs_[static_cast<size_t>(k)] = c;
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

int QSeries::valuation() const {
    for (int k = 0; k <= order_; ++k)
        if (coeffs_[static_cast<size_t>(k)] != 0) return k;
    return order_ + 1;
}

bool QSeries::coeffs_are_nonneg_integers() const {
    for (const auto& c : coeffs_)
        if (!is_nonneg_integer(c)) return false;
    return true;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("QSeries::truncated: cannot extend");
    QSeries s(new_order);
    for (int k = 0; k <= new_order; ++k) s.coeffs_[static_cast<size_t>(k)] = coeff(k);
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    if (a.order() < 0) return b;
    if (b.order() < 0) return a;
    QSeries s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s.set_coeff(k, a.coeff(k) + b.coeff(k));
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    if (b.order() < 0) return a;
    if (a.order() < 0) return -b;
    QSeries s(std::min(a.order(), b.order()));
    for (int k = 0; k <= s.order(); ++k) s.set_coeff(k, a.coeff(k) - b.coeff(k));
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.order() < 0 || b.order() < 0) return QSeries();
    QSeries s(std::min(a.order(), b.order()));
    for (int i = 0; i <= s.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= s.order(); ++j) {
            if (b.coeff(j) == 0) continue;
            s.set_coeff(i + j, s.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return s;
}

QSeries QSeries::scaled(const Rational& c) const {
    QSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

QSeries QSeries::mul_poly(const PolyQ& p) const {
    QSeries s(order_);
    for (int i = 0; i <= std::min(order_, p.degree()); ++i) {
        if (p.coeff(i) == 0) continue;
        for (int j = 0; i + j <= order_; ++j)
            s.coeffs_[static_cast<size_t>(i + j)] += p.coeff(i) * coeff(j);
    }
    return s;
}

QSeries QSeries::inverse() const {
    if (order_ < 0) throw std::invalid_argument("QSeries::inverse: uninitialized");
    Rational c0 = coeff(0);
    if (c0 == 0) throw std::domain_error("QSeries::inverse: zero constant term");
    QSeries inv(order_);
    inv.coeffs_[0] = Rational(1) / c0;
    for (int k = 1; k <= order_; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += coeff(j) * inv.coeffs_[static_cast<size_t>(k - j)];
        inv.coeffs_[static_cast<size_t>(k)] = -acc / c0;
    }
    return inv;
}

QSeries QSeries::div_poly(const PolyQ& p) const {
    return *this * QSeries::from_poly(p, order_).inverse();
}

bool QSeries::agrees_with(const QSeries& o, int through) const {
    if (through > order_ || through > o.order())
        throw std::invalid_argument("QSeries::agrees_with: order too small");
    for (int k = 0; k <= through; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string QSeries::to_string() const {
    std::ostringstream os;
    std::vector<Rational> v(coeffs_);
    os << PolyQ(std::move(v)).to_string() << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

QSeries series_from_ratfunc(const RatFuncQ& f, int N) {
    if (f.den().coeff(0) == 0)
        throw std::domain_error("series_from_ratfunc: pole at q=0");
    return QSeries::from_poly(f.num(), N).div_poly(f.den());
}

QSeries pochhammer_inf_inverse_pow(int k, int N) {
    if (k < 0) throw std::invalid_argument("pochhammer_inf_inverse_pow: k >= 0 required");
    QSeries s = QSeries::constant(1, N);
    if (k == 0) return s;
    for (int i = 1; i <= N; ++i) {
        // multiply by (1 - q^i)^{-k} = sum_j C(j+k-1, k-1) q^{ij}
        QSeries f(N);
        for (int j = 0; i * j <= N; ++j)
            f.set_coeff(i * j, Rational(binomial(j + k - 1, k - 1)));
        s *= f;
    }
    return s;
}

}  // namespace weylrec
