#include "weylrec/ratfunc.hpp"

#include <stdexcept>

namespace weylrec {

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    normalize();
}

void RatFuncQ::normalize() {
    if (num_.is_zero()) {
        den_ = PolyQ(1);
        return;
    }
    if (!den_.is_constant()) {
        PolyQ g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    // scale so den is primitive-integer with positive leading coefficient
    Rational c = den_.content();
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

PolyQ RatFuncQ::as_polynomial() const {
    if (!is_polynomial()) throw std::domain_error("RatFuncQ: not a polynomial");
    if (den_.is_one()) return num_;
    return num_.scaled(Rational(1) / den_.coeff(0));
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.den_ == b.den_) return RatFuncQ(a.num_ - b.num_, a.den_);
    return RatFuncQ(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero() || b.is_zero()) return RatFuncQ();
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
    if (b.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
    if (a.is_zero()) return RatFuncQ();
    return RatFuncQ(a.num_ * b.den_, a.den_ * b.num_);
}

Rational RatFuncQ::evaluate(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("RatFuncQ::evaluate: pole");
    return num_.evaluate(x) / d;
}

std::string RatFuncQ::to_string() const {
    if (is_polynomial()) return as_polynomial().to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace weylrec
