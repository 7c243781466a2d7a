#include "weylrec/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace weylrec {

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyQ PolyQ::monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("PolyQ::monomial: negative exponent");
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
    PolyQ r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(v));
}

PolyQ PolyQ::scaled(const Rational& c) const {
    if (c == 0) return PolyQ();
    PolyQ r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational PolyQ::evaluate(const Rational& x) const {
    Rational v = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
    return v;
}

void PolyQ::divrem(const PolyQ& a, const PolyQ& b, PolyQ& quot, PolyQ& rem) {
    if (b.is_zero()) throw std::domain_error("PolyQ::divrem: division by zero");
    quot = PolyQ();
    rem = a;
    Rational lead = b.leading();
    std::vector<Rational> qc;
    int dq = rem.degree() - b.degree();
    if (dq < 0) return;
    qc.assign(static_cast<size_t>(dq) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int k = rem.degree() - b.degree();
        Rational c = rem.leading() / lead;
        qc[static_cast<size_t>(k)] = c;
        rem -= b * PolyQ::monomial(c, k);
    }
    quot = PolyQ(std::move(qc));
}

PolyQ PolyQ::divide_exact(const PolyQ& b) const {
    PolyQ q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("PolyQ::divide_exact: nonzero remainder");
    return q;
}

Rational PolyQ::content() const {
    if (is_zero()) return Rational(0);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        Integer n = c.get_num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

PolyQ PolyQ::primitive_part() const {
    if (is_zero()) return PolyQ();
    Rational c = content();
    if (leading() < 0) c = -c;
    return scaled(Rational(1) / c);
}

std::string PolyQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (k == 0) {
            os << rational_to_string(a);
        } else {
            if (a != 1) os << rational_to_string(a) << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero()) return b.is_zero() ? PolyQ() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    // Primitive PRS over the integer parts keeps coefficient growth tame.
    PolyQ f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder of f by g
        PolyQ r = f;
        Rational lead = g.leading();
        while (!r.is_zero() && r.degree() >= g.degree()) {
            int k = r.degree() - g.degree();
            Rational c = r.leading() / lead;
            r -= g * PolyQ::monomial(c, k);
        }
        f = g;
        g = r.is_zero() ? PolyQ() : r.primitive_part();
    }
    return f.primitive_part();
}

PolyQ pochhammer_finite(int k, int m) {
    if (k < 1) throw std::invalid_argument("pochhammer_finite: k >= 1 required");
    if (m < 0) throw std::invalid_argument("pochhammer_finite: m >= 0 required");
    PolyQ p(1);
    for (int i = 0; i < m; ++i) {
        p *= PolyQ(1) - PolyQ::monomial(1, k + i);
    }
    return p;
}

}  // namespace weylrec
