#include "weylrec/render.hpp"

#include <algorithm>
#include <sstream>

namespace weylrec {

namespace {

const char* kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                 "⁵", "⁶", "⁷", "⁸", "⁹"};

// "q", "q²", ... ; exponent 0 -> ""
std::string q_power(int k) {
    if (k == 0) return "";
    if (k == 1) return "q";
    return "q" + superscript(k);
}

// Compact polynomial like "1+q" (no spaces), used inside coefficients.
std::string poly_compact(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (!s.empty())
            s += neg ? "-" : "+";
        else if (neg)
            s += "-";
        std::string pw = q_power(k);
        if (a != 1 || pw.empty()) s += rational_to_string(a);
        s += pw;
    }
    return s;
}

// Coefficient in front of a basis symbol; empty string means coefficient 1.
std::string coeff_prefix(const RatFuncQ& c) {
    if (c.is_one()) return "";
    if (c.is_polynomial()) {
        PolyQ p = c.as_polynomial();
        int terms = 0;
        for (int k = 0; k <= p.degree(); ++k)
            if (p.coeff(k) != 0) ++terms;
        std::string body = poly_compact(p);
        if (terms > 1 || body.front() == '-') return "(" + body + ")·";
        return body + "·";
    }
    return "(" + poly_compact(c.num()) + ")/(" + poly_compact(c.den()) + ")·";
}

std::string spaced_terms(const PolyQ& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string pw = q_power(k);
        if (a != 1 || pw.empty()) s += rational_to_string(a);
        s += pw;
    }
    return s;
}

std::string partition_inline(const Partition& p) {
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.part(i));
    }
    return s;
}

}  // namespace

std::string superscript(int n) {
    if (n < 0) return "⁻" + superscript(-n);
    std::string digits = std::to_string(n), out;
    for (char d : digits) out += kSuperscripts[d - '0'];
    return out;
}

std::string poly_pretty(const PolyQ& p) { return spaced_terms(p); }

std::string series_pretty(const QSeries& s) {
    std::vector<Rational> v;
    for (int k = 0; k <= s.order(); ++k) v.push_back(s.coeff(k));
    return spaced_terms(PolyQ(std::move(v)));
}

std::string ratfunc_pretty(const RatFuncQ& f) {
    if (f.is_polynomial()) return spaced_terms(f.as_polynomial());
    return "(" + spaced_terms(f.num()) + ") / (" + spaced_terms(f.den()) + ")";
}

std::string msym_pretty(const SymFunc<RatFuncQ>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    if (f.twist > 0) os << "|x|" << superscript(-f.twist) << "·(";
    bool first = true;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << coeff_prefix(it->second) << "m[" << partition_inline(it->first) << "]";
    }
    if (f.twist > 0) os << ")";
    return os.str();
}

std::string eta_pretty(const EtaTable& eta) {
    if (eta.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = eta.coeffs.rbegin(); it != eta.coeffs.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << coeff_prefix(RatFuncQ(it->second)) << "s[(" << partition_inline(it->first.lambda)
           << ")," << it->first.ell << "]";
    }
    return os.str();
}

std::string character_pretty(const GradedCharacter& ch) {
    std::vector<std::pair<std::pair<int, DominantWeight>, Integer>> rows;
    for (auto& [key, mult] : ch.mults) rows.push_back({{key.second, key.first}, mult});
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (auto& [key, mult] : rows) {
        os << "(" << key.second.to_string() << "," << key.first << "): " << mult.get_str() << "\n";
    }
    return os.str();
}

std::string reciprocity_pretty(const std::vector<ReciprocityRow>& rows) {
    std::ostringstream os;
    for (auto& row : rows)
        os << "(" << row.mu.to_string() << "," << row.grade << "): " << row.mult.get_str() << "\n";
    return os.str();
}

std::string hilbert_pretty(const HilbertSeries& h) {
    if (h.kind == HilbertSeries::Kind::Exact) return ratfunc_pretty(h.exact);
    return series_pretty(h.truncated);
}

}  // namespace weylrec
