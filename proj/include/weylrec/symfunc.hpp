#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylrec/partition.hpp"
#include "weylrec/rational.hpp"

namespace weylrec {

// Index of the orthonormal Schur-type basis element |x|^ell * s_lambda of the
// symmetric Laurent ring in r variables; lambda has length r-1.
struct SchurIndex {
    Partition lambda;
    int ell = 0;
    auto operator<=>(const SchurIndex&) const = default;
    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < lambda.length(); ++i) {
            if (i) s += ",";
            s += std::to_string(lambda.part(i));
        }
        return s + ")," + std::to_string(ell);
    }
};

// Symmetric Laurent polynomial in `rank` variables over a coefficient ring R,
// stored as an m-basis expansion of the polynomial part together with a
// global factor |x|^{-twist} (twist >= 0 in normal form; every Laurent object
// here is a |x| power times a polynomial).
template <class R>
struct SymFunc {
    int rank = 0;
    int twist = 0;
    std::map<Partition, R> terms;  // keys padded to length `rank`

    bool is_zero() const { return terms.empty(); }
    // x-degree of a single term
    long term_degree(const Partition& key) const { return key.size() - static_cast<long>(twist) * rank; }
};

template <class R>
void sf_normalize(SymFunc<R>& f) {
    for (auto it = f.terms.begin(); it != f.terms.end();)
        it = ring_is_zero(it->second) ? f.terms.erase(it) : std::next(it);
    if (f.terms.empty()) {
        f.twist = 0;
        return;
    }
    if (f.twist > 0) {
        int c = f.twist;
        for (auto& [key, coeff] : f.terms) c = std::min(c, key.part(f.rank - 1));
        if (c > 0) {
            std::map<Partition, R> shifted;
            for (auto& [key, coeff] : f.terms) shifted.emplace(key.shifted(-c), coeff);
            f.terms = std::move(shifted);
            f.twist -= c;
        }
    }
}

template <class R>
SymFunc<R> sf_zero(int rank) {
    return SymFunc<R>{rank, 0, {}};
}

template <class R>
SymFunc<R> sf_constant(int rank, const R& c) {
    SymFunc<R> f{rank, 0, {}};
    if (!ring_is_zero(c)) f.terms.emplace(Partition().padded(rank), c);
    return f;
}

namespace detail {
// Re-expresses f over the given larger twist.
template <class R>
SymFunc<R> with_twist(const SymFunc<R>& f, int twist) {
    if (twist < f.twist) throw std::logic_error("with_twist: cannot lower twist");
    if (twist == f.twist) return f;
    SymFunc<R> g{f.rank, twist, {}};
    for (auto& [key, coeff] : f.terms) g.terms.emplace(key.shifted(twist - f.twist), coeff);
    return g;
}
}  // namespace detail

template <class R>
SymFunc<R> sf_add(const SymFunc<R>& a, const SymFunc<R>& b) {
    if (a.rank != b.rank) throw std::invalid_argument("sf_add: rank mismatch");
    int t = std::max(a.twist, b.twist);
    SymFunc<R> fa = detail::with_twist(a, t), fb = detail::with_twist(b, t);
    for (auto& [key, coeff] : fb.terms) {
        auto it = fa.terms.find(key);
        if (it == fa.terms.end())
            fa.terms.emplace(key, coeff);
        else
            it->second = it->second + coeff;
    }
    sf_normalize(fa);
    return fa;
}

template <class R>
SymFunc<R> sf_neg(const SymFunc<R>& a) {
    SymFunc<R> r = a;
    for (auto& [key, coeff] : r.terms) coeff = R() - coeff;
    return r;
}

template <class R>
SymFunc<R> sf_sub(const SymFunc<R>& a, const SymFunc<R>& b) {
    return sf_add(a, sf_neg(b));
}

template <class R>
SymFunc<R> sf_scale(const SymFunc<R>& a, const R& c) {
    SymFunc<R> r = a;
    for (auto& [key, coeff] : r.terms) coeff = coeff * c;
    sf_normalize(r);
    return r;
}

template <class R, class S, class Fn>
SymFunc<S> map_coeffs(const SymFunc<R>& f, Fn&& fn) {
    SymFunc<S> g{f.rank, f.twist, {}};
    for (auto& [key, coeff] : f.terms) g.terms.emplace(key, fn(coeff));
    sf_normalize(g);
    return g;
}

template <class R>
bool sf_eq(const SymFunc<R>& a, const SymFunc<R>& b) {
    if (a.rank != b.rank) return false;
    SymFunc<R> d = sf_sub(a, b);
    return d.is_zero();
}

// Product; expands orbits of one factor against the m-keys of the other and
// keeps only weakly decreasing exponent sums (the sorted orbit
// representatives of the result).
template <class R>
SymFunc<R> multiply(const SymFunc<R>& a, const SymFunc<R>& b) {
    if (a.rank != b.rank) throw std::invalid_argument("multiply: rank mismatch");
    int r = a.rank;
    SymFunc<R> out{r, a.twist + b.twist, {}};
    for (auto& [ka, ca] : a.terms) {
        auto perms = distinct_permutations(ka);
        for (auto& [kb, cb] : b.terms) {
            R prod = ca * cb;
            if (ring_is_zero(prod)) continue;
            for (auto& beta : distinct_permutations(kb)) {
                for (auto& alpha : perms) {
                    bool sorted = true;
                    std::vector<int> sum(static_cast<size_t>(r));
                    for (int i = 0; i < r; ++i) {
                        sum[static_cast<size_t>(i)] = alpha[static_cast<size_t>(i)] + beta[static_cast<size_t>(i)];
                        if (i > 0 && sum[static_cast<size_t>(i - 1)] < sum[static_cast<size_t>(i)]) {
                            sorted = false;
                            break;
                        }
                    }
                    if (!sorted) continue;
                    Partition key(std::move(sum));
                    auto it = out.terms.find(key);
                    if (it == out.terms.end())
                        out.terms.emplace(std::move(key), prod);
                    else
                        it->second = it->second + prod;
                }
            }
        }
    }
    sf_normalize(out);
    return out;
}

// f(x_1^{-1}, ..., x_r^{-1})
template <class R>
SymFunc<R> star(const SymFunc<R>& f) {
    int r = f.rank;
    // m_xi(1/x) = |x|^{-xi_1} m_{xi_hat},  xi_hat_i = xi_1 - xi_{r+1-i}
    struct Item {
        Partition key;
        int twist;
        R coeff;
    };
    std::vector<Item> items;
    int max_twist = 0;
    for (auto& [key, coeff] : f.terms) {
        int top = key.part(0);
        std::vector<int> hat(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) hat[static_cast<size_t>(i)] = top - key.part(r - 1 - i);
        int t = top - f.twist;
        max_twist = std::max(max_twist, t);
        items.push_back(Item{Partition(std::move(hat)), t, coeff});
    }
    max_twist = std::max(max_twist, 0);
    SymFunc<R> out{r, max_twist, {}};
    for (auto& item : items) {
        Partition key = item.key.shifted(max_twist - item.twist);
        auto it = out.terms.find(key);
        if (it == out.terms.end())
            out.terms.emplace(std::move(key), item.coeff);
        else
            it->second = it->second + item.coeff;
    }
    sf_normalize(out);
    return out;
}

// ---- numeric (Rational-coefficient) basis constructors ----

SymFunc<Rational> monomial_sym(const Partition& xi, int r);
SymFunc<Rational> newton_p(const Partition& xi, int r);
SymFunc<Rational> schur(const Partition& xi, int r);
// |x|^ell s_lambda; lambda in Par(r-1) (last part zero when padded to r).
SymFunc<Rational> schur_ell(const Partition& lambda, int ell, int r);
// Expansion of R_r = prod (1-x_i)^{-r} (or R'_r = (1-|x|) R_r) through total
// degree D.
SymFunc<Rational> cauchy_R(int r, int D, bool primed);

// m-basis expansion of s_xi with integer coefficients (cached).
const std::map<Partition, Integer>& schur_m_expansion(const Partition& xi, int r);

// Sorted m-basis coefficients of p_xi in `rank` variables (cached).
const std::map<Partition, Integer>& power_sum_m_expansion(const Partition& xi, int rank);

// Per-degree power-sum basis data: partitions of `degree` with at most `rank`
// parts in increasing lex order, rows of p-in-m counts, and the inverse
// (m-in-p, rational).
struct PBasis {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::map<int, Integer>> p_in_m;       // row i: p_{parts[i]} in m
    std::vector<std::vector<Rational>> m_in_p;        // row i: m_{parts[i]} in p
};
const PBasis& p_basis(int rank, int degree);

// Expansion of prod_{i<j} (1 - x_i/x_j)(1 - x_j/x_i) as (exponent, coeff)
// pairs (cached per rank).
const std::vector<std::pair<std::vector<int>, long>>& ct_density(int rank);

// ---- generic conversions and pairings ----

template <class R>
std::map<std::vector<int>, R> laurent_expand(const SymFunc<R>& f, bool invert) {
    std::map<std::vector<int>, R> out;
    for (auto& [key, coeff] : f.terms) {
        for (auto& alpha : distinct_permutations(key)) {
            std::vector<int> e(alpha);
            for (auto& x : e) x -= f.twist;
            if (invert)
                for (auto& x : e) x = -x;
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(std::move(e), coeff);
            else
                it->second = it->second + coeff;
        }
    }
    return out;
}

// Constant-term pairing (f, g) = (1/r!) [ f g* prod_{i<j}(1-x_i/x_j)(1-x_j/x_i) ]_0.
// Bilinear and symmetric; inhomogeneous inputs are fine (cross-degree pieces
// contribute nothing).
template <class R>
R ct_inner(const SymFunc<R>& f, const SymFunc<R>& g) {
    if (f.rank != g.rank) throw std::invalid_argument("ct_inner: rank mismatch");
    int r = f.rank;
    auto F = laurent_expand(f, /*invert=*/false);
    auto G = laurent_expand(g, /*invert=*/true);
    const auto& delta = ct_density(r);
    R acc{};
    std::vector<int> target(static_cast<size_t>(r));
    for (auto& [u, cu] : F) {
        for (auto& [v, cv] : delta) {
            for (int i = 0; i < r; ++i)
                target[static_cast<size_t>(i)] = -u[static_cast<size_t>(i)] - v[static_cast<size_t>(i)];
            auto it = G.find(target);
            if (it == G.end()) continue;
            acc = acc + ring_scale(cu * it->second, Rational(cv));
        }
    }
    return ring_scale(acc, Rational(1) / Rational(factorial(r)));
}

// Evaluation at x_1 = ... = x_r = 1.
template <class R>
R principal_specialize(const SymFunc<R>& f) {
    R acc{};
    for (auto& [key, coeff] : f.terms) acc = acc + ring_scale(coeff, Rational(orbit_size(key)));
    return acc;
}

// Exact expansion over the power-sum basis (partitions of each degree with at
// most `rank` parts). Requires a polynomial input (twist 0).
template <class R>
std::map<Partition, R> to_p_basis(const SymFunc<R>& f) {
    if (f.twist != 0) throw std::invalid_argument("to_p_basis: polynomial input required");
    std::map<long, std::map<Partition, R>> by_degree;
    for (auto& [key, coeff] : f.terms) by_degree[key.size()][key] = coeff;
    std::map<Partition, R> out;
    for (auto& [d, slice] : by_degree) {
        const PBasis& pb = p_basis(f.rank, static_cast<int>(d));
        std::vector<R> c(pb.parts.size(), R{});
        for (size_t i = 0; i < pb.parts.size(); ++i) {
            R rhs{};
            auto it = slice.find(pb.parts[i]);
            if (it != slice.end()) rhs = it->second;
            // subtract contributions of already-solved p's
            for (size_t k = 0; k < i; ++k) {
                if (ring_is_zero(c[k])) continue;
                auto jt = pb.p_in_m[k].find(static_cast<int>(i));
                if (jt == pb.p_in_m[k].end()) continue;
                rhs = rhs - ring_scale(c[k], Rational(jt->second));
            }
            auto diag = pb.p_in_m[i].find(static_cast<int>(i));
            if (diag == pb.p_in_m[i].end())
                throw std::logic_error("to_p_basis: singular transition (basis corruption)");
            c[i] = ring_scale(rhs, Rational(1) / Rational(diag->second));
        }
        for (size_t i = 0; i < pb.parts.size(); ++i)
            if (!ring_is_zero(c[i])) out.emplace(pb.parts[i], c[i]);
    }
    return out;
}

// Exact expansion over { |x|^ell s_lambda }. Works degree by degree from the
// lex-largest m-key using the unitriangularity of Schur in m.
template <class R>
std::map<SchurIndex, R> to_schur_basis(const SymFunc<R>& f) {
    int r = f.rank;
    std::map<long, std::map<Partition, R>> by_degree;
    for (auto& [key, coeff] : f.terms) by_degree[key.size()][key] = coeff;
    std::map<SchurIndex, R> out;
    for (auto& [d, slice] : by_degree) {
        auto& work = slice;
        while (!work.empty()) {
            auto top = std::prev(work.end());
            Partition xi = top->first;
            R c = top->second;
            work.erase(top);
            if (ring_is_zero(c)) continue;
            const auto& sm = schur_m_expansion(xi, r);
            for (auto& [key, icoeff] : sm) {
                if (key == xi) continue;
                auto it = work.find(key);
                R delta = ring_scale(c, Rational(icoeff));
                if (it == work.end())
                    work.emplace(key, R() - delta);
                else
                    it->second = it->second - delta;
            }
            int base = xi.part(r - 1);
            std::vector<int> lam(static_cast<size_t>(std::max(0, r - 1)));
            for (int i = 0; i < r - 1; ++i) lam[static_cast<size_t>(i)] = xi.part(i) - base;
            SchurIndex idx{Partition(std::move(lam)), base - f.twist};
            out[idx] = c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = ring_is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

// Reconstruction from a Schur-basis expansion (mostly for round-trip tests).
template <class R>
SymFunc<R> from_schur_basis(const std::map<SchurIndex, R>& coeffs, int r) {
    SymFunc<R> acc = sf_zero<R>(r);
    for (auto& [idx, c] : coeffs) {
        SymFunc<Rational> base = schur_ell(idx.lambda, idx.ell, r);
        SymFunc<R> lifted = map_coeffs<Rational, R>(base, [&](const Rational& a) { return ring_scale(c, a); });
        acc = sf_add(acc, lifted);
    }
    return acc;
}

// Restricts a higher-rank expansion to `new_rank` variables: m-keys with more
// than new_rank nonzero parts vanish, the rest lose their zero padding.
template <class R>
SymFunc<R> restrict_rank(const SymFunc<R>& f, int new_rank) {
    if (f.twist != 0) throw std::invalid_argument("restrict_rank: polynomial input required");
    SymFunc<R> out{new_rank, 0, {}};
    for (auto& [key, coeff] : f.terms)
        if (key.nonzero_length() <= new_rank) out.terms.emplace(key.padded(new_rank), coeff);
    sf_normalize(out);
    return out;
}

}  // namespace weylrec
