// Test-only reference computations, kept independent of the library paths
// they are used to check.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "weylrec/macdonald.hpp"
#include "weylrec/partition.hpp"
#include "weylrec/rational.hpp"
#include "weylrec/symfunc.hpp"

namespace oracles {

using namespace weylrec;

// Number of partitions of n with at most k parts, by the classical
// recurrence p(n,k) = p(n-k,k) + p(n,k-1).
inline long dp_partition_count(int n, int k) {
    if (n < 0) return 0;
    std::vector<std::vector<long>> p(static_cast<size_t>(n) + 1,
                                     std::vector<long>(static_cast<size_t>(k) + 1, 0));
    for (int j = 0; j <= k; ++j) p[0][static_cast<size_t>(j)] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            long without = p[static_cast<size_t>(i)][static_cast<size_t>(j - 1)];
            long with = (i >= j) ? p[static_cast<size_t>(i - j)][static_cast<size_t>(j)] : 0;
            p[static_cast<size_t>(i)][static_cast<size_t>(j)] = without + with;
        }
    return p[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// Coefficients of prod_{i>=1} (1-q^i)^{-colors} through q^N, by dynamic
// programming over colored part multiplicities.
inline std::vector<Integer> dp_colored_partition_counts(int colors, int N) {
    std::vector<Integer> c(static_cast<size_t>(N) + 1, Integer(0));
    c[0] = 1;
    for (int part = 1; part <= N; ++part) {
        for (int rep = 0; rep < colors; ++rep) {
            for (int n = part; n <= N; ++n)
                c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - part)];
        }
    }
    return c;
}

// Weyl dimension formula for sl_r.
inline Integer weyl_dim_product(const Partition& xi, int r) {
    Partition lam = xi.padded(r);
    Integer num = 1, den = 1;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            num *= lam.part(i) - lam.part(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

// Dimension of V(1)^{tensor m} for sl_2 by iterated Clebsch-Gordan
// decomposition (multiset of highest weights).
inline Integer sl2_tensor_power_dim(int m) {
    std::map<int, Integer> mult{{0, Integer(1)}};  // highest weight -> multiplicity
    for (int step = 0; step < m; ++step) {
        std::map<int, Integer> next;
        for (auto& [hw, count] : mult) {
            next[hw + 1] += count;
            if (hw >= 1) next[hw - 1] += count;
        }
        mult = std::move(next);
    }
    Integer dim = 0;
    for (auto& [hw, count] : mult) dim += count * (hw + 1);
    return dim;
}

// Plain Gram-Schmidt over whole m-basis SymFunc objects in a stable rank,
// restricted to `rank` afterwards. Exercises none of the coordinate-vector
// machinery inside qwhittaker().
struct TextbookTable {
    std::map<Partition, SymFunc<RatFuncQ>> entries;
    std::map<Partition, RatFuncQ> norms;
};

inline TextbookTable textbook_qwhittaker(int rank, int max_size, bool q_zero = false) {
    TextbookTable out;
    int stable = std::max(rank, max_size);
    for (int d = 0; d <= max_size; ++d) {
        std::vector<Partition> parts = enumerate_partitions(std::max(stable, 1), d);
        std::reverse(parts.begin(), parts.end());  // increasing lex
        std::vector<SymFunc<RatFuncQ>> ortho;
        std::vector<RatFuncQ> norms;
        for (const Partition& xi : parts) {
            SymFunc<RatFuncQ> v =
                map_coeffs<Rational, RatFuncQ>(monomial_sym(xi, stable),
                                               [](const Rational& c) { return RatFuncQ(c); });
            for (size_t j = 0; j < ortho.size(); ++j) {
                RatFuncQ c = scalar_qw(v, ortho[j], q_zero) / norms[j];
                if (c.is_zero()) continue;
                v = sf_sub(v, sf_scale(ortho[j], c));
            }
            norms.push_back(scalar_qw(v, v, q_zero));
            ortho.push_back(std::move(v));
        }
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k].nonzero_length() > rank) continue;
            out.entries.emplace(parts[k].padded(rank), restrict_rank(ortho[k], rank));
            out.norms.emplace(parts[k].padded(rank), norms[k]);
        }
    }
    return out;
}

// Deterministic random symmetric Laurent polynomial with small support.
inline SymFunc<Rational> random_symfunc(std::mt19937& rng, int rank, int max_deg, int max_twist) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    std::uniform_int_distribution<int> twist_dist(0, max_twist);
    SymFunc<Rational> f = sf_zero<Rational>(rank);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        int d = deg_dist(rng);
        auto parts = enumerate_partitions(rank, d);
        const Partition& xi = parts[rng() % parts.size()];
        int c = coeff_dist(rng);
        if (c == 0) c = 1;
        SymFunc<Rational> term = sf_scale(monomial_sym(xi, rank), Rational(c));
        f = sf_add(f, term);
    }
    f.twist = twist_dist(rng);
    sf_normalize(f);
    return f;
}

inline PolyQ random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    std::vector<Rational> c(static_cast<size_t>(max_deg) + 1);
    for (auto& x : c) x = coeff_dist(rng);
    return PolyQ(std::move(c));
}

}  // namespace oracles
