#include "weylrec/symfunc.hpp"

#include <algorithm>
#include <mutex>

namespace weylrec {

namespace {

std::mutex cache_mutex;

using MonoMap = std::map<std::vector<int>, Integer>;

// Quotient of P by (x_a - x_b); throws on nonzero remainder.
MonoMap divide_binomial(const MonoMap& P, int a, int b) {
    std::map<int, MonoMap> layers;
    for (auto& [e, c] : P) {
        std::vector<int> rest = e;
        int k = rest[static_cast<size_t>(a)];
        rest[static_cast<size_t>(a)] = 0;
        layers[k][rest] += c;
    }
    auto shift_b = [&](const MonoMap& m) {
        MonoMap out;
        for (auto& [e, c] : m) {
            std::vector<int> f = e;
            f[static_cast<size_t>(b)] += 1;
            out[f] += c;
        }
        return out;
    };
    auto add_into = [](MonoMap& dst, const MonoMap& src) {
        for (auto& [e, c] : src) {
            auto it = dst.find(e);
            if (it == dst.end())
                dst.emplace(e, c);
            else {
                it->second += c;
                if (it->second == 0) dst.erase(it);
            }
        }
    };
    int D = layers.empty() ? 0 : layers.rbegin()->first;
    std::map<int, MonoMap> quot;
    MonoMap carry;  // x_b * Q_k while walking down
    for (int k = D; k >= 1; --k) {
        MonoMap Qk1;  // Q_{k-1}
        auto it = layers.find(k);
        if (it != layers.end()) Qk1 = it->second;
        add_into(Qk1, carry);
        carry = shift_b(Qk1);
        if (!Qk1.empty()) quot[k - 1] = std::move(Qk1);
    }
    MonoMap rem;
    auto it0 = layers.find(0);
    if (it0 != layers.end()) rem = it0->second;
    add_into(rem, carry);
    for (auto& [e, c] : rem)
        if (c != 0) throw std::logic_error("bialternant division left a remainder");
    MonoMap out;
    for (auto& [k, m] : quot) {
        for (auto& [e, c] : m) {
            std::vector<int> f = e;
            f[static_cast<size_t>(k == 0 ? 0 : a)] += (k == 0 ? 0 : k);
            out[f] += c;
        }
    }
    return out;
}

MonoMap antisymmetrize(const std::vector<int>& exps, int r) {
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    MonoMap out;
    // iterate permutations with sign tracking via explicit enumeration
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
        // sign of perm
        int inv = 0;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        std::vector<int> mono(static_cast<size_t>(r), 0);
        for (int i = 0; i < r; ++i) mono[static_cast<size_t>(perm[static_cast<size_t>(i)])] = exps[static_cast<size_t>(i)];
        out[mono] += (inv % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::pair<int, Partition>, std::map<Partition, Integer>> schur_cache;
std::map<std::pair<int, Partition>, std::map<Partition, Integer>> power_cache;
std::map<std::pair<int, int>, PBasis> pbasis_cache;
std::map<int, std::vector<std::pair<std::vector<int>, long>>> density_cache;

std::map<Partition, Integer> compute_schur_m(const Partition& xi, int r) {
    if (r == 0) return {{Partition(), Integer(1)}};
    std::vector<int> staircase(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) staircase[static_cast<size_t>(i)] = xi.part(i) + (r - 1 - i);
    MonoMap num = antisymmetrize(staircase, r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) num = divide_binomial(num, i, j);
    std::map<Partition, Integer> out;
    for (auto& [e, c] : num) {
        bool sorted = true;
        for (int i = 0; i + 1 < r; ++i)
            if (e[static_cast<size_t>(i)] < e[static_cast<size_t>(i + 1)]) {
                sorted = false;
                break;
            }
        if (sorted) out.emplace(Partition(e), c);
    }
    return out;
}

std::map<Partition, Integer> compute_power_m(const Partition& xi, int rank) {
    Partition key = xi.trimmed();
    if (key.length() == 0) {
        return {{Partition().padded(rank), Integer(1)}};
    }
    int v = key.part(key.length() - 1);  // smallest nonzero part
    Partition rest(std::vector<int>(key.parts().begin(), key.parts().end() - 1));
    const auto& base = power_sum_m_expansion(rest, rank);
    long target_size = key.size();
    std::map<Partition, Integer> out;
    for (const Partition& beta : enumerate_partitions(rank, static_cast<int>(target_size))) {
        Integer acc = 0;
        for (int j = 0; j < rank; ++j) {
            if (beta.part(j) < v) continue;
            std::vector<int> src = beta.parts();
            src[static_cast<size_t>(j)] -= v;
            std::sort(src.begin(), src.end(), std::greater<int>());
            auto it = base.find(Partition(std::move(src)));
            if (it != base.end()) acc += it->second;
        }
        if (acc != 0) out.emplace(beta, acc);
    }
    return out;
}

}  // namespace

const std::map<Partition, Integer>& schur_m_expansion(const Partition& xi, int r) {
    Partition key = xi.padded(r);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = schur_cache.find({r, key});
    if (it != schur_cache.end()) return it->second;
    auto val = compute_schur_m(key, r);
    return schur_cache.emplace(std::make_pair(r, key), std::move(val)).first->second;
}

const std::map<Partition, Integer>& power_sum_m_expansion(const Partition& xi, int rank) {
    Partition key = xi.trimmed();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = power_cache.find({rank, key});
        if (it != power_cache.end()) return it->second;
    }
    auto val = compute_power_m(key, rank);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return power_cache.emplace(std::make_pair(rank, key), std::move(val)).first->second;
}

const PBasis& p_basis(int rank, int degree) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = pbasis_cache.find({rank, degree});
        if (it != pbasis_cache.end()) return it->second;
    }
    PBasis pb;
    pb.parts = enumerate_partitions(rank, degree);
    std::reverse(pb.parts.begin(), pb.parts.end());  // increasing lex
    for (size_t i = 0; i < pb.parts.size(); ++i) pb.index[pb.parts[i]] = static_cast<int>(i);
    size_t n = pb.parts.size();
    pb.p_in_m.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const auto& exp = power_sum_m_expansion(pb.parts[i], rank);
        for (auto& [mu, c] : exp) pb.p_in_m[i][pb.index.at(mu)] = c;
    }
    // invert the triangular transition to get each m in the p's
    pb.m_in_p.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t row = 0; row < n; ++row) {
        for (size_t k = 0; k < n; ++k) {
            Rational rhs = (k == row) ? Rational(1) : Rational(0);
            for (size_t j = 0; j < k; ++j) {
                if (pb.m_in_p[row][j] == 0) continue;
                auto it = pb.p_in_m[j].find(static_cast<int>(k));
                if (it == pb.p_in_m[j].end()) continue;
                rhs -= pb.m_in_p[row][j] * Rational(it->second);
            }
            auto diag = pb.p_in_m[k].find(static_cast<int>(k));
            if (diag == pb.p_in_m[k].end())
                throw std::logic_error("p_basis: singular transition (basis corruption)");
            pb.m_in_p[row][k] = rhs / Rational(diag->second);
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return pbasis_cache.emplace(std::make_pair(rank, degree), std::move(pb)).first->second;
}

const std::vector<std::pair<std::vector<int>, long>>& ct_density(int rank) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = density_cache.find(rank);
    if (it != density_cache.end()) return it->second;
    std::map<std::vector<int>, long> acc;
    acc[std::vector<int>(static_cast<size_t>(rank), 0)] = 1;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            for (int dir = 0; dir < 2; ++dir) {
                // multiply by (1 - x_a/x_b)
                int a = dir == 0 ? i : j;
                int b = dir == 0 ? j : i;
                std::map<std::vector<int>, long> next;
                for (auto& [e, c] : acc) {
                    next[e] += c;
                    std::vector<int> f = e;
                    f[static_cast<size_t>(a)] += 1;
                    f[static_cast<size_t>(b)] -= 1;
                    next[f] -= c;
                }
                acc = std::move(next);
            }
        }
    }
    std::vector<std::pair<std::vector<int>, long>> out;
    for (auto& [e, c] : acc)
        if (c != 0) out.emplace_back(e, c);
    return density_cache.emplace(rank, std::move(out)).first->second;
}

SymFunc<Rational> monomial_sym(const Partition& xi, int r) {
    SymFunc<Rational> f{r, 0, {}};
    f.terms.emplace(xi.padded(r), Rational(1));
    return f;
}

SymFunc<Rational> newton_p(const Partition& xi, int r) {
    SymFunc<Rational> f{r, 0, {}};
    for (auto& [key, c] : power_sum_m_expansion(xi, r)) f.terms.emplace(key, Rational(c));
    return f;
}

SymFunc<Rational> schur(const Partition& xi, int r) {
    SymFunc<Rational> f{r, 0, {}};
    for (auto& [key, c] : schur_m_expansion(xi, r)) f.terms.emplace(key, Rational(c));
    return f;
}

SymFunc<Rational> schur_ell(const Partition& lambda, int ell, int r) {
    Partition lam = lambda.padded(r);
    if (lam.part(r - 1) != 0)
        throw std::invalid_argument("schur_ell: lambda must lie in Par(r-1)");
    SymFunc<Rational> f{r, 0, {}};
    if (ell >= 0) {
        for (auto& [key, c] : schur_m_expansion(lam, r)) f.terms.emplace(key.shifted(ell), Rational(c));
    } else {
        f.twist = -ell;
        for (auto& [key, c] : schur_m_expansion(lam, r)) f.terms.emplace(key, Rational(c));
    }
    sf_normalize(f);
    return f;
}

SymFunc<Rational> cauchy_R(int r, int D, bool primed) {
    if (D < 0) throw std::invalid_argument("cauchy_R: negative degree bound");
    SymFunc<Rational> f{r, 0, {}};
    for (int d = 0; d <= D; ++d) {
        for (const Partition& xi : enumerate_partitions(r, d)) {
            Integer c = 1;
            for (int i = 0; i < r; ++i) c *= binomial(xi.part(i) + r - 1, r - 1);
            f.terms.emplace(xi, Rational(c));
        }
    }
    if (primed) {
        // multiply by (1 - |x|)
        SymFunc<Rational> shifted{r, 0, {}};
        for (auto& [key, c] : f.terms) {
            if (key.size() + r > D) continue;
            shifted.terms.emplace(key.shifted(1), c);
        }
        f = sf_sub(f, shifted);
    }
    return f;
}

}  // namespace weylrec
