#include "weylrec/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "weylrec/json_io.hpp"
#include "weylrec/parallel.hpp"

namespace weylrec {

namespace {

std::mutex mac_mutex;

// ---------- stable-rank Gram-Schmidt ----------

struct StableDegree {
    std::vector<Partition> parts;  // all partitions of d, padded to stable rank, increasing lex
    std::vector<std::vector<RatFuncQ>> m_coords;
    std::vector<std::vector<RatFuncQ>> p_coords;
    std::vector<RatFuncQ> norms;
};

PolyQ power_sum_weight(const Partition& rho, bool q_zero) {
    PolyQ w{PolyQ(Rational(z_factor(rho)))};
    if (!q_zero) {
        for (int i = 0; i < rho.length(); ++i) {
            int part = rho.part(i);
            if (part > 0) w *= PolyQ(1) - PolyQ::monomial(1, part);
        }
    }
    return w;
}

StableDegree build_stable_degree(int stable_rank, int degree, bool q_zero) {
    const PBasis& pb = p_basis(stable_rank, degree);
    size_t n = pb.parts.size();
    std::vector<PolyQ> w(n);
    for (size_t i = 0; i < n; ++i) w[i] = power_sum_weight(pb.parts[i], q_zero);

    StableDegree sd;
    sd.parts = pb.parts;
    sd.m_coords.assign(n, {});
    sd.p_coords.assign(n, {});
    sd.norms.assign(n, RatFuncQ());
    for (size_t k = 0; k < n; ++k) {
        std::vector<RatFuncQ> mvec(n), pvec(n);
        mvec[k] = RatFuncQ(1);
        for (size_t rho = 0; rho < n; ++rho)
            if (pb.m_in_p[k][rho] != 0) pvec[rho] = RatFuncQ(Rational(pb.m_in_p[k][rho]));
        for (size_t j = 0; j < k; ++j) {
            RatFuncQ ip;
            for (size_t rho = 0; rho < n; ++rho) {
                if (pb.m_in_p[k][rho] == 0 || sd.p_coords[j][rho].is_zero()) continue;
                ip += ring_scale(sd.p_coords[j][rho] * RatFuncQ(w[rho]), pb.m_in_p[k][rho]);
            }
            if (ip.is_zero()) continue;
            RatFuncQ c = ip / sd.norms[j];
            for (size_t idx = 0; idx < n; ++idx) {
                if (!sd.m_coords[j][idx].is_zero()) mvec[idx] -= c * sd.m_coords[j][idx];
                if (!sd.p_coords[j][idx].is_zero()) pvec[idx] -= c * sd.p_coords[j][idx];
            }
        }
        RatFuncQ norm;
        for (size_t rho = 0; rho < n; ++rho) {
            if (pvec[rho].is_zero()) continue;
            norm += pvec[rho] * pvec[rho] * RatFuncQ(w[rho]);
        }
        if (norm.is_zero())
            throw std::logic_error("qwhittaker: zero norm encountered (table corruption)");
        sd.m_coords[k] = std::move(mvec);
        sd.p_coords[k] = std::move(pvec);
        sd.norms[k] = std::move(norm);
    }
    return sd;
}

void append_degree(QWhittakerTable& t, const StableDegree& sd) {
    size_t n = sd.parts.size();
    for (size_t k = 0; k < n; ++k) {
        if (sd.parts[k].nonzero_length() > t.rank) continue;
        Partition xi = sd.parts[k].padded(t.rank);
        SymFunc<RatFuncQ> entry{t.rank, 0, {}};
        for (size_t idx = 0; idx < n; ++idx) {
            if (sd.m_coords[k][idx].is_zero()) continue;
            if (sd.parts[idx].nonzero_length() > t.rank) continue;
            entry.terms.emplace(sd.parts[idx].padded(t.rank), sd.m_coords[k][idx]);
        }
        t.entries.emplace(xi, std::move(entry));
        t.norms.emplace(xi, sd.norms[k]);
    }
}

}  // namespace

const SymFunc<RatFuncQ>& QWhittakerTable::entry(const Partition& xi) const {
    auto it = entries.find(xi.padded(rank));
    if (it == entries.end()) throw std::out_of_range("QWhittakerTable: missing entry " + xi.to_string());
    return it->second;
}

const RatFuncQ& QWhittakerTable::norm(const Partition& xi) const {
    auto it = norms.find(xi.padded(rank));
    if (it == norms.end()) throw std::out_of_range("QWhittakerTable: missing norm " + xi.to_string());
    return it->second;
}

QWhittakerTable qwhittaker(int rank, int max_size, bool q_zero) {
    if (rank < 1) throw std::invalid_argument("qwhittaker: rank >= 1 required");
    if (max_size < 0) throw std::invalid_argument("qwhittaker: max_size >= 0 required");
    QWhittakerTable t;
    t.rank = rank;
    t.max_size = max_size;
    t.q_zero = q_zero;
    int stable_rank = std::max(rank, max_size);
    for (int d = 0; d <= max_size; ++d) append_degree(t, build_stable_degree(stable_rank, d, q_zero));
    return t;
}

QWhittakerTable qwhittaker_extend(const QWhittakerTable& t, int new_max_size) {
    if (new_max_size <= t.max_size) return t;
    QWhittakerTable out = t;
    out.max_size = new_max_size;
    int stable_rank = std::max(t.rank, new_max_size);
    for (int d = t.max_size + 1; d <= new_max_size; ++d)
        append_degree(out, build_stable_degree(stable_rank, d, t.q_zero));
    return out;
}

RatFuncQ scalar_qw(const SymFunc<RatFuncQ>& f, const SymFunc<RatFuncQ>& g, bool q_zero) {
    if (f.rank != g.rank) throw std::invalid_argument("scalar_qw: rank mismatch");
    if (f.twist != 0 || g.twist != 0)
        throw std::invalid_argument("scalar_qw: polynomial inputs required");
    auto pf = to_p_basis(f);
    auto pg = to_p_basis(g);
    RatFuncQ acc;
    for (auto& [rho, cf] : pf) {
        auto it = pg.find(rho);
        if (it == pg.end()) continue;
        acc += cf * it->second * RatFuncQ(power_sum_weight(rho, q_zero));
    }
    return acc;
}

RatFuncQ norm_closed_form(const Partition& xi, int rank) {
    PolyQ p(1);
    for (int i = 0; i < rank; ++i) {
        int diff = xi.part(i) - xi.part(i + 1);
        p *= pochhammer_qq(diff);
    }
    return RatFuncQ(p);
}

EtaTable eta_coeffs(const Partition& mu, int rank, const QWhittakerTable& table) {
    Partition mu_p = mu.padded(rank);
    if (mu_p.part(rank - 1) != 0)
        throw std::invalid_argument("eta_coeffs: mu must lie in Par(rank-1)");
    const auto& entry = table.entry(mu_p);
    EtaTable out{mu_p, {}};
    for (auto& [idx, coeff] : to_schur_basis(entry)) {
        if (!coeff.is_polynomial())
            throw std::logic_error("eta_coeffs: non-polynomial Schur coefficient (arithmetic bug)");
        if (idx.ell < 0)
            throw std::logic_error("eta_coeffs: negative |x|-power in a polynomial expansion");
        out.coeffs.emplace(idx, coeff.as_polynomial());
    }
    return out;
}

// ---------- truncated-coefficient table ----------

namespace {

std::map<std::tuple<int, int, int>, SymFunc<QSeries>> whittaker_h_cache;
std::map<std::tuple<int, int, Partition>, SymFunc<QSeries>> gprod_cache;

// W_k(y; q) = sum over monomials of degree k of y^alpha / prod_j (q;q)_{alpha_j}
const SymFunc<QSeries>& whittaker_h(int rank, int k, int order) {
    std::lock_guard<std::mutex> lock(mac_mutex);
    auto key = std::make_tuple(rank, k, order);
    auto it = whittaker_h_cache.find(key);
    if (it != whittaker_h_cache.end()) return it->second;
    SymFunc<QSeries> f{rank, 0, {}};
    for (const Partition& lam : enumerate_partitions(rank, k)) {
        PolyQ den(1);
        for (int i = 0; i < rank; ++i) den *= pochhammer_qq(lam.part(i));
        f.terms.emplace(lam, QSeries::from_poly(den, order).inverse());
    }
    return whittaker_h_cache.emplace(key, std::move(f)).first->second;
}

SymFunc<QSeries> g_product(int rank, int order, const Partition& psi) {
    Partition key = psi.trimmed();
    {
        std::lock_guard<std::mutex> lock(mac_mutex);
        auto it = gprod_cache.find({rank, order, key});
        if (it != gprod_cache.end()) return it->second;
    }
    SymFunc<QSeries> val;
    if (key.length() == 0) {
        val = sf_constant<QSeries>(rank, QSeries::constant(1, order));
    } else {
        int last = key.part(key.length() - 1);
        Partition head_key(std::vector<int>(key.parts().begin(), key.parts().end() - 1));
        SymFunc<QSeries> head = g_product(rank, order, head_key);
        val = multiply(head, whittaker_h(rank, last, order));
    }
    std::lock_guard<std::mutex> lock(mac_mutex);
    return gprod_cache.emplace(std::make_tuple(rank, order, key), val).first->second;
}

}  // namespace

const std::map<Partition, QSeries>& QWSeriesTable::entry(const Partition& xi) const {
    auto it = entries.find(xi.padded(rank));
    if (it == entries.end()) throw std::out_of_range("QWSeriesTable: missing entry " + xi.to_string());
    return it->second;
}

SymFunc<QSeries> QWSeriesTable::entry_symfunc(const Partition& xi) const {
    SymFunc<QSeries> f{rank, 0, {}};
    for (auto& [key, c] : entry(xi)) f.terms.emplace(key, c);
    return f;
}

QWSeriesTable qwhittaker_series(int rank, int max_size, int order) {
    if (rank < 1) throw std::invalid_argument("qwhittaker_series: rank >= 1 required");
    QWSeriesTable t;
    t.rank = rank;
    t.max_size = max_size;
    t.order = order;
    for (int d = 0; d <= max_size; ++d) {
        std::vector<Partition> parts = enumerate_partitions(rank, d);
        std::reverse(parts.begin(), parts.end());  // increasing lex
        size_t n = parts.size();
        std::vector<std::vector<QSeries>> gamma(n, std::vector<QSeries>(n));
        for (size_t i = 0; i < n; ++i) {
            SymFunc<QSeries> g = g_product(rank, order, parts[i]);
            for (size_t j = 0; j < n; ++j) {
                auto it = g.terms.find(parts[j]);
                gamma[i][j] = (it == g.terms.end()) ? QSeries(order) : it->second;
            }
        }
        // Gamma = u^T diag(b) u with u supported on lex-lower columns; peel
        // from the lex-largest index.
        for (size_t k = n; k-- > 0;) {
            QSeries b = gamma[k][k];
            if (b.coeff(0) == 0)
                throw std::logic_error("qwhittaker_series: vanishing diagonal (table corruption)");
            QSeries binv = b.inverse();
            std::vector<QSeries> u(k + 1);
            for (size_t j = 0; j < k; ++j) u[j] = gamma[k][j] * binv;
            u[k] = QSeries::constant(1, order);
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j <= i; ++j) {
                    QSeries delta = b * u[i] * u[j];
                    if (!delta.is_zero()) gamma[i][j] -= delta;
                }
            std::map<Partition, QSeries> row;
            for (size_t j = 0; j <= k; ++j)
                if (!u[j].is_zero()) row.emplace(parts[j], u[j]);
            t.norms.emplace(parts[k], binv);
            t.entries.emplace(parts[k], std::move(row));
        }
    }
    return t;
}

QSeries principal_specialize_series(const QWSeriesTable& t, const Partition& xi) {
    QSeries acc(t.order);
    for (auto& [key, c] : t.entry(xi)) acc += c.scaled(Rational(orbit_size(key)));
    return acc;
}

QSeries eta_sum_series(const QWSeriesTable& t, const Partition& mu, const Partition& lambda) {
    Partition mu_p = mu.padded(t.rank);
    long diff = mu_p.size() - lambda.size();
    if (diff < 0 || diff % t.rank != 0) return QSeries(t.order);
    int ell = static_cast<int>(diff / t.rank);
    auto sch = to_schur_basis(t.entry_symfunc(mu_p));
    auto it = sch.find(SchurIndex{lambda.padded(std::max(0, t.rank - 1)), ell});
    return it == sch.end() ? QSeries(t.order) : it->second;
}

// ---------- kernel expansions ----------

namespace {

// x-degree coefficients of prod_{j=0}^{order} (1 - x q^j)^{-rank}
struct VariableFactor {
    int max_deg = -1;
    std::vector<QSeries> g;
};
std::map<std::pair<int, int>, VariableFactor> factor_cache;

std::vector<QSeries> kernel_variable_factor(int rank, int max_deg, int order) {
    {
        std::lock_guard<std::mutex> lock(mac_mutex);
        auto it = factor_cache.find({rank, order});
        if (it != factor_cache.end() && it->second.max_deg >= max_deg) return it->second.g;
    }
    std::vector<QSeries> g(static_cast<size_t>(max_deg) + 1, QSeries(order));
    for (int k = 0; k <= max_deg; ++k)
        g[static_cast<size_t>(k)].set_coeff(0, Rational(binomial(k + rank - 1, rank - 1)));
    for (int j = 1; j <= order; ++j) {
        // multiply by (1 - x q^j)^{-rank} = sum_k C(k+rank-1, rank-1) x^k q^{jk}
        std::vector<QSeries> next(static_cast<size_t>(max_deg) + 1, QSeries(order));
        for (int m = 0; m <= max_deg; ++m) {
            QSeries acc(order);
            for (int k = 0; k <= m && j * k <= order; ++k) {
                Rational c(binomial(k + rank - 1, rank - 1));
                const QSeries& src = g[static_cast<size_t>(m - k)];
                for (int s = 0; s + j * k <= order; ++s) {
                    Rational v = src.coeff(s);
                    if (v == 0) continue;
                    acc.set_coeff(s + j * k, acc.coeff(s + j * k) + v * c);
                }
            }
            next[static_cast<size_t>(m)] = std::move(acc);
        }
        g = std::move(next);
    }
    std::lock_guard<std::mutex> lock(mac_mutex);
    auto& slot = factor_cache[{rank, order}];
    if (slot.max_deg < max_deg) slot = VariableFactor{max_deg, g};
    return slot.g;
}

PolyQ poly_truncate(const PolyQ& p, int order) {
    std::vector<Rational> v;
    for (int k = 0; k <= std::min(order, p.degree()); ++k) v.push_back(p.coeff(k));
    return PolyQ(std::move(v));
}

// coefficients of y^t in prod_{i=first}^{order} (1 - q^i y), truncated at q^order
std::vector<PolyQ> product_one_minus_qy(int first, int max_t, int order) {
    std::vector<PolyQ> A(static_cast<size_t>(max_t) + 1);
    A[0] = PolyQ(1);
    for (int i = first; i <= order; ++i) {
        for (int t = std::min(max_t, i - first + 1); t >= 1; --t) {
            PolyQ shifted = A[static_cast<size_t>(t - 1)] * PolyQ::monomial(1, i);
            A[static_cast<size_t>(t)] = poly_truncate(A[static_cast<size_t>(t)] - shifted, order);
        }
    }
    return A;
}

std::map<std::tuple<int, int, int, int>, std::map<SchurIndex, QSeries>> slice_cache;

}  // namespace

std::map<Partition, QSeries> kernel_component(KernelKind kind, int rank, int degree, int order) {
    std::vector<QSeries> g = kernel_variable_factor(rank, degree, order);
    int max_t = degree / rank;
    std::vector<PolyQ> A = product_one_minus_qy(kind == KernelKind::Q ? 1 : 0, max_t, order);
    std::map<Partition, QSeries> out;
    for (const Partition& xi : enumerate_partitions(rank, degree)) {
        QSeries acc(order);
        for (int t = 0; t <= xi.part(rank - 1); ++t) {
            if (t > max_t || A[static_cast<size_t>(t)].is_zero()) continue;
            QSeries prod = QSeries::constant(1, order);
            for (int i = 0; i < rank; ++i) prod *= g[static_cast<size_t>(xi.part(i) - t)];
            acc += prod.mul_poly(A[static_cast<size_t>(t)]);
        }
        if (!acc.is_zero()) out.emplace(xi, std::move(acc));
    }
    return out;
}

namespace {

const std::map<SchurIndex, QSeries>& kernel_schur_slice(KernelKind kind, int rank, int degree, int order) {
    auto key = std::make_tuple(kind == KernelKind::Q ? 0 : 1, rank, degree, order);
    {
        std::lock_guard<std::mutex> lock(mac_mutex);
        auto it = slice_cache.find(key);
        if (it != slice_cache.end()) return it->second;
    }
    SymFunc<QSeries> f{rank, 0, kernel_component(kind, rank, degree, order)};
    auto val = to_schur_basis(f);
    std::lock_guard<std::mutex> lock(mac_mutex);
    return slice_cache.emplace(key, std::move(val)).first->second;
}

}  // namespace

QSeries phi_series(const Partition& lambda, int ell, int rank, int order) {
    if (ell < 0) return QSeries(order);
    Partition lam = lambda.padded(std::max(0, rank - 1));
    int degree = static_cast<int>(lam.size()) + ell * rank;
    const auto& slice = kernel_schur_slice(KernelKind::Q, rank, degree, order);
    auto it = slice.find(SchurIndex{lam, ell});
    return it == slice.end() ? QSeries(order) : it->second;
}

QSeries psi_series(const Partition& lambda, int ell, int rank, int order) {
    if (ell < 0) throw std::invalid_argument("psi_series: ell >= 0 required");
    return phi_series(lambda, ell, rank, order) - phi_series(lambda, ell - 1, rank, order);
}

// ---------- verifications ----------

Report verify_norms(int rank, int max_size) {
    ReportBuilder rb("norms", {{"rank", rank}, {"max_size", max_size}});
    int stable_rank = std::max(rank, max_size);
    std::map<Partition, RatFuncQ> norms_seen;
    for (int d = 0; d <= max_size; ++d) {
        StableDegree sd = build_stable_degree(stable_rank, d, false);
        size_t n = sd.parts.size();
        std::vector<PolyQ> w(n);
        for (size_t i = 0; i < n; ++i) w[i] = power_sum_weight(sd.parts[i], false);
        std::vector<size_t> kept;
        for (size_t k = 0; k < n; ++k)
            if (sd.parts[k].nonzero_length() <= rank) kept.push_back(k);
        for (size_t k : kept) {
            Partition xi = sd.parts[k].padded(rank);
            norms_seen.emplace(xi, sd.norms[k]);
            RatFuncQ closed = norm_closed_form(xi, rank);
            rb.cell(sd.norms[k] == closed, [&] {
                return nlohmann::json{{"kind", "norm_closed_form"},
                                      {"xi", to_json(xi)},
                                      {"expected", to_json(closed)},
                                      {"got", to_json(sd.norms[k])}};
            });
        }
        for (size_t a = 0; a < kept.size(); ++a) {
            for (size_t b = a + 1; b < kept.size(); ++b) {
                size_t i = kept[a], j = kept[b];
                RatFuncQ ip;
                for (size_t rho = 0; rho < n; ++rho) {
                    if (sd.p_coords[i][rho].is_zero() || sd.p_coords[j][rho].is_zero()) continue;
                    ip += sd.p_coords[i][rho] * sd.p_coords[j][rho] * RatFuncQ(w[rho]);
                }
                rb.cell(ip.is_zero(), [&] {
                    return nlohmann::json{{"kind", "orthogonality"},
                                          {"xi", to_json(sd.parts[i].padded(rank))},
                                          {"psi", to_json(sd.parts[j].padded(rank))},
                                          {"got", to_json(ip)}};
                });
            }
        }
    }
    // norm recursion for partitions with all parts positive
    for (auto& [xi, norm] : norms_seen) {
        if (xi.part(rank - 1) == 0) continue;
        Partition lower = xi.shifted(-1);
        auto it = norms_seen.find(lower);
        if (it == norms_seen.end()) continue;
        RatFuncQ expect = it->second * RatFuncQ(PolyQ(1) - PolyQ::monomial(1, xi.part(rank - 1)));
        rb.cell(norm == expect, [&] {
            return nlohmann::json{{"kind", "norm_recursion"},
                                  {"xi", to_json(xi)},
                                  {"expected", to_json(expect)},
                                  {"got", to_json(norm)}};
        });
    }
    return rb.finish();
}

Report verify_orthonormality(int rank, int max_degree, int jobs) {
    ReportBuilder rb("orthonormality", {{"rank", rank}, {"max_degree", max_degree}});
    std::vector<SchurIndex> indices;
    for (int sz = 0; sz <= max_degree; ++sz) {
        for (const Partition& lam : enumerate_partitions(std::max(1, rank - 1), sz)) {
            if (rank >= 2 && lam.nonzero_length() > rank - 1) continue;
            Partition lam_r = lam.padded(std::max(0, rank - 1));
            for (int ell = -1; sz + ell * rank <= max_degree; ++ell)
                indices.push_back(SchurIndex{lam_r, ell});
        }
        if (rank == 1) break;  // Par(0) has only the empty partition
    }
    std::vector<SymFunc<Rational>> basis;
    basis.reserve(indices.size());
    for (auto& idx : indices) basis.push_back(schur_ell(idx.lambda, idx.ell, rank));
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = i; j < indices.size(); ++j) pairs.emplace_back(i, j);
    std::vector<Rational> got(pairs.size());
    parallel_for(static_cast<long>(pairs.size()), jobs, [&](long k) {
        auto [i, j] = pairs[static_cast<size_t>(k)];
        got[static_cast<size_t>(k)] = ct_inner(basis[i], basis[j]);
    });
    for (size_t k = 0; k < pairs.size(); ++k) {
        auto [i, j] = pairs[k];
        Rational expect = (indices[i] == indices[j]) ? 1 : 0;
        rb.cell(got[k] == expect, [&] {
            return nlohmann::json{{"a", indices[i].to_string()},
                                  {"b", indices[j].to_string()},
                                  {"expected", rational_to_string(expect)},
                                  {"got", rational_to_string(got[k])}};
        });
    }
    return rb.finish();
}

Report verify_cauchy_kernels(int rank, int max_degree) {
    ReportBuilder rb("cauchy-kernels", {{"rank", rank}, {"max_degree", max_degree}});
    for (int primed = 0; primed < 2; ++primed) {
        SymFunc<Rational> lhs = cauchy_R(rank, max_degree, primed != 0);
        SymFunc<Rational> rhs = sf_zero<Rational>(rank);
        int lam_len = primed ? std::max(0, rank - 1) : rank;
        for (int d = 0; d <= max_degree; ++d) {
            if (primed && rank == 1) {
                if (d == 0) rhs = sf_add(rhs, sf_constant<Rational>(rank, Rational(1)));
                continue;
            }
            for (const Partition& lam : enumerate_partitions(std::max(1, lam_len), d)) {
                if (lam.nonzero_length() > lam_len) continue;
                SymFunc<Rational> s = schur(lam.padded(rank), rank);
                rhs = sf_add(rhs, sf_scale(s, principal_specialize(s)));
            }
        }
        SymFunc<Rational> diff = sf_sub(lhs, rhs);
        rb.cell(diff.is_zero(), [&] {
            return nlohmann::json{{"kernel", primed ? "R'" : "R"},
                                  {"mismatch_terms", static_cast<long>(diff.terms.size())}};
        });
    }
    return rb.finish();
}

Report verify_mult(int rank, int max_deg_f) {
    ReportBuilder rb("mult", {{"rank", rank}, {"max_deg_f", max_deg_f}});
    std::vector<Partition> lambdas;
    for (int sz = 0; sz <= 2; ++sz)
        for (const Partition& lam : enumerate_partitions(std::max(1, rank - 1), sz))
            if (rank == 1 ? lam.is_zero() : lam.nonzero_length() <= rank - 1)
                lambdas.push_back(lam.padded(std::max(0, rank - 1)));
    for (int df = 0; df <= max_deg_f; ++df) {
        for (const Partition& delta : enumerate_partitions(rank, df)) {
            SymFunc<Rational> f = monomial_sym(delta, rank);
            Rational f1 = principal_specialize(f);
            for (const Partition& lam : lambdas) {
                for (int ell = df; ell <= df + 1; ++ell) {
                    int degree = static_cast<int>(lam.size()) + ell * rank;
                    SymFunc<Rational> fR = multiply(f, cauchy_R(rank, degree, false));
                    Rational got = ct_inner(schur_ell(lam, ell, rank), fR);
                    Rational expect = f1 * principal_specialize(schur(lam.padded(rank), rank));
                    rb.cell(got == expect, [&] {
                        return nlohmann::json{{"f", to_json(delta)},
                                              {"lambda", to_json(lam)},
                                              {"ell", ell},
                                              {"expected", rational_to_string(expect)},
                                              {"got", rational_to_string(got)}};
                    });
                }
            }
        }
    }
    return rb.finish();
}

Report verify_lim(int rank, int order, int max_m, const std::vector<Partition>& lambdas) {
    ReportBuilder rb("lim", {{"rank", rank}, {"order", order}, {"max_m", max_m}});
    int eff_order = std::max(order, max_m);
    QSeries c = pochhammer_inf_inverse_pow(rank * rank - 1, eff_order);
    for (const Partition& lam : lambdas) {
        Rational dim = principal_specialize(schur(lam.padded(rank), rank));
        for (int m = 0; m <= max_m; ++m) {
            for (int ell = rank * m; ell <= rank * m + 1; ++ell) {
                QSeries f = phi_series(lam, ell, rank, eff_order);
                Rational got = f.coeff(m);
                Rational expect = c.coeff(m) * dim;
                rb.cell(got == expect, [&] {
                    return nlohmann::json{{"lambda", to_json(lam)},
                                          {"m", m},
                                          {"ell", ell},
                                          {"expected", rational_to_string(expect)},
                                          {"got", rational_to_string(got)}};
                });
            }
        }
    }
    return rb.finish();
}

Report verify_lhs(int rank, int max_degree, int order) {
    ReportBuilder rb("lhs", {{"rank", rank}, {"max_degree", max_degree}, {"order", order}});
    std::map<Partition, int> max_ell_seen;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& slice = kernel_schur_slice(KernelKind::LHS, rank, d, order);
        // enumerate expected cells of this degree
        for (int lam_sz = d % rank; lam_sz <= d; lam_sz += rank) {
            int ell = (d - lam_sz) / rank;
            for (const Partition& lam : enumerate_partitions(std::max(1, rank - 1), lam_sz)) {
                if (rank >= 2 && lam.nonzero_length() > rank - 1) continue;
                if (rank == 1 && !lam.is_zero()) continue;
                Partition lam_r = lam.padded(std::max(0, rank - 1));
                QSeries expect = psi_series(lam_r, ell, rank, order);
                auto it = slice.find(SchurIndex{lam_r, ell});
                QSeries got = (it == slice.end()) ? QSeries(order) : it->second;
                rb.cell(got.agrees_with(expect, order), [&] {
                    return nlohmann::json{{"kind", "schur_coefficient"},
                                          {"lambda", to_json(lam_r)},
                                          {"ell", ell},
                                          {"expected", expect.to_string()},
                                          {"got", got.to_string()}};
                });
                int val_bound = ell / rank;
                rb.cell(expect.valuation() >= std::min(val_bound, order + 1), [&] {
                    return nlohmann::json{{"kind", "psi_valuation"},
                                          {"lambda", to_json(lam_r)},
                                          {"ell", ell},
                                          {"required", val_bound},
                                          {"got", expect.valuation()}};
                });
                auto& slot = max_ell_seen[lam_r];
                slot = std::max(slot, ell);
            }
        }
    }
    QSeries cser = pochhammer_inf_inverse_pow(rank * rank - 1, order);
    for (auto& [lam, L] : max_ell_seen) {
        Rational dim = principal_specialize(schur(lam.padded(rank), rank));
        QSeries partial = phi_series(lam, L, rank, order);
        QSeries target = cser.scaled(dim);
        int through = std::min(order, L / rank);
        rb.cell(partial.agrees_with(target, through), [&] {
            return nlohmann::json{{"kind", "partial_sum"},
                                  {"lambda", to_json(lam)},
                                  {"L", L},
                                  {"through", through},
                                  {"expected", target.to_string()},
                                  {"got", partial.to_string()}};
        });
    }
    return rb.finish();
}

Report verify_cauchy_t0(int rank, int max_degree, int order) {
    ReportBuilder rb("cauchy-t0", {{"rank", rank}, {"max_degree", max_degree}, {"order", order}});
    QWhittakerTable table = qwhittaker(rank, max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        auto lhs = kernel_component(KernelKind::LHS, rank, d, order);
        std::map<Partition, QSeries> rhs;
        if (rank == 1) {
            if (d == 0) rhs.emplace(Partition({0}), QSeries::constant(1, order));
        } else {
            for (const Partition& lam : enumerate_partitions(rank - 1, d)) {
                Partition lam_r = lam.padded(rank);
                const auto& P = table.entry(lam_r);
                RatFuncQ spec = principal_specialize(P);
                QSeries coeff = series_from_ratfunc(spec / norm_closed_form(lam, rank - 1), order);
                for (auto& [key, c] : P.terms) {
                    QSeries add = series_from_ratfunc(c, order) * coeff;
                    auto it = rhs.find(key);
                    if (it == rhs.end())
                        rhs.emplace(key, add);
                    else
                        it->second += add;
                }
            }
        }
        for (const Partition& key : enumerate_partitions(rank, d)) {
            auto gl = lhs.find(key);
            auto gr = rhs.find(key);
            QSeries vl = gl == lhs.end() ? QSeries(order) : gl->second;
            QSeries vr = gr == rhs.end() ? QSeries(order) : gr->second;
            rb.cell(vl.agrees_with(vr, order), [&] {
                return nlohmann::json{{"degree", d},
                                      {"monomial", to_json(key)},
                                      {"lhs", vl.to_string()},
                                      {"rhs", vr.to_string()}};
            });
        }
    }
    return rb.finish();
}

Report verify_crucial(const Partition& lambda, int rank, int order, int mu_bound) {
    Partition lam = lambda.padded(std::max(0, rank - 1));
    int bound = mu_bound >= 0 ? mu_bound : static_cast<int>(lam.size()) + rank * order;
    ReportBuilder rb("crucial", {{"rank", rank},
                                 {"order", order},
                                 {"lambda", to_json(lam)},
                                 {"mu_bound", bound}});
    QWSeriesTable T = qwhittaker_series(rank, bound + rank, order);
    bool etas_ok = true;
    long eta_cells = 0;
    auto partial_sum = [&](int B) {
        QSeries acc(order);
        for (int sz = static_cast<int>(lam.size()); sz <= B; sz += rank) {
            for (const Partition& mu : enumerate_partitions(std::max(1, rank - 1), sz)) {
                if (rank >= 2 && mu.nonzero_length() > rank - 1) continue;
                if (rank == 1 && !mu.is_zero()) continue;
                Partition mu_r = mu.padded(rank);
                auto sch = to_schur_basis(T.entry_symfunc(mu_r));
                for (auto& [idx, c] : sch) {
                    ++eta_cells;
                    if (!c.coeffs_are_nonneg_integers()) etas_ok = false;
                }
                int ell = (sz - static_cast<int>(lam.size())) / rank;
                auto it = sch.find(SchurIndex{lam, ell});
                if (it == sch.end()) continue;
                QSeries denom_inv =
                    QSeries::from_poly(norm_closed_form(mu, std::max(0, rank - 1)).as_polynomial(), order)
                        .inverse();
                acc += it->second * principal_specialize_series(T, mu_r) * denom_inv;
            }
        }
        return acc;
    };
    QSeries rhs1 = partial_sum(bound);
    QSeries rhs2 = partial_sum(bound + rank);
    rb.note("stabilization_bounds", nlohmann::json::array({bound, bound + rank}));
    rb.note("eta_prefixes_nonneg", etas_ok);
    rb.note("eta_cells_checked", eta_cells);
    Rational dim = principal_specialize(schur(lam.padded(rank), rank));
    QSeries lhs = pochhammer_inf_inverse_pow(rank * rank - 1, order).scaled(dim);
    if (!rhs1.agrees_with(rhs2, order)) {
        rb.inconclusive(nlohmann::json{{"kind", "stabilization"},
                                       {"bound", bound},
                                       {"rerun_bound", bound + rank},
                                       {"first", rhs1.to_string()},
                                       {"second", rhs2.to_string()}});
        return rb.finish();
    }
    for (int k = 0; k <= order; ++k) {
        rb.cell(lhs.coeff(k) == rhs2.coeff(k), [&] {
            return nlohmann::json{{"coefficient", k},
                                  {"expected", rational_to_string(lhs.coeff(k))},
                                  {"got", rational_to_string(rhs2.coeff(k))}};
        });
    }
    if (!etas_ok) rb.fail(nlohmann::json{{"kind", "eta_positivity"}});
    return rb.finish();
}

}  // namespace weylrec
