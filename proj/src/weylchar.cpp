#include "weylrec/weylchar.hpp"

#include <algorithm>

#include "weylrec/json_io.hpp"
#include "weylrec/parallel.hpp"

namespace weylrec {

QSeries HilbertSeries::as_series(int order) const {
    if (kind == Kind::Truncated) {
        if (truncated.order() < order)
            throw std::invalid_argument("HilbertSeries::as_series: order not available");
        return truncated.truncated(order);
    }
    return series_from_ratfunc(exact, order);
}

Integer weyl_dim(const Partition& lambda, int rank) {
    Partition lam = lambda.padded(rank);
    Integer num = 1, den = 1;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            num *= lam.part(i) - lam.part(j) + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

GradedCharacter local_weyl_character(const DominantWeight& lw, int rank, const QWhittakerTable& table) {
    Partition xi = weight_to_partition(lw, rank);
    EtaTable eta = eta_coeffs(xi, rank, table);
    GradedCharacter ch;
    ch.rank = rank;
    for (auto& [idx, poly] : eta.coeffs) {
        DominantWeight mu = partition_to_weight(idx.lambda, rank);
        for (int k = 0; k <= poly.degree(); ++k) {
            Rational c = poly.coeff(k);
            if (c == 0) continue;
            if (!is_nonneg_integer(c))
                throw std::logic_error("local_weyl_character: multiplicity not a nonnegative integer");
            ch.mults[{mu, k}] += c.get_num();
        }
    }
    return ch;
}

HilbertSeries hilbert_local(const DominantWeight& lw, int rank, const QWhittakerTable& table) {
    Partition xi = weight_to_partition(lw, rank);
    RatFuncQ spec = principal_specialize(table.entry(xi.padded(rank)));
    if (!spec.is_polynomial())
        throw std::logic_error("hilbert_local: specialization is not a polynomial (arithmetic bug)");
    PolyQ p = spec.as_polynomial();
    for (int k = 0; k <= p.degree(); ++k)
        if (!is_nonneg_integer(p.coeff(k)))
            throw std::logic_error("hilbert_local: negative or non-integer coefficient");
    return HilbertSeries::make_exact(spec);
}

HilbertSeries hilbert_global(const DominantWeight& lw, int rank, int order, const QWhittakerTable& table) {
    HilbertSeries local = hilbert_local(lw, rank, table);
    QSeries s = series_from_ratfunc(local.exact, order);
    for (int c : lw.coords())
        if (c > 0) s = s.div_poly(pochhammer_qq(c));
    return HilbertSeries::make_truncated(std::move(s));
}

HilbertSeries hilbert_projective(const DominantWeight& lw, int rank, int order) {
    Partition xi = weight_to_partition(lw, rank);
    QSeries s = pochhammer_inf_inverse_pow(rank * rank - 1, order).scaled(Rational(weyl_dim(xi, rank)));
    return HilbertSeries::make_truncated(std::move(s));
}

std::vector<DominantWeight> enumerate_weights(int rank, int max_xi_size) {
    std::vector<DominantWeight> out;
    for (int sz = 0; sz <= max_xi_size; ++sz) {
        // Within a size class, increasing lex on xi refines dominance, so a
        // weight never precedes another one it exceeds by a positive root sum.
        std::vector<Partition> xis = enumerate_partitions(std::max(1, rank - 1), sz);
        std::reverse(xis.begin(), xis.end());
        for (const Partition& xi : xis) {
            if (rank == 1) {
                if (sz == 0) out.push_back(DominantWeight(std::vector<int>{}));
                continue;
            }
            if (xi.nonzero_length() > rank - 1) continue;
            out.push_back(partition_to_weight(xi.padded(rank - 1), rank));
        }
    }
    return out;
}

std::vector<ReciprocityRow> reciprocity_multiplicities(const DominantWeight& lw, int rank,
                                                       int max_grade, int mu_size_bound) {
    Partition xi_lambda = weight_to_partition(lw, rank);
    QWSeriesTable T = qwhittaker_series(rank, mu_size_bound, max_grade);
    std::vector<ReciprocityRow> rows;
    for (const DominantWeight& mu : enumerate_weights(rank, mu_size_bound)) {
        Partition xi_mu = weight_to_partition(mu, rank);
        QSeries mults = eta_sum_series(T, xi_mu.padded(rank), xi_lambda);
        for (int s = 0; s <= max_grade; ++s) {
            Rational c = mults.coeff(s);
            if (c == 0) continue;
            if (!is_nonneg_integer(c))
                throw std::logic_error("reciprocity_multiplicities: non-integer multiplicity");
            rows.push_back(ReciprocityRow{mu, s, c.get_num()});
        }
    }
    return rows;
}

Report verify_reciprocity(const DominantWeight& lw, int rank, int order, int mu_bound, int jobs) {
    Partition xi_lambda = weight_to_partition(lw, rank);
    int bound = mu_bound >= 0 ? mu_bound : static_cast<int>(xi_lambda.size()) + rank * order;
    ReportBuilder rb("reciprocity", {{"rank", rank},
                                     {"order", order},
                                     {"weight", to_json(lw)},
                                     {"mu_bound", bound}});
    QWSeriesTable T = qwhittaker_series(rank, bound + rank, order);
    std::vector<Partition> mus;
    for (int sz = static_cast<int>(xi_lambda.size()) % rank; sz <= bound + rank; sz += rank) {
        for (const Partition& mu : enumerate_partitions(std::max(1, rank - 1), sz)) {
            if (rank >= 2 && mu.nonzero_length() > rank - 1) continue;
            if (rank == 1 && !mu.is_zero()) continue;
            mus.push_back(mu);
        }
    }
    struct MuTerm {
        QSeries plain;    // (sum_s mult_s q^s) * H(W(mu,0))
        QSeries grouped;  // sum_s mult_s * (q^s H(W(mu,0)))  — same series, regrouped
        bool etas_ok = true;
        bool hilbert_ok = true;
    };
    std::vector<MuTerm> terms(mus.size());
    parallel_for(static_cast<long>(mus.size()), jobs, [&](long k) {
        const Partition& mu = mus[static_cast<size_t>(k)];
        MuTerm& term = terms[static_cast<size_t>(k)];
        Partition mu_r = mu.padded(rank);
        auto sch = to_schur_basis(T.entry_symfunc(mu_r));
        for (auto& [idx, c] : sch)
            if (!c.coeffs_are_nonneg_integers()) term.etas_ok = false;
        QSeries loc = principal_specialize_series(T, mu_r);
        if (!loc.coeffs_are_nonneg_integers()) term.hilbert_ok = false;
        long ddiff = mu_r.size() - xi_lambda.size();
        if (ddiff < 0 || ddiff % rank != 0) return;
        auto it = sch.find(SchurIndex{xi_lambda, static_cast<int>(ddiff / rank)});
        if (it == sch.end()) return;
        const QSeries& mults = it->second;
        QSeries hg = loc;
        DominantWeight mu_w = partition_to_weight(mu, rank);
        for (int c : mu_w.coords())
            if (c > 0) hg = hg.div_poly(pochhammer_qq(c));
        term.plain = mults * hg;
        QSeries grouped(order);
        for (int s = 0; s <= order; ++s) {
            Rational m = mults.coeff(s);
            if (m == 0) continue;
            grouped += hg.mul_poly(PolyQ::monomial(m, s));
        }
        term.grouped = grouped;
    });
    bool etas_ok = true, hilberts_ok = true;
    QSeries rhs1(order), rhs2(order), rhs2_grouped(order);
    for (size_t k = 0; k < mus.size(); ++k) {
        etas_ok = etas_ok && terms[k].etas_ok;
        hilberts_ok = hilberts_ok && terms[k].hilbert_ok;
        if (terms[k].plain.order() < 0) continue;
        rhs2 += terms[k].plain;
        rhs2_grouped += terms[k].grouped;
        if (mus[k].size() <= bound) rhs1 += terms[k].plain;
    }
    rb.note("stabilization_bounds", nlohmann::json::array({bound, bound + rank}));
    rb.note("eta_prefixes_nonneg", etas_ok);
    rb.note("hilbert_prefixes_nonneg", hilberts_ok);
    rb.cell(rhs2.agrees_with(rhs2_grouped, order), [&] {
        return nlohmann::json{{"kind", "grouping_consistency"},
                              {"per_grade", rhs2_grouped.to_string()},
                              {"generating_function", rhs2.to_string()}};
    });
    if (!rhs1.agrees_with(rhs2, order)) {
        rb.inconclusive(nlohmann::json{{"kind", "stabilization"},
                                       {"bound", bound},
                                       {"rerun_bound", bound + rank},
                                       {"first", rhs1.to_string()},
                                       {"second", rhs2.to_string()}});
        return rb.finish();
    }
    QSeries lhs = hilbert_projective(lw, rank, order).truncated;
    for (int k = 0; k <= order; ++k) {
        rb.cell(lhs.coeff(k) == rhs2.coeff(k), [&] {
            return nlohmann::json{{"coefficient", k},
                                  {"expected", rational_to_string(lhs.coeff(k))},
                                  {"got", rational_to_string(rhs2.coeff(k))}};
        });
    }
    if (!etas_ok) rb.fail(nlohmann::json{{"kind", "eta_positivity"}});
    if (!hilberts_ok) rb.fail(nlohmann::json{{"kind", "hilbert_positivity"}});
    return rb.finish();
}

}  // namespace weylrec
