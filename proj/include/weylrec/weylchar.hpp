#pragma once

#include <map>
#include <vector>

#include "weylrec/macdonald.hpp"
#include "weylrec/report.hpp"
#include "weylrec/weight.hpp"

namespace weylrec {

// Graded multiplicities [V[k] : V(mu)] of a graded sl_r module with finitely
// many nonzero entries; absent pairs mean multiplicity zero.
struct GradedCharacter {
    int rank = 0;
    std::map<std::pair<DominantWeight, int>, Integer> mults;
};

// Dimension generating function; exact when it is a closed-form rational
// function (finite-dimensional modules), truncated otherwise.
struct HilbertSeries {
    enum class Kind { Exact, Truncated };
    Kind kind = Kind::Exact;
    RatFuncQ exact;
    QSeries truncated;

    static HilbertSeries make_exact(RatFuncQ v) { return HilbertSeries{Kind::Exact, std::move(v), {}}; }
    static HilbertSeries make_truncated(QSeries s) { return HilbertSeries{Kind::Truncated, {}, std::move(s)}; }
    QSeries as_series(int order) const;
};

// dim V(lambda) by the Weyl dimension formula (product over positive roots).
Integer weyl_dim(const Partition& lambda, int rank);

// Graded character of the local Weyl module W_loc(lambda, 0): the q^k
// multiplicity of V(mu) is the k-th coefficient of sum_ell eta^lambda_{mu,ell}.
GradedCharacter local_weyl_character(const DominantWeight& lw, int rank, const QWhittakerTable& table);

// H(W_loc(lambda,0)) = P_lambda(1,...,1; q, 0) — a polynomial with
// nonnegative integer coefficients (checked).
HilbertSeries hilbert_local(const DominantWeight& lw, int rank, const QWhittakerTable& table);

// H(W(lambda,0)) = H(W_loc(lambda,0)) / prod_i (q;q)_{lambda_i} over the
// fundamental-weight coordinates, truncated at q^order.
HilbertSeries hilbert_global(const DominantWeight& lw, int rank, int order, const QWhittakerTable& table);

// H(P(lambda,0)) = dim V(lambda) / (q;q)_inf^{rank^2-1}, truncated.
HilbertSeries hilbert_projective(const DominantWeight& lw, int rank, int order);

// Dominant weights with |xi(mu)| <= max_xi_size, ordered by partition size
// then decreasing lex — an enumeration compatible with the dominance cones.
std::vector<DominantWeight> enumerate_weights(int rank, int max_xi_size);

// Filtration multiplicities [P(lambda,0) : W(mu,s)] = [W_loc(mu,0) : V(lambda,s)],
// for |xi(mu)| <= mu_size_bound, s <= max_grade; zero rows suppressed.
struct ReciprocityRow {
    DominantWeight mu;
    int grade = 0;
    Integer mult;
};
std::vector<ReciprocityRow> reciprocity_multiplicities(const DominantWeight& lw, int rank,
                                                       int max_grade, int mu_size_bound);

// Checks H(P(lambda,0)) = sum_mu (sum_s [W_loc(mu,0):V(lambda,s)] q^s) H(W(mu,0))
// through q^order. mu_bound < 0 selects |xi(lambda)| + rank*order, with a
// stabilization re-run at bound+rank (disagreement -> inconclusive). Per-mu
// terms may be evaluated on `jobs` workers; the reduction order is fixed.
Report verify_reciprocity(const DominantWeight& lw, int rank, int order, int mu_bound = -1,
                          int jobs = 1);

}  // namespace weylrec
