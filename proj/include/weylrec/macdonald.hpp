#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylrec/poly.hpp"
#include "weylrec/ratfunc.hpp"
#include "weylrec/report.hpp"
#include "weylrec/series.hpp"
#include "weylrec/symfunc.hpp"

namespace weylrec {

// t=0 Macdonald (q-Whittaker) polynomials P_xi for xi in Par(rank) up to
// |xi| <= max_size. Entries are monic at m_xi with support on dominance-lower
// keys; norms are the Macdonald scalar products <P_xi, P_xi> at t=0.
//
// The Gram-Schmidt runs in the stable rank max(rank, max_size), where the
// power-sum formula <p_xi, p_psi> = delta * z_xi * prod(1 - q^{xi_s}) is the
// Macdonald product, and the result is restricted to `rank` variables
// (coefficients are stable in the number of variables).
struct QWhittakerTable {
    int rank = 0;
    int max_size = -1;
    bool q_zero = false;  // built with q specialized to 0 (classical limit)
    std::map<Partition, SymFunc<RatFuncQ>> entries;
    std::map<Partition, RatFuncQ> norms;

    const SymFunc<RatFuncQ>& entry(const Partition& xi) const;
    const RatFuncQ& norm(const Partition& xi) const;
};

QWhittakerTable qwhittaker(int rank, int max_size, bool q_zero = false);
// New table covering sizes through new_max_size, reusing existing entries.
QWhittakerTable qwhittaker_extend(const QWhittakerTable& t, int new_max_size);

// t=0 Macdonald scalar product, extended bilinearly from the power-sum basis
// of the input rank. This equals the Macdonald product whenever the rank is
// at least the degree (stable range).
RatFuncQ scalar_qw(const SymFunc<RatFuncQ>& f, const SymFunc<RatFuncQ>& g, bool q_zero = false);

// prod_{i=1}^{rank} (q;q)_{xi_i - xi_{i+1}} with xi_{rank+1} = 0.
RatFuncQ norm_closed_form(const Partition& xi, int rank);

// Schur-basis expansion of P_mu (mu in Par(rank-1)); coefficients clear to
// polynomials in q, which the construction asserts.
struct EtaTable {
    Partition mu;  // padded to rank
    std::map<SchurIndex, PolyQ> coeffs;
};
EtaTable eta_coeffs(const Partition& mu, int rank, const QWhittakerTable& table);

// ---- truncated-coefficient table (kernel Gram factorization) ----
//
// Same polynomials with coefficients known through q^order, produced by
// factoring the explicit t=0 Cauchy kernel matrix
//   Gamma_{psi,psi'} = [m_{psi'}] prod_i W_{psi_i},
//   W_k = sum_{|alpha|=k} y^alpha / prod_j (q;q)_{alpha_j},
// as Gamma = u^T diag(1/<P,P>) u with u monic and dominance-triangular. The
// factorization is unique, so it agrees with the Gram-Schmidt table; it works
// rank-locally and scales to the large sizes the reciprocity sums need.
struct QWSeriesTable {
    int rank = 0;
    int max_size = -1;
    int order = 0;
    std::map<Partition, std::map<Partition, QSeries>> entries;  // m-coefficients
    std::map<Partition, QSeries> norms;

    const std::map<Partition, QSeries>& entry(const Partition& xi) const;
    SymFunc<QSeries> entry_symfunc(const Partition& xi) const;
};
QWSeriesTable qwhittaker_series(int rank, int max_size, int order);

// Evaluation of P_xi at x = (1,...,1), from a series table entry.
QSeries principal_specialize_series(const QWSeriesTable& t, const Partition& xi);

// sum_ell eta^mu_{lambda,ell} as a series (single ell contributes for fixed
// degrees); lambda has length rank-1.
QSeries eta_sum_series(const QWSeriesTable& t, const Partition& mu, const Partition& lambda);

// ---- kernel expansions ----
// Q   = (q x_1...x_r; q)_inf / prod_i (x_i; q)_inf^r
// LHS = (x_1...x_r; q)_inf / prod_i (x_i; q)_inf^r = (1 - |x|) Q
enum class KernelKind { Q, LHS };
// m-basis coefficients of the homogeneous x-degree-d part, q-order `order`.
std::map<Partition, QSeries> kernel_component(KernelKind kind, int rank, int degree, int order);

// phi_{lambda,ell} = Schur coefficient of Q at s_{lambda,ell}; psi is the
// consecutive difference (phi_{lambda,-1} = 0).
QSeries phi_series(const Partition& lambda, int ell, int rank, int order);
QSeries psi_series(const Partition& lambda, int ell, int rank, int order);

// ---- identity verifications ----
Report verify_norms(int rank, int max_size);
// jobs > 1 evaluates pairings on a worker pool; reduction order is fixed, so
// output is identical for every jobs value.
Report verify_orthonormality(int rank, int max_degree, int jobs = 1);
Report verify_cauchy_kernels(int rank, int max_degree);
Report verify_mult(int rank, int max_deg_f);
Report verify_lim(int rank, int order, int max_m, const std::vector<Partition>& lambdas);
Report verify_lhs(int rank, int max_degree, int order);
Report verify_cauchy_t0(int rank, int max_degree, int order);
// mu_bound < 0 selects the auto policy |lambda| + rank*order; a stabilization
// re-run at bound+rank must reproduce the sum or the result is inconclusive.
Report verify_crucial(const Partition& lambda, int rank, int order, int mu_bound = -1);

}  // namespace weylrec
