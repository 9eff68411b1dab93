#pragma once

#include "macfock/laurentn.hpp"
#include "macfock/macdonald.hpp"
#include "macfock/report.hpp"

namespace macfock {

// theta(x) = sum_n x^n q^(n^2/2) as a one-variable Laurent polynomial holding
// every term with q-exponent below prec
LaurentN theta_series(int prec);

// Delta(x; q, q^k) telescoped: prod_{i != j} prod_{s=0}^{k-1} (1 - q^s x_i/x_j);
// exact, no truncation
LaurentN density_delta(int N, int k);

// constant term of f(x) * prod_i theta(x_i): exact in the theta factor, whose
// support is pinned by the support of f
QSeries theta_weighted_ct(const LaurentN& f);

// finite-variable restriction p_r -> x_1^r + ... + x_N^r with t = q^k
LaurentN restrict_to_vars(const SymFunc& f, int N, int k, int cutoff2);

// evaluation of f at the finite alphabet (q^-mu_1, q^-mu_2 t, ..., q^-mu_N t^(N-1))
QSeries evaluate_principal_finite(const SymFunc& f, const Partition& mu, int N, int k, int cutoff2);

// Cherednik's constant-term identity for gl_N at t = q^k, checked as q-series
// below q^prec
Report cherednik_check(Macdonald& mac, const Partition& mu, const Partition& nu, int N, int k,
                       int prec);

// infinite-N limit identity, exact in the coefficient field
Report finmac_check(Macdonald& mac, const Partition& mu, const Partition& nu);

// Jacobi triple product theta(x) = (q;q)_inf Theta_+(x) Theta_+(1/x),
// coefficientwise below q^prec
Report jacobi_triple_product_check(int prec);

}  // namespace macfock
