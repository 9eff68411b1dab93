#include "macfock/mmc.hpp"

#include <stdexcept>

#include "macfock/fock.hpp"

namespace macfock {

LaurentN theta_series(int prec) {
    LaurentN theta(1);
    for (int n = 0; n * n < 2 * prec; n = (n <= 0) ? 1 - n : -n) {
        // n walks 0, 1, -1, 2, -2, ...
        theta.add_term({n}, QSeries::monomial(n * n, Rat(1)));
    }
    return theta;
}

LaurentN density_delta(int N, int k) {
    LaurentN prod = LaurentN::constant(N, QSeries::one());
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            for (int s = 0; s < k; ++s) {
                LaurentN factor = LaurentN::constant(N, QSeries::one());
                std::vector<int> e(static_cast<std::size_t>(N), 0);
                e[static_cast<std::size_t>(i)] = 1;
                e[static_cast<std::size_t>(j)] = -1;
                factor.add_term(e, QSeries::monomial(2 * s, Rat(-1)));
                prod *= factor;
            }
        }
    }
    return prod;
}

QSeries theta_weighted_ct(const LaurentN& f) {
    QSeries s;
    for (const auto& [e, c] : f.terms()) {
        long sq = 0;
        for (int ei : e) sq += static_cast<long>(ei) * ei;
        // the theta term x^(-e) contributes q^(|e|^2 / 2), doubled |e|^2
        s += c.shift(static_cast<int>(sq));
    }
    return s;
}

LaurentN restrict_to_vars(const SymFunc& f, int N, int k, int cutoff2) {
    LaurentN out(N);
    for (const auto& [mu, c] : f.terms()) {
        LaurentN term = LaurentN::constant(N, specialize_qk(c, k, cutoff2));
        for (int part : mu.parts()) {
            LaurentN psum(N);
            for (int v = 0; v < N; ++v) {
                std::vector<int> e(static_cast<std::size_t>(N), 0);
                e[static_cast<std::size_t>(v)] = part;
                psum.add_term(e, QSeries::one());
            }
            term *= psum;
        }
        out += term;
    }
    return out;
}

QSeries evaluate_principal_finite(const SymFunc& f, const Partition& mu, int N, int k, int cutoff2) {
    QSeries out;
    for (const auto& [kappa, c] : f.terms()) {
        QSeries term = specialize_qk(c, k, cutoff2);
        for (int r : kappa.parts()) {
            QSeries psum;
            for (int i = 1; i <= N; ++i)
                psum += QSeries::monomial(-2 * r * mu.part(i) + 2 * k * r * (i - 1), Rat(1));
            term *= psum;
        }
        out += term;
    }
    return out;
}

Report cherednik_check(Macdonald& mac, const Partition& mu, const Partition& nu, int N, int k,
                       int prec) {
    Report rep;
    rep.identity = "mmc: Cherednik constant-term identity for gl_N";
    rep.set_param("N", std::to_string(N));
    rep.set_param("k", std::to_string(k));
    rep.set_param("mu", mu.str());
    rep.set_param("nu", nu.str());
    rep.set_param("q-precision", std::to_string(prec));
    if (mu.length() > N || nu.length() > N)
        throw std::invalid_argument("cherednik_check: partitions need at most N rows");

    const int cutoff2 = 2 * prec;

    LaurentN f = restrict_to_vars(mac.P(mu), N, k, cutoff2);
    f *= restrict_to_vars(mac.P(nu), N, k, cutoff2).invert_vars();
    f *= density_delta(N, k);

    Int nfact(1);
    for (int i = 2; i <= N; ++i) nfact *= i;
    QSeries lhs = theta_weighted_ct(f).scale(Rat(1) / Rat(nfact));

    // The principal evaluation has negative q-valuation compensated by the
    // q^((mu^2+nu^2)/2) prefactor; work with enough guard digits that the
    // final series is reliable below the requested precision.
    int guard = 2 * nu.size() * std::max(mu.part(1), 0);
    int work2 = cutoff2 + guard;
    QSeries rhs = evaluate_principal_finite(mac.P(nu), mu, N, k, work2);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            int base = 2 * (mu.part(i) - mu.part(j)) + 2 * k * (j - i);
            rhs *= pochhammer_inf(base, work2);
            rhs *= pochhammer_inf(base + 2 * k, work2).inverse(work2);
        }
    }
    rhs = rhs.shift(static_cast<int>(mu.sum_squares() + nu.sum_squares()) - 2 * k * nu.nstat());
    rhs = rhs.truncate(cutoff2);
    lhs = lhs.truncate(cutoff2);

    int comparable = QSeries::comparable_cutoff(lhs, rhs);
    int diff = QSeries::first_difference(lhs, rhs);
    if (diff != QSeries::kExact) {
        rep.fail_with("q-coefficient at doubled exponent " + std::to_string(diff) + ": lhs " +
                      lhs.str() + " vs rhs " + rhs.str());
    } else if (comparable < cutoff2) {
        rep.status = Report::Status::inconclusive;
        rep.first_discrepancy = "comparable only below doubled exponent " + std::to_string(comparable);
    }
    return rep;
}

Report finmac_check(Macdonald& mac, const Partition& mu, const Partition& nu) {
    Report rep;
    rep.identity = "finmac: infinite-N stabilized constant-term identity";
    rep.set_param("mu", mu.str());
    rep.set_param("nu", nu.str());
    rep.set_param("normalization", "integral form J_mu");

    FieldElem one(1);
    // LHS: (omega Gamma_-(q^(1/2)/(1-q)) Gamma_+(q^(1/2)/(1-t)) omega J_mu, P_nu)_{q,t}.
    // The arm/leg hook carried by the integral form is needed for exact
    // equality at mu != 0; it is what the J-insertion step supplies.
    FieldElem arg_minus = FieldElem::u() / (one - FieldElem::q());
    FieldElem arg_plus = FieldElem::u() / (one - FieldElem::t());
    SymFunc g = omega(mac.J(mu));
    g = gamma_plus(AdamsRule(arg_plus), g);
    g = gamma_minus(AdamsRule(arg_minus), g, nu.size());
    g = omega(g);
    FieldElem lhs = inner_qt(g, mac.P(nu));

    // RHS: q^{(mu^2+nu^2)/2} t^{-n(nu)} P_nu(q^{-mu-rho})
    FieldElem rhs = FieldElem::u().pow(static_cast<int>(mu.sum_squares() + nu.sum_squares())) *
                    FieldElem::t().pow(-nu.nstat()) *
                    evaluate(mac.P(nu), AlphabetPoint::principal(mu));

    if (lhs != rhs) rep.fail_with("lhs = " + lhs.str() + ", rhs = " + rhs.str());
    return rep;
}

Report jacobi_triple_product_check(int prec) {
    Report rep;
    rep.identity = "jacobi: theta(x) = (q;q)_inf Theta_+(x) Theta_+(1/x)";
    rep.set_param("q-precision", std::to_string(prec));
    const int cutoff2 = 2 * prec;

    // Theta_+ is the omega-conjugate of Gamma_-(q^(1/2)/(1-q)) on a one-variable
    // alphabet: exp(sum_k (-1)^(k+1) q^(k/2) x^k / (k (1-q^k))).  The vertex-
    // operator 1/k is essential; A_a are its x-coefficients.
    int amax = cutoff2 + 1;
    std::vector<QSeries> logc(static_cast<std::size_t>(amax) + 1);
    for (int kk = 1; kk <= amax; ++kk) {
        QSeries den = QSeries::monomial(0, Rat(1)) - QSeries::monomial(2 * kk, Rat(1));
        QSeries c = QSeries::monomial(kk, (kk % 2 == 0) ? Rat(-1) : Rat(1)).div(den, cutoff2 + 2 * kk);
        logc[static_cast<std::size_t>(kk)] = c.truncate(cutoff2 + kk);
    }
    std::vector<QSeries> A(static_cast<std::size_t>(amax) + 1);
    A[0] = QSeries::one();
    for (int n = 1; n <= amax; ++n) {
        // A_n = (1/n) sum_k (k E_k) A_{n-k} with k E_k = logc_k
        QSeries s;
        for (int kk = 1; kk <= n; ++kk)
            s += logc[static_cast<std::size_t>(kk)] * A[static_cast<std::size_t>(n - kk)];
        A[static_cast<std::size_t>(n)] = s.scale(Rat(1, n)).truncate(cutoff2 + 1);
    }

    QSeries qq = pochhammer_inf(2, cutoff2 + 1);  // (q; q)_inf

    for (int n = 0; n * n < cutoff2; ++n) {
        // coefficient of x^n in Theta_+(x) Theta_+(1/x): sum_b A_{n+b} A_b
        QSeries sum;
        for (int b = 0; n + 2 * b <= amax && n + b <= amax; ++b)
            sum += A[static_cast<std::size_t>(n + b)] * A[static_cast<std::size_t>(b)];
        QSeries rhs = (qq * sum).truncate(cutoff2);
        QSeries lhs = QSeries::monomial(n * n, Rat(1)).truncate(cutoff2);
        int diff = QSeries::first_difference(lhs, rhs);
        if (diff != QSeries::kExact) {
            rep.fail_with("x^" + std::to_string(n) + " coefficient differs at doubled exponent " +
                          std::to_string(diff));
            break;
        }
    }
    return rep;
}

}  // namespace macfock
