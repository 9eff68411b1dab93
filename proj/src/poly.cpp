#include "macfock/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#ifdef MACFOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace macfock {

namespace mono {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    int eu = exp_u(a) + exp_u(b);
    int ev = exp_v(a) + exp_v(b);
    int em = exp_m(a) + exp_m(b);
    if (eu > kMaxExp || ev > kMaxExp || em > kMaxExp)
        throw std::overflow_error("monomial exponent overflow");
    return pack(eu, ev, em);
}

std::uint64_t div(std::uint64_t a, std::uint64_t b) {
    return pack(exp_u(a) - exp_u(b), exp_v(a) - exp_v(b), exp_m(a) - exp_m(b));
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    return pack(std::min(exp_u(a), exp_u(b)), std::min(exp_v(a), exp_v(b)),
                std::min(exp_m(a), exp_m(b)));
}

}  // namespace mono

Poly::Poly(long c) {
    if (c != 0) terms_.push_back({mono::kOne, Int(c)});
}

Poly::Poly(const Int& c) {
    if (c != 0) terms_.push_back({mono::kOne, c});
}

Poly::Poly(const Int& c, std::uint64_t key) {
    if (c != 0) terms_.push_back({key, c});
}

Poly Poly::variable(int var, int exp) {
    if (exp < 0 || exp > mono::kMaxExp) throw std::overflow_error("monomial exponent overflow");
    int e[3] = {0, 0, 0};
    e[var] = exp;
    return Poly(Int(1), mono::pack(e[0], e[1], e[2]));
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1;
}

int Poly::degree(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, mono::exp_var(t.key, var));
    return d;
}

int Poly::min_degree(int var) const {
    if (terms_.empty()) return 0;
    int d = mono::kMaxExp + 1;
    for (const auto& t : terms_) d = std::min(d, mono::exp_var(t.key, var));
    return d;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.front().key >> (3 * mono::kExpBits));
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].key != o.terms_[i].key || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].key > o.terms_[j].key) {
            out.push_back(terms_[i++]);
        } else if (terms_[i].key < o.terms_[j].key) {
            out.push_back(o.terms_[j++]);
        } else {
            Int c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].key, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return from_sorted(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

namespace {

Poly mul_accumulate(const Poly& a, const Poly& b, std::size_t lo, std::size_t hi) {
    std::map<std::uint64_t, Int, std::greater<>> acc;
    for (std::size_t i = lo; i < hi; ++i) {
        const auto& ta = a.terms()[i];
        for (const auto& tb : b.terms()) {
            std::uint64_t k = mono::mul(ta.key, tb.key);
            auto it = acc.find(k);
            if (it == acc.end()) {
                acc.emplace(k, ta.coeff * tb.coeff);
            } else {
                it->second += ta.coeff * tb.coeff;
            }
        }
    }
    std::vector<Poly::Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({k, std::move(c)});
    return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly poly_mul_serial(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return mul_accumulate(a, b, 0, a.size());
}

Poly poly_mul_parallel(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
#ifdef MACFOCK_HAVE_OPENMP
    const std::size_t n = a.size();
    int nthreads = omp_get_max_threads();
    if (nthreads <= 1 || n < 2) return poly_mul_serial(a, b);
    std::vector<Poly> partial(static_cast<std::size_t>(nthreads));
    std::exception_ptr error;
#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        std::size_t lo = n * static_cast<std::size_t>(tid) / static_cast<std::size_t>(nthreads);
        std::size_t hi = n * (static_cast<std::size_t>(tid) + 1) / static_cast<std::size_t>(nthreads);
        try {
            if (lo < hi) partial[static_cast<std::size_t>(tid)] = mul_accumulate(a, b, lo, hi);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    Poly r;
    for (auto& p : partial) r += p;
    return r;
#else
    return poly_mul_serial(a, b);
#endif
}

Poly Poly::operator*(const Poly& o) const {
    // Parallel path pays off only for large operand pairs.
    if (size() >= 64 && size() * o.size() >= 16384) return poly_mul_parallel(*this, o);
    return poly_mul_serial(*this, o);
}

Poly Poly::mul_term(const Int& c, std::uint64_t key) const {
    if (c == 0) return Poly();
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({mono::mul(t.key, key), t.coeff * c});
    return r;
}

Poly Poly::mul_int(const Int& c) const { return mul_term(c, mono::kOne); }

Poly Poly::pow(unsigned e) const {
    Poly r(1L);
    Poly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

std::optional<Poly> Poly::div_exact(const Poly& o) const {
    if (o.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return Poly();
    if (o.is_one()) return *this;
    std::map<std::uint64_t, Int, std::greater<>> rem;
    for (const auto& t : terms_) rem.emplace(t.key, t.coeff);
    const auto& lead = o.terms_.front();
    std::vector<Term> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!mono::divides(lead.key, it->first)) return std::nullopt;
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
        if (r != 0) return std::nullopt;
        std::uint64_t qk = mono::div(it->first, lead.key);
        quot.push_back({qk, qc});
        for (const auto& t : o.terms_) {
            std::uint64_t k = mono::mul(t.key, qk);
            auto jt = rem.find(k);
            if (jt == rem.end()) {
                rem.emplace(k, -qc * t.coeff);
            } else {
                jt->second -= qc * t.coeff;
                if (jt->second == 0) rem.erase(jt);
            }
        }
    }
    return from_sorted(std::move(quot));
}

Int Poly::int_content() const {
    Int g(0);
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::uint64_t Poly::mono_content() const {
    if (terms_.empty()) return mono::kOne;
    std::uint64_t g = terms_.front().key;
    for (const auto& t : terms_) {
        g = mono::gcd(g, t.key);
        if (g == mono::kOne) break;
    }
    return g;
}

Poly Poly::adams(int k) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        long eu = static_cast<long>(mono::exp_u(t.key)) * k;
        long ev = static_cast<long>(mono::exp_v(t.key)) * k;
        long em = static_cast<long>(mono::exp_m(t.key)) * k;
        if (eu > mono::kMaxExp || ev > mono::kMaxExp || em > mono::kMaxExp)
            throw std::overflow_error("monomial exponent overflow");
        r.terms_.push_back({mono::pack(static_cast<int>(eu), static_cast<int>(ev), static_cast<int>(em)), t.coeff});
    }
    return r;  // exponent scaling preserves the grlex order
}

Poly Poly::eval_var(int var, const Int& x) const {
    std::map<std::uint64_t, Int, std::greater<>> acc;
    std::vector<Int> powers{Int(1)};
    for (const auto& t : terms_) {
        int e = mono::exp_var(t.key, var);
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * x);
        int eu = mono::exp_u(t.key), ev = mono::exp_v(t.key), em = mono::exp_m(t.key);
        (var == 0 ? eu : var == 1 ? ev : em) = 0;
        std::uint64_t k = mono::pack(eu, ev, em);
        Int c = t.coeff * powers[static_cast<std::size_t>(e)];
        auto it = acc.find(k);
        if (it == acc.end()) {
            acc.emplace(k, std::move(c));
        } else {
            it->second += c;
        }
    }
    std::vector<Term> out;
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back({k, std::move(c)});
    return from_sorted(std::move(out));
}

Poly Poly::swap_uv() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back({mono::pack(mono::exp_v(t.key), mono::exp_u(t.key), mono::exp_m(t.key)), t.coeff});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.key > b.key; });
    return from_sorted(std::move(out));
}

Poly Poly::from_sorted(std::vector<Term> terms) {
    Poly r;
    r.terms_ = std::move(terms);
    return r;
}

// ---------------------------------------------------------------------------
// GCD: heuristic (integer evaluation + balanced reconstruction) with a
// subresultant PRS fallback.
// ---------------------------------------------------------------------------

namespace {

struct HeuFail {};

Int max_abs_coeff(const Poly& p) {
    Int m(0);
    for (const auto& t : p.terms()) {
        Int a = abs(t.coeff);
        if (a > m) m = a;
    }
    return m;
}

std::vector<int> active_vars(const Poly& a, const Poly& b) {
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v)
        if (a.degree(v) > 0 || b.degree(v) > 0) vars.push_back(v);
    return vars;
}

Poly balanced_digit(const Poly& g, const Int& xi, Poly& next) {
    std::vector<Poly::Term> digit, rest;
    Int half = xi / 2;
    for (const auto& t : g.terms()) {
        Int d;
        mpz_mod(d.get_mpz_t(), t.coeff.get_mpz_t(), xi.get_mpz_t());
        if (d > half) d -= xi;
        if (d != 0) digit.push_back({t.key, d});
        Int c = (t.coeff - d) / xi;
        if (c != 0) rest.push_back({t.key, std::move(c)});
    }
    next = Poly::from_sorted(std::move(rest));
    return Poly::from_sorted(std::move(digit));
}

Poly gcd_heu(const Poly& a, const Poly& b, int depth) {
    if (depth > 12) throw HeuFail{};
    auto vars = active_vars(a, b);
    if (vars.empty()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.leading().coeff.get_mpz_t(), b.leading().coeff.get_mpz_t());
        return Poly(g);
    }
    int x = vars.back();
    Int xi = 2 * std::min(max_abs_coeff(a), max_abs_coeff(b)) + 29;
    if (xi < 32) xi = 32;
    for (int attempt = 0; attempt < 6; ++attempt) {
        // bail out if the evaluated integers would get huge
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(std::max(a.degree(x), b.degree(x))) > 60000)
            throw HeuFail{};
        Poly av = a.eval_var(x, xi);
        Poly bv = b.eval_var(x, xi);
        if (!av.is_zero() && !bv.is_zero()) {
            try {
                Poly gamma = gcd_heu(av, bv, depth + 1);
                Poly g;
                int e = 0;
                const int deg_bound = std::min(a.degree(x), b.degree(x));
                while (!gamma.is_zero()) {
                    Poly next;
                    Poly digit = balanced_digit(gamma, xi, next);
                    if (e > deg_bound) throw HeuFail{};
                    g += digit.mul_term(Int(1), mono::pack(x == 0 ? e : 0, x == 1 ? e : 0, x == 2 ? e : 0));
                    gamma = next;
                    ++e;
                }
                if (!g.is_zero()) {
                    // The integer content of inner-level results encodes
                    // evaluated outer variables; strip it only at the top.
                    if (depth == 0) {
                        Int c = g.int_content();
                        if (c > 1) g = *g.div_exact(Poly(c));
                    }
                    if (g.leading().coeff < 0) g = -g;
                    if (a.div_exact(g) && b.div_exact(g)) return g;
                }
            } catch (const HeuFail&) {
                if (depth > 0) throw;  // retry only at the top of the recursion
            }
        }
        xi = (xi * 73794) / 27011;
    }
    throw HeuFail{};
}

// dense view in one variable, coefficients with that variable zeroed out
std::vector<Poly> split_var(const Poly& p, int x) {
    std::vector<Poly> out(static_cast<std::size_t>(p.degree(x) + 1));
    std::vector<std::vector<Poly::Term>> buckets(out.size());
    for (const auto& t : p.terms()) {
        int e = mono::exp_var(t.key, x);
        int eu = mono::exp_u(t.key), ev = mono::exp_v(t.key), em = mono::exp_m(t.key);
        (x == 0 ? eu : x == 1 ? ev : em) = 0;
        buckets[static_cast<std::size_t>(e)].push_back({mono::pack(eu, ev, em), t.coeff});
    }
    for (std::size_t e = 0; e < out.size(); ++e) {
        auto& terms = buckets[e];
        std::sort(terms.begin(), terms.end(),
                  [](const Poly::Term& a, const Poly::Term& b) { return a.key > b.key; });
        out[e] = Poly::from_sorted(std::move(terms));
    }
    return out;
}

Poly join_var(const std::vector<Poly>& coeffs, int x) {
    Poly r;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].is_zero()) continue;
        r += coeffs[e].mul_term(
            Int(1), mono::pack(x == 0 ? static_cast<int>(e) : 0, x == 1 ? static_cast<int>(e) : 0,
                               x == 2 ? static_cast<int>(e) : 0));
    }
    return r;
}

int dense_deg(const std::vector<Poly>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

// pseudo-remainder of dense-in-x polynomials: lc(b)^(da-db+1) * a mod b
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
    int da = dense_deg(a), db = dense_deg(b);
    const Poly& lb = b[static_cast<std::size_t>(db)];
    int steps = da - db + 1;
    while (true) {
        da = dense_deg(a);
        if (da < db) break;
        Poly la = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= da; ++i) {
            auto& ai = a[static_cast<std::size_t>(i)];
            ai = ai * lb;
            int j = i - (da - db);
            if (j >= 0 && j <= db) ai -= la * b[static_cast<std::size_t>(j)];
        }
        --steps;
    }
    if (steps > 0) {
        Poly f = lb.pow(static_cast<unsigned>(steps));
        for (auto& c : a) c = c * f;
    }
    return a;
}

Poly content_of(const std::vector<Poly>& coeffs) {
    Poly g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c : Poly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Poly gcd_prs(const Poly& a, const Poly& b) {
    auto vars = active_vars(a, b);
    if (vars.empty()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.leading().coeff.get_mpz_t(), b.leading().coeff.get_mpz_t());
        return Poly(g);
    }
    // prefer the variable of smallest maximal degree as the PRS variable
    int x = vars[0];
    int best = std::max(a.degree(vars[0]), b.degree(vars[0]));
    for (int v : vars) {
        int d = std::max(a.degree(v), b.degree(v));
        if (d < best) {
            best = d;
            x = v;
        }
    }
    if (a.degree(x) == 0 || b.degree(x) == 0) {
        // x cannot occur in the gcd; recurse on contents
        Poly ca = content_of(split_var(a, x));
        Poly cb = content_of(split_var(b, x));
        return Poly::gcd(ca, cb);
    }
    auto A = split_var(a, x);
    auto B = split_var(b, x);
    Poly ca = content_of(A), cb = content_of(B);
    for (auto& c : A) c = *c.div_exact(ca);
    for (auto& c : B) c = *c.div_exact(cb);
    if (dense_deg(A) < dense_deg(B)) std::swap(A, B);
    Poly cont = Poly::gcd(ca, cb);

    // subresultant polynomial remainder sequence
    Poly g(1L), h(1L);
    while (true) {
        int da = dense_deg(A), db = dense_deg(B);
        int delta = da - db;
        auto R = prem(A, B);
        if (dense_deg(R) < 0) break;
        if (dense_deg(R) == 0) {
            B.assign(1, Poly(1L));
            break;
        }
        A = std::move(B);
        Poly divisor = g * h.pow(static_cast<unsigned>(delta));
        B.clear();
        B.reserve(R.size());
        for (auto& r : R) {
            auto q = r.div_exact(divisor);
            if (!q) throw std::logic_error("subresultant PRS: inexact division");
            B.push_back(std::move(*q));
        }
        g = A[static_cast<std::size_t>(dense_deg(A))];
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            auto q = g.pow(static_cast<unsigned>(delta)).div_exact(h.pow(static_cast<unsigned>(delta - 1)));
            if (!q) throw std::logic_error("subresultant PRS: inexact h update");
            h = std::move(*q);
        }
    }
    // primitive part of the last nonzero remainder
    Poly cb2 = content_of(B);
    for (auto& cB : B) cB = *cB.div_exact(cb2);
    return cont * join_var(B, x);
}

}  // namespace

namespace {

Poly gcd_impl(const Poly& a, const Poly& b, bool prs_only) {
    if (a.is_zero() && b.is_zero()) return Poly();
    auto normalized = [](Poly p) {
        if (!p.is_zero() && p.leading().coeff < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a == b) return normalized(a);

    std::uint64_t km = mono::gcd(a.mono_content(), b.mono_content());
    Poly pa = *a.div_exact(Poly(Int(1), a.mono_content()));
    Poly pb = *b.div_exact(Poly(Int(1), b.mono_content()));
    Int ca = pa.int_content(), cb = pb.int_content();
    Int c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    pa = *pa.div_exact(Poly(ca));
    pb = *pb.div_exact(Poly(cb));

    Poly g;
    if (pa.is_constant() || pb.is_constant()) {
        g = Poly(1L);
    } else if (prs_only) {
        g = gcd_prs(pa, pb);
    } else {
        try {
            g = gcd_heu(pa, pb, 0);
        } catch (const HeuFail&) {
            g = gcd_prs(pa, pb);
        }
    }
    Poly r = g.mul_int(c).mul_term(Int(1), km);
    if (!r.is_zero() && r.leading().coeff < 0) r = -r;
    return r;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) { return gcd_impl(a, b, false); }

Poly poly_gcd_reference(const Poly& a, const Poly& b) { return gcd_impl(a, b, true); }

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

namespace {

void append_var(std::string& s, const char* name, int e2, bool halves) {
    // e2 is the exponent in u/v units when halves==true (alias q = u^2),
    // or the plain exponent for m.
    if (e2 == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (halves) {
        if (e2 == 2) return;
        if (e2 % 2 == 0) {
            s += "^" + std::to_string(e2 / 2);
        } else {
            s += "^(" + std::to_string(e2) + "/2)";
        }
    } else {
        if (e2 == 1) return;
        s += "^" + std::to_string(e2);
    }
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Int c = t.coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string vars;
        append_var(vars, "q", mono::exp_u(t.key), true);
        append_var(vars, "t", mono::exp_v(t.key), true);
        append_var(vars, "m", mono::exp_m(t.key), false);
        if (vars.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += vars;
        } else {
            out += c.get_str() + "*" + vars;
        }
    }
    return out;
}

}  // namespace macfock
