#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace macfock {

using Int = mpz_class;
using Rat = mpq_class;

// Monomial in the generators u, v, m with nonnegative exponents, packed so
// that raw uint64 comparison is graded-lexicographic with u > v > m.
namespace mono {

constexpr int kExpBits = 14;
constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;
constexpr int kMaxExp = (1 << kExpBits) - 1;

constexpr std::uint64_t pack(int eu, int ev, int em) {
    return (static_cast<std::uint64_t>(eu + ev + em) << (3 * kExpBits)) |
           (static_cast<std::uint64_t>(eu) << (2 * kExpBits)) |
           (static_cast<std::uint64_t>(ev) << kExpBits) |
           static_cast<std::uint64_t>(em);
}

constexpr int exp_u(std::uint64_t k) { return static_cast<int>((k >> (2 * kExpBits)) & kExpMask); }
constexpr int exp_v(std::uint64_t k) { return static_cast<int>((k >> kExpBits) & kExpMask); }
constexpr int exp_m(std::uint64_t k) { return static_cast<int>(k & kExpMask); }
constexpr int exp_var(std::uint64_t k, int var) {
    return var == 0 ? exp_u(k) : var == 1 ? exp_v(k) : exp_m(k);
}

constexpr std::uint64_t kOne = 0;

// valid iff componentwise >=
constexpr bool divides(std::uint64_t a, std::uint64_t b) {
    return exp_u(a) <= exp_u(b) && exp_v(a) <= exp_v(b) && exp_m(a) <= exp_m(b);
}

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t div(std::uint64_t a, std::uint64_t b);  // requires divides(b,a)
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

}  // namespace mono

// Sparse polynomial in Z[u,v,m], terms sorted by descending monomial key.
// The zero polynomial has no terms.
class Poly {
  public:
    struct Term {
        std::uint64_t key;
        Int coeff;
    };

    Poly() = default;
    explicit Poly(long c);
    explicit Poly(const Int& c);
    Poly(const Int& c, std::uint64_t key);

    static Poly variable(int var, int exp = 1);  // var: 0=u, 1=v, 2=m

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
    bool is_monomial() const { return terms_.size() == 1; }

    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    int degree(int var) const;      // max exponent of var, -1 for zero poly
    int min_degree(int var) const;  // min exponent of var over all terms
    int total_degree() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly mul_term(const Int& c, std::uint64_t key) const;
    Poly mul_int(const Int& c) const;
    Poly pow(unsigned e) const;

    // Exact division; nullopt when o does not divide *this.
    std::optional<Poly> div_exact(const Poly& o) const;

    // gcd of all coefficients, positive; 0 for the zero polynomial.
    Int int_content() const;
    // componentwise min of exponents (the largest monomial dividing every term)
    std::uint64_t mono_content() const;

    // Substitutes var -> var^k (Adams-type exponent scaling).
    Poly adams(int k) const;
    // Substitutes an integer value for one variable.
    Poly eval_var(int var, const Int& x) const;
    // Swaps the exponents of u and v.
    Poly swap_uv() const;

    static Poly gcd(const Poly& a, const Poly& b);

    std::string str() const;  // canonical form, terms in descending grlex order

    // internal: assumes sorted unique keys with nonzero coefficients
    static Poly from_sorted(std::vector<Term> terms);

  private:
    std::vector<Term> terms_;
};

// Serial and OpenMP product kernels; operator* dispatches on size.
Poly poly_mul_serial(const Poly& a, const Poly& b);
Poly poly_mul_parallel(const Poly& a, const Poly& b);

// Subresultant-PRS gcd, the reference path behind Poly::gcd's heuristic.
Poly poly_gcd_reference(const Poly& a, const Poly& b);

}  // namespace macfock
