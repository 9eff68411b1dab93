#pragma once

#include <map>
#include <string>

#include "macfock/poly.hpp"

namespace macfock {

// Element of Q(u, v, m) where u = q^(1/2) and v = t^(1/2): a reduced fraction
// of integer polynomials.  Canonical form: gcd(num, den) = 1, den != 0, and
// the leading coefficient of den (grlex, u > v > m) is positive.  Equality is
// componentwise equality of the canonical forms.
class FieldElem {
  public:
    FieldElem() : num_(), den_(1L) {}
    FieldElem(long c) : num_(c), den_(1L) {}
    explicit FieldElem(const Int& c) : num_(c), den_(1L) {}
    explicit FieldElem(const Rat& r);
    FieldElem(const Poly& num, const Poly& den);

    static FieldElem from_poly(Poly p);
    static FieldElem rational(long num, long den);
    // monomial u^eu * v^ev * m^em with exponents of either sign
    static FieldElem monomial(int eu, int ev, int em);

    static FieldElem u() { return monomial(1, 0, 0); }
    static FieldElem v() { return monomial(0, 1, 0); }
    static FieldElem q() { return monomial(2, 0, 0); }
    static FieldElem t() { return monomial(0, 2, 0); }
    static FieldElem m() { return monomial(0, 0, 1); }
    static FieldElem sqrt_qt() { return monomial(1, 1, 0); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // throws on division by zero
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    FieldElem inverse() const;
    FieldElem pow(int e) const;

    // field automorphism u -> 1/u, v -> 1/v (q -> 1/q, t -> 1/t), m fixed
    FieldElem conjugate() const;
    // v -> 1/v only (the t -> 1/t substitution)
    FieldElem invert_v() const;
    // q <-> t
    FieldElem swap_qt() const;
    // u -> u^k, v -> v^k, m -> m^k
    FieldElem adams(int k) const;
    // m -> m*q*t (mass redefinition)
    FieldElem redefine_mass() const;

    // degree in m of num (den must be m-free), and the m-coefficients
    bool m_free() const;
    std::map<int, FieldElem> expand_m() const;

    std::string str() const;
    static FieldElem parse(const std::string& s);

  private:
    void reduce();
    Poly num_, den_;
};

inline FieldElem operator*(long c, const FieldElem& f) { return FieldElem(c) * f; }

}  // namespace macfock
