#pragma once

#include <map>
#include <string>

#include "macfock/field.hpp"

namespace macfock {

// Exact q-adic Laurent series over the rationals with half-integer exponents
// (stored doubled) and a precision cutoff: coefficients with doubled exponent
// below `cutoff` are exact, everything at or above it is unknown.  Finite
// exact series carry the kExact sentinel.
class QSeries {
  public:
    static constexpr int kExact = 1 << 28;

    QSeries() : cutoff_(kExact) {}
    static QSeries monomial(int exp2, const Rat& c);
    static QSeries constant(const Rat& c) { return monomial(0, c); }
    static QSeries one() { return constant(Rat(1)); }

    const std::map<int, Rat>& terms() const { return terms_; }
    int cutoff() const { return cutoff_; }
    bool is_exact() const { return cutoff_ == kExact; }
    bool known_zero() const { return terms_.empty() && is_exact(); }

    // smallest exponent with a nonzero coefficient; kExact when none known
    int valuation() const { return terms_.empty() ? kExact : terms_.begin()->first; }
    Rat coeff(int exp2) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    QSeries scale(const Rat& c) const;
    QSeries shift(int exp2) const;  // multiply by q^(exp2/2)
    QSeries truncate(int cutoff2) const;

    // multiplicative inverse as a Laurent series; needs a nonzero lead term
    QSeries inverse(int cutoff2) const;
    QSeries div(const QSeries& o, int cutoff2) const { return *this * o.inverse(cutoff2); }

    // compare below the joint reliable cutoff; returns the first doubled
    // exponent where the two disagree, or kExact when they agree
    static int first_difference(const QSeries& a, const QSeries& b);
    static int comparable_cutoff(const QSeries& a, const QSeries& b);

    std::string str() const;

  private:
    void normalize();
    std::map<int, Rat> terms_;
    int cutoff_;
};

// Specializes t = q^k: u -> q^(1/2), v -> q^(k/2); m must not occur.
// Exact when the element is a Laurent polynomial, otherwise exact below cutoff2.
QSeries specialize_qk(const FieldElem& f, int k, int cutoff2);

// (q^(a2/2); q)_infty truncated: prod_{s>=0} (1 - q^(a2/2 + s)); requires a2 > 0.
QSeries pochhammer_inf(int a2, int cutoff2);

}  // namespace macfock
