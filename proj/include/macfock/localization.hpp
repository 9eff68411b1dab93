#pragma once

#include <map>
#include <utility>

#include "macfock/symfunc.hpp"

namespace macfock {

// Finite Laurent polynomial in q, t with integer multiplicities: the
// character of an equivariant K-theory class at a torus fixed point.
// Exponents are stored in q,t units; conversion to FieldElem doubles them
// into the u,v generators.
class Character {
  public:
    Character() = default;
    static Character monomial(int i, int j, long mult = 1);

    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(int i, int j, const Int& mult);

    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const;
    Character operator-() const;

    Character conjugate() const;  // (q,t) -> (1/q, 1/t)
    Character adams(int k) const; // exponent scaling

    bool operator==(const Character& o) const { return terms_ == o.terms_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

    Int total_multiplicity() const;  // value at q = t = 1
    FieldElem to_field() const;

  private:
    std::map<std::pair<int, int>, Int> terms_;
};

// ch(O/I_lambda): box (row i, column j) carries q^(j-1) t^(i-1).  The column
// direction carries q, pinned by the resolution of (x^2, y) having generator
// weights q^2, t.
Character box_char(const Partition& la);

// arm/leg weights q^(a+1) t^(-l) + q^(-a) t^(l+1) over the boxes
Character tangent_char(const Partition& la);

// Ext character chi(O) - chi(I_la, I_mu); the Euler-pairing duality sign is
// fixed once by ext_char(la, la) = tangent_char(la) and verified at first use.
Character ext_char(const Partition& la, const Partition& mu);

// p_k(x_mu) = (1-q^k)(1-t^k) p_k(I_mu), a finite Laurent polynomial per k
AlphabetPoint ideal_point(const Partition& la);

// boson evaluation point of the residue calculus; w is a free weight
AlphabetPoint boson_point(const Partition& la, const FieldElem& w);

// prod over weights (1 - marker * q^i t^j)^mult; requires mult >= 0
FieldElem lambda_genus(const Character& c, const FieldElem& marker);

// geometric prediction for <f, V H_mu>: degreewise (qt)^(-d/2) times the
// evaluation of the coefficient-conjugated f at x_mu
FieldElem geometric_V_pairing(const SymFunc& f, const Partition& mu);

// geometric prediction for <H_la, W(m) H_mu>; the normalization N = 1 and the
// weight shift s = (qt)^-1 are frozen from the seed-matching protocol and
// guarded by a regression test against the operator side.
FieldElem geometric_W_element(const Partition& la, const Partition& mu);

// the frozen weight shift s used by geometric_W_element
FieldElem w_element_shift();

}  // namespace macfock
