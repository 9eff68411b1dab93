#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "macfock/field.hpp"
#include "macfock/partition.hpp"

namespace macfock {

// Symmetric function: finite linear combination of power-sum monomials
// p_mu = p_{mu_1} p_{mu_2} ... with FieldElem coefficients, graded by |mu|.
class SymFunc {
  public:
    SymFunc() = default;
    static SymFunc one() { return constant(FieldElem(1)); }
    static SymFunc constant(const FieldElem& c);
    static SymFunc p(int k);                         // single power sum p_k, k >= 1
    static SymFunc p_mu(const Partition& mu);        // monomial p_mu
    static SymFunc term(const Partition& mu, const FieldElem& c);

    const std::map<Partition, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // max |mu| over stored terms, -1 when zero

    FieldElem coeff(const Partition& mu) const;
    void add_term(const Partition& mu, const FieldElem& c);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }
    SymFunc operator-() const;

    SymFunc scale(const FieldElem& c) const;
    SymFunc component(int d) const;       // degree-d homogeneous part
    SymFunc truncate(int max_deg) const;  // drop degrees above max_deg
    SymFunc mul_p(int k) const;           // multiply by p_k
    SymFunc d_p(int k) const;             // partial derivative d/dp_k
    // conjugate every coefficient (u -> 1/u, v -> 1/v)
    SymFunc conjugate_coeffs() const;
    SymFunc map_coeffs(const std::function<FieldElem(const FieldElem&)>& f) const;

    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    std::string str() const;        // "((1 - q) / 2)*p[2] + ..." in canonical order
    std::string serialize() const;  // machine form, canonical order
    static SymFunc deserialize(const std::string& s);

  private:
    std::map<Partition, FieldElem> terms_;
};

inline SymFunc operator*(const FieldElem& c, const SymFunc& f) { return f.scale(c); }

// Evaluation point: a rule k |-> value of p_k, defined for all k >= 1.
// Values are memoized; instances are cheap to copy and safe to share.
class AlphabetPoint {
  public:
    AlphabetPoint() = default;
    explicit AlphabetPoint(std::function<FieldElem(int)> rule);

    static AlphabetPoint finite(const std::vector<FieldElem>& values);
    // principal specialization q^(-mu-rho): p_k = sum_i q^(-k mu_i) t^(k(i-1))
    static AlphabetPoint principal(const Partition& mu);
    AlphabetPoint negate() const;  // the point "minus x": p_k -> -p_k(x)

    FieldElem operator()(int k) const;

  private:
    struct State {
        std::function<FieldElem(int)> rule;
        std::map<int, FieldElem> memo;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
};

// the paper's three pairings, all diagonal in the power-sum basis
FieldElem inner_qt(const SymFunc& f, const SymFunc& g);
FieldElem inner_prime(const SymFunc& f, const SymFunc& g);
// sesquilinear: antilinear (coefficient-conjugating) in the first argument
FieldElem herm(const SymFunc& f, const SymFunc& g);

// diagonal weights of the pairings on p_mu
FieldElem weight_qt(const Partition& mu);
FieldElem weight_prime(const Partition& mu);
FieldElem weight_w(const Partition& mu);  // w(mu) = prod (q^(mu_i/2)-q^(-mu_i/2))(t^...)

SymFunc omega(const SymFunc& f);                            // p_k -> (-1)^(k-1) p_k
SymFunc upsilon(const SymFunc& f, bool inverse = false);    // p_k -> (1-t^-k)^-1 p_k

FieldElem evaluate(const SymFunc& f, const AlphabetPoint& x);

}  // namespace macfock
