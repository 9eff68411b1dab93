#pragma once

#include <functional>
#include <map>

#include "macfock/macdonald.hpp"
#include "macfock/report.hpp"
#include "macfock/symfunc.hpp"

namespace macfock {

// Coefficient rule for vertex operators: k -> f_[k].  A plain FieldElem f is
// raised by the Adams substitution; a custom rule covers alphabets that are
// not powers of a single element.
class AdamsRule {
  public:
    AdamsRule(const FieldElem& f);  // k -> f_[k] = adams_k(f)
    static AdamsRule custom(std::function<FieldElem(int)> rule);
    FieldElem operator()(int k) const;

  private:
    std::function<FieldElem(int)> rule_;
};

// Heisenberg generators: alpha_{-n} multiplies by p_n/((1-q^n)(1-t^n)),
// alpha_n = n (qt)^(n/2) d/dp_n for n > 0.  n = 0 is an error.
SymFunc alpha(int n, const SymFunc& f);

// Gamma_-(f) = exp(sum f_[k] p_k / k): raising; exact in degrees <= max_deg.
SymFunc gamma_minus(const AdamsRule& f, const SymFunc& g, int max_deg);
// Gamma_+(f) = exp(sum f_[k] d/dp_k): lowering; terminates, globally exact.
SymFunc gamma_plus(const AdamsRule& f, const SymFunc& g);

// homogeneous pieces: the degree-(+r) part of Gamma_- and degree-(-s) part of Gamma_+
SymFunc gamma_minus_component(const AdamsRule& f, int r, const SymFunc& g);
SymFunc gamma_plus_component(const AdamsRule& f, int s, const SymFunc& g);

// V = (-1)^{L_0} T e^{phi_+(1)} e^{phi_-(sqrt(qt))}; exact in degrees <= max_deg
SymFunc op_V(Macdonald& mac, const SymFunc& f, int max_deg);
// W(m) = (m/sqrt(qt))^{L_0} e^{phi_+(1)-phi_+(qt/m)} e^{phi_-(sqrt(qt))-phi_-(sqrt(qt)/m)}
SymFunc op_W(const SymFunc& f, int max_deg);

// coefficients of (scale * x)_{q,t} = exp(-sum_k (scale*x)^k / (k(1-q^k)(1-t^k)))
// as a series in the marker x, through x^order
std::vector<FieldElem> pochhammer_qt_series(const FieldElem& scale, int order);

// Degree-window operator: exact matrices between graded components in the
// power-sum basis.  Blocks outside the reliable window are flagged and any
// read of them is a hard error.
class TruncOp {
  public:
    static constexpr int kUnbounded = 1 << 20;

    // builds blocks by applying `apply` to every p_mu with |mu| in the window;
    // apply must be exact on output degrees <= max_deg
    static TruncOp build(int max_deg, int max_raise, int max_lower,
                         const std::function<SymFunc(const Partition&)>& apply);
    static TruncOp identity(int max_deg);
    static TruncOp diagonal_degree(int max_deg, const std::function<FieldElem(int)>& scale);

    int max_deg() const { return max_deg_; }
    int max_raise() const { return max_raise_; }
    int max_lower() const { return max_lower_; }

    bool exact(int dout, int din) const;
    const std::vector<std::vector<FieldElem>>& block(int dout, int din) const;  // throws if not exact
    FieldElem entry(const Partition& out, const Partition& in) const;

    static TruncOp compose(const TruncOp& a, const TruncOp& b);  // a after b
    TruncOp adjoint() const;  // with respect to herm
    FieldElem trace(int d) const;
    SymFunc apply(const SymFunc& f) const;

    std::string debug_serialize() const;  // block list for golden tests

  private:
    int max_deg_ = 0;
    int max_raise_ = 0;
    int max_lower_ = 0;
    // blocks_[dout][din]; validity per block
    std::map<std::pair<int, int>, std::vector<std::vector<FieldElem>>> blocks_;
    std::map<std::pair<int, int>, bool> exact_;
};

TruncOp truncop_V(Macdonald& mac, int max_deg);
TruncOp truncop_W(int max_deg);
TruncOp truncop_W(int max_deg, const FieldElem& mass);  // W with a substituted mass

// Theorem 1 as an m-series identity on degree blocks:
// W(m) = (m)_{q,t} V* (m/sqrt(qt))^{L_0} V through m^m_order on degrees <= max_deg.
Report check_thm1(Macdonald& mac, int max_deg, int m_order);

// exponentiated boson commutation: e^{phi_-(z)} e^{phi_+(w)} =
// (sqrt(qt) w/z)_{q,t} e^{phi_+(w)} e^{phi_-(z)}, checked as a double series
// in the markers through (w/z)-order `order` on inputs of degree <= deg.
Report check_comm_phi(int order, int deg);

// Heisenberg relations [alpha_n, alpha_m] = delta_{n+m} n w(n)^{-1}
Report check_heisenberg(int max_index, int max_deg);

}  // namespace macfock
