#pragma once

#include "macfock/fock.hpp"
#include "macfock/report.hpp"

namespace macfock {

// A_r quiver data: r+1 coupling markers and r+1 masses.
struct QuiverSpec {
    int r = 0;
    std::vector<std::string> couplings;  // marker names, length r+1
    std::vector<FieldElem> masses;       // length r+1

    static QuiverSpec adjoint();  // r = 0, coupling "qq", mass m
    void validate() const;
};

// multi-series in the coupling markers: exponent vector -> coefficient
using CouplingSeries = std::map<std::vector<int>, FieldElem>;

// Z = Tr prod_i qq_i^{L_0} W(m_i) through total coupling order `order`
CouplingSeries z_inst_trace(const QuiverSpec& spec, int order);

// single-coupling (r = 0) instanton series: coefficient per power of qq
std::vector<FieldElem> z_inst_trace_r0(int order);

// closed form exp sum_n Q^n/(n m^n) (m^n-q^n)(m^n-t^n)/((1-Q^n)(1-q^n)(1-t^n)),
// Q = qq m / sqrt(qt); the flag substitutes m -> m q t first
std::vector<FieldElem> z_inst_closed(int order, bool redefine_mass = false);

// perturbative factor: coefficient of q^i t^j as a polynomial in m,
// for 2 <= i + j <= order (the constant term 1 is implicit)
std::map<std::pair<int, int>, FieldElem> z_pert(int order);

// trace vs closed form through qq^order
Report compare_zfun(int order, bool redefine_mass = false);

}  // namespace macfock
