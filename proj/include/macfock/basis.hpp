#pragma once

#include <map>

#include "macfock/symfunc.hpp"

namespace macfock {

enum class Basis { power, monomial, schur };

using Expansion = std::map<Partition, FieldElem>;

// Expands f in the target basis; exact, round-trips through to_power.
Expansion basis_convert(const SymFunc& f, Basis target);

// Rebuilds a power-sum SymFunc from an expansion in the given basis.
SymFunc from_expansion(const Expansion& e, Basis source);

// m_mu and s_mu written in the power-sum basis.
SymFunc monomial_sym(const Partition& mu);
SymFunc schur_sym(const Partition& mu);

// Symmetric group character chi^lambda(mu) by the Murnaghan-Nakayama rule.
Int sym_character(const Partition& lambda, const Partition& mu);

}  // namespace macfock
