#pragma once

#include <string>

#include "ilr/formula.hpp"
#include "ilr/proof.hpp"
#include "ilr/term.hpp"
#include "ilr/type.hpp"

namespace ilr {

/// Canonical pretty-printers; parse(print(x)) = x on surface-expressible
/// trees (atomic heads that are definition references, negated atoms or
/// the false constant).
std::string print(const Term& t);
std::string print(const TypeExpr& ty);
std::string print(const Formula& a);
std::string print(const ProofNode& p);
std::string print_state(StateId s);
std::string print(const Judgement& j);

}  // namespace ilr
