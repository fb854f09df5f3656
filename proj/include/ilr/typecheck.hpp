#pragma once

#include <map>
#include <string>

#include "ilr/defenv.hpp"
#include "ilr/term.hpp"
#include "ilr/type.hpp"

namespace ilr {

using TypeCtx = std::map<std::string, TypeExpr>;

/// Unique type of t in ctx; throws TypeError naming the offending subterm.
TypeExpr typecheck(const DefEnv& env, const TypeCtx& ctx, const Term& t);

inline TypeExpr typecheck(const DefEnv& env, const Term& t) {
    return typecheck(env, TypeCtx{}, t);
}

/// Calculus fragments, ordered as a lattice:
///   Pure < Stateful < {Ideal, Learning} < Mixed.
/// Pure: no state or extension constants. Stateful: adds state constants
/// and Join. Ideal: adds the oracle family (X/Phi/Add). Learning: adds the
/// approximation family (chi/phi/add). Mixed: both families occur.
enum class Fragment { Pure, Stateful, Ideal, Learning, Mixed };

Fragment fragment_join(Fragment a, Fragment b);
Fragment classify(const Term& t);
const char* to_string(Fragment f);

/// True iff every state constant in t denotes the empty state.
bool has_state_empty(const Term& t);

bool contains_oracle_family(const Term& t);  // X_P / Phi_P / Add_P
bool contains_approx_family(const Term& t);  // chi_P / phi_P / add_P

}  // namespace ilr
