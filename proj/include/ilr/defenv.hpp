#pragma once

#include <map>
#include <optional>
#include <string>

#include "ilr/term.hpp"
#include "ilr/type.hpp"

namespace ilr {

/// Named closed definitions (primitive recursive predicates/functions and
/// the boolean connectives). Bodies are pure terms: no oracle or
/// approximation constants, no non-empty state constant, no free variables.
class DefEnv {
public:
    struct Def {
        TypeExpr type;
        Term body;
    };

    /// Validates and typechecks the body before binding. Throws TypeError.
    void define(const std::string& name, const TypeExpr& type, const Term& body);

    const Def* lookup(const std::string& name) const;
    const Def& at(const std::string& name) const;  // throws TypeError if unbound
    bool bound(const std::string& name) const { return defs_.count(name) != 0; }

    /// Arity of a predicate name bound at type N^k -> Bool; nullopt otherwise.
    std::optional<std::size_t> pred_arity(const std::string& name) const;

    const std::map<std::string, Def>& all() const { return defs_; }

private:
    std::map<std::string, Def> defs_;
};

/// Built-in definitions every tool loads by default: boolean connectives
/// (impb, notb, andb, orb), arithmetic helpers (pred, sub, plus), the
/// comparisons (isz, leq, eq, geq) and the sample predicates NEXT, GEQ.
const DefEnv& prelude();

/// Source text of the prelude in .defs syntax (also shipped as
/// corpus/prelude.defs).
const char* prelude_source();

}  // namespace ilr
