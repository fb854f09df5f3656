#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ilr/defenv.hpp"
#include "ilr/eval.hpp"
#include "ilr/term.hpp"

namespace ilr {

enum class FormulaKind { Atomic, And, Or, Imp, Forall, Exists };

/// Arithmetical formula over Boolean-valued predicate terms. All bound and
/// free variables are of type N. Atomic heads are closed Boolean-valued
/// terms of empty state (they may mention oracle constants).
class Formula {
public:
    Formula() : Formula(atomic(Term::false_(), {})) {}

    static Formula atomic(Term head, std::vector<Term> args);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    FormulaKind kind() const { return node_->kind; }
    const Term& head() const { return node_->head; }
    const std::vector<Term>& args() const { return node_->args; }
    const std::string& var() const { return node_->var; }
    const Formula& left() const { return *node_->l; }
    const Formula& right() const { return *node_->r; }
    const Formula& body() const { return *node_->l; }

    void free_vars(std::set<std::string>& out) const;
    std::set<std::string> free_vars() const;
    bool closed() const { return free_vars().empty(); }

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node {
        FormulaKind kind;
        Term head;                  // Atomic
        std::vector<Term> args;     // Atomic
        std::string var;            // Forall/Exists
        std::shared_ptr<const Formula> l, r;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Checks the well-formedness constraints and throws TypeError on breach:
/// atomic heads closed of empty state at type N^n -> Bool, arguments of
/// type N with free variables of type N.
void validate_formula(const DefEnv& env, const Formula& a);

/// Realizer type of a formula: atomic -> S, conjunction -> product,
/// disjunction -> Bool x (left x right), implication/universal -> arrow,
/// existential -> N x body.
TypeExpr realizer_type(const Formula& a);

/// Specializes every term in the formula at state s (heads and arguments).
Formula approx_formula(const Formula& a, StateId s);

/// Truth of a closed atomic formula with no oracle constants.
bool eval_closed_atomic(const DefEnv& env, const Formula& a);

/// Capture-avoiding substitution of a Nat term for a formula variable.
Formula subst_formula(const Formula& a, const std::string& x, const Term& t);

// -- canonical builders shared by the parser and the proof checker -------

/// Head λx1…xn. notb (p x1…xn); as a formula: the negated atom !p(args).
Formula negated_atom(const PredName& p, std::size_t arity, std::vector<Term> args);

/// The atomic formula `false` (head constantly False, no arguments).
Formula falsum();

}  // namespace ilr
