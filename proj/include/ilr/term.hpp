#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ilr/state.hpp"
#include "ilr/type.hpp"

namespace ilr {

enum class TermKind {
    Var,         // name
    Lam,         // name : ann, kid0 = body
    App,         // kid0 = fn, kid1 = arg
    Pair,        // kid0, kid1
    Proj0,       // kid0
    Proj1,       // kid0
    Zero,        //
    Succ,        // kid0
    True,        //
    False,       //
    If,          // kid0 = cond, kid1 = then, kid2 = else
    Rec,         // kid0 = base, kid1 = step, kid2 = n
    StateConst,  // state
    Join,        // kid0, kid1
    OracleX,     // pred    (ideal truth oracle, no reduction rule)
    SkolemPhi,   // pred    (ideal witness map, no reduction rule)
    AddClass,    // pred    (ideal extension request, no reduction rule)
    ChiApprox,   // pred    (state-indexed truth guess)
    PhiApprox,   // pred    (state-indexed witness guess)
    AddApprox,   // pred    (state-indexed extension step)
    DefRef,      // name    (reference into the definition environment)
};

/// Immutable expression tree of the calculus. Value-semantic handle over a
/// shared node; all factories normalize nothing.
class Term {
public:
    Term() : Term(zero()) {}

    static Term var(std::string name);
    static Term lam(std::string name, TypeExpr ann, Term body);
    static Term app(Term fn, Term arg);
    static Term pair(Term l, Term r);
    static Term proj0(Term t);
    static Term proj1(Term t);
    static Term zero();
    static Term succ(Term t);
    static Term true_();
    static Term false_();
    static Term if_(Term cond, Term then_t, Term else_t);
    static Term rec(Term base, Term step, Term n);
    static Term state_const(StateId s);
    static Term join(Term l, Term r);
    static Term oracle_x(PredName p);
    static Term skolem_phi(PredName p);
    static Term add_class(PredName p);
    static Term chi_approx(PredName p);
    static Term phi_approx(PredName p);
    static Term add_approx(PredName p);
    static Term def_ref(std::string name);

    static Term boolean(bool b) { return b ? true_() : false_(); }
    static Term numeral(std::uint64_t k);

    /// Left-nested application f a1 a2 … an.
    static Term apps(Term f, const std::vector<Term>& args);

    TermKind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const TypeExpr& ann() const { return node_->ann; }
    StateId state() const { return node_->state; }
    const std::vector<Term>& kids() const { return node_->kids; }
    const Term& kid(std::size_t i) const { return node_->kids[i]; }

    bool is_numeral() const;
    std::optional<std::uint64_t> as_numeral() const;

    /// Rebuilds this node with new children (same kind/name/ann/state).
    Term with_kids(std::vector<Term> kids) const;

    void free_vars(std::set<std::string>& out) const;
    std::set<std::string> free_vars() const;
    bool closed() const { return free_vars().empty(); }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

private:
    struct Node {
        TermKind kind;
        std::string name;     // Var/Lam/DefRef name or pred for constant families
        TypeExpr ann;         // Lam annotation only
        StateId state{};      // StateConst only
        std::vector<Term> kids;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Term make(TermKind k, std::string name, TypeExpr ann, StateId st,
                     std::vector<Term> kids);
    std::shared_ptr<const Node> node_;
};

/// Capture-avoiding substitution t[v/x].
Term subst(const Term& t, const std::string& x, const Term& v);

/// A name not free in any of the given terms, derived from `base`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

}  // namespace ilr
