#include "ilr/eval.hpp"

#include <cassert>

#include "ilr/error.hpp"
#include "ilr/print.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

bool operator==(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (auto* n = std::get_if<Numeral>(&a)) return n->k == std::get<Numeral>(b).k;
    if (auto* x = std::get_if<Boolean>(&a)) return x->b == std::get<Boolean>(b).b;
    return std::get<StateVal>(a).s == std::get<StateVal>(b).s;
}

std::string to_string(const Value& v) {
    if (auto* n = std::get_if<Numeral>(&v)) return std::to_string(n->k);
    if (auto* b = std::get_if<Boolean>(&v)) return b->b ? "true" : "false";
    return print_state(std::get<StateVal>(v).s);
}

namespace {

// Application spine view: t = head a1 … an.
void unwind(const Term& t, Term& head, std::vector<Term>& args) {
    if (t.kind() == TermKind::App) {
        unwind(t.kid(0), head, args);
        args.push_back(t.kid(1));
    } else {
        head = t;
    }
}

bool all_numerals(const std::vector<Term>& args, std::size_t from,
                  std::vector<std::uint64_t>& out) {
    for (std::size_t i = from; i < args.size(); ++i) {
        auto k = args[i].as_numeral();
        if (!k) return false;
        out.push_back(*k);
    }
    return true;
}

// Contracts a redex whose head is at the root of t (spine-aware).
std::optional<Term> contract_root(const DefEnv& env, const Term& t, const EvalHooks* hooks) {
    switch (t.kind()) {
        case TermKind::App: {
            Term head;
            std::vector<Term> args;
            unwind(t, head, args);
            switch (head.kind()) {
                case TermKind::Lam: {
                    Term reduced = subst(head.kid(0), head.name(), args[0]);
                    return Term::apps(reduced,
                                      std::vector<Term>(args.begin() + 1, args.end()));
                }
                case TermKind::DefRef:
                    return Term::apps(env.at(head.name()).body, args);
                case TermKind::ChiApprox:
                case TermKind::PhiApprox: {
                    std::size_t k = env.pred_arity(head.name()).value() - 1;
                    if (args.size() != 1 + k) return std::nullopt;
                    if (args[0].kind() != TermKind::StateConst) return std::nullopt;
                    std::vector<std::uint64_t> ns;
                    if (!all_numerals(args, 1, ns)) return std::nullopt;
                    StateId s = args[0].state();
                    if (hooks && hooks->on_lookup) hooks->on_lookup(head.name(), ns, s);
                    auto [found, m] = chi_phi_lookup(s, head.name(), ns);
                    if (head.kind() == TermKind::ChiApprox) return Term::boolean(found);
                    return Term::numeral(found ? m : 0);
                }
                case TermKind::AddApprox: {
                    std::size_t k1 = env.pred_arity(head.name()).value();
                    if (args.size() != 1 + k1) return std::nullopt;
                    if (args[0].kind() != TermKind::StateConst) return std::nullopt;
                    std::vector<std::uint64_t> ns;
                    if (!all_numerals(args, 1, ns)) return std::nullopt;
                    StateId s = args[0].state();
                    std::uint64_t m = ns.back();
                    ns.pop_back();
                    if (hooks && hooks->on_lookup) hooks->on_lookup(head.name(), ns, s);
                    return Term::state_const(add_step(env, s, head.name(), ns, m));
                }
                default:
                    return std::nullopt;
            }
        }
        case TermKind::Proj0:
        case TermKind::Proj1: {
            const Term& p = t.kid(0);
            if (p.kind() != TermKind::Pair) return std::nullopt;
            return p.kid(t.kind() == TermKind::Proj0 ? 0 : 1);
        }
        case TermKind::If: {
            if (t.kid(0).kind() == TermKind::True) return t.kid(1);
            if (t.kid(0).kind() == TermKind::False) return t.kid(2);
            return std::nullopt;
        }
        case TermKind::Rec: {
            const Term& n = t.kid(2);
            if (n.kind() == TermKind::Zero) return t.kid(0);
            if (n.kind() == TermKind::Succ) {
                Term m = n.kid(0);
                return Term::app(Term::app(t.kid(1), m), Term::rec(t.kid(0), t.kid(1), m));
            }
            return std::nullopt;
        }
        case TermKind::Join: {
            if (t.kid(0).kind() != TermKind::StateConst ||
                t.kid(1).kind() != TermKind::StateConst)
                return std::nullopt;
            return Term::state_const(cunion(t.kid(0).state(), t.kid(1).state()));
        }
        case TermKind::DefRef:
            return env.at(t.name()).body;
        default:
            return std::nullopt;
    }
}

// One reduction step under the chosen strategy; never descends into
// binders (weak reduction of closed terms).
std::optional<Term> step(const DefEnv& env, const Term& t, Strategy strategy,
                         const EvalHooks* hooks) {
    if (t.kind() == TermKind::Lam) return std::nullopt;
    if (strategy == Strategy::Outermost) {
        if (auto r = contract_root(env, t, hooks)) return r;
    }
    for (std::size_t i = 0; i < t.kids().size(); ++i) {
        if (auto r = step(env, t.kid(i), strategy, hooks)) {
            std::vector<Term> kids = t.kids();
            kids[i] = std::move(*r);
            return t.with_kids(std::move(kids));
        }
    }
    if (strategy == Strategy::Innermost) {
        if (auto r = contract_root(env, t, hooks)) return r;
    }
    return std::nullopt;
}

// Normal Form Property shapes at atomic and product type.
void check_shape(const Term& t, const TypeExpr& ty) {
    switch (ty.kind()) {
        case TypeKind::Nat:
            if (!t.is_numeral()) throw InternalError("normal form at N is not a numeral: " + print(t));
            return;
        case TypeKind::Bool:
            if (t.kind() != TermKind::True && t.kind() != TermKind::False)
                throw InternalError("normal form at Bool is not a boolean: " + print(t));
            return;
        case TypeKind::State:
            if (t.kind() != TermKind::StateConst)
                throw InternalError("normal form at S is not a state constant: " + print(t));
            return;
        case TypeKind::Prod:
            if (t.kind() != TermKind::Pair)
                throw InternalError("normal form at a product is not a pair: " + print(t));
            check_shape(t.kid(0), ty.left());
            check_shape(t.kid(1), ty.right());
            return;
        case TypeKind::Arrow:
            return;  // weak normal forms at arrow type are unconstrained
    }
}

}  // namespace

NormalForm normalize(const DefEnv& env, const Term& t, Strategy strategy,
                     std::uint64_t step_cap, const EvalHooks* hooks) {
    if (!t.closed()) throw NotClosedError("normalize: term is not closed: " + print(t));
    if (contains_oracle_family(t))
        throw WrongFragmentError("normalize: term contains oracle constants: " + print(t));
    TypeExpr ty = typecheck(env, TypeCtx{}, t);

    Term cur = t;
    std::uint64_t steps = 0;
    while (auto next = step(env, cur, strategy, hooks)) {
        cur = std::move(*next);
        if (++steps > step_cap)
            throw StepBudgetError("normalize: step budget exceeded (" + std::to_string(step_cap) +
                                  ")");
#ifndef NDEBUG
        assert(typecheck(env, TypeCtx{}, cur) == ty);  // subject reduction
#endif
    }
    check_shape(cur, ty);

    NormalForm nf{cur, std::nullopt};
    if (ty == TypeExpr::nat()) nf.value = Numeral{*cur.as_numeral()};
    else if (ty == TypeExpr::boolean()) nf.value = Boolean{cur.kind() == TermKind::True};
    else if (ty == TypeExpr::state()) nf.value = StateVal{cur.state()};
    return nf;
}

namespace {

Term approximate_rec(const Term& t, StateId s) {
    switch (t.kind()) {
        case TermKind::OracleX:
            return Term::app(Term::chi_approx(t.name()), Term::state_const(s));
        case TermKind::SkolemPhi:
            return Term::app(Term::phi_approx(t.name()), Term::state_const(s));
        case TermKind::AddClass:
            return Term::app(Term::add_approx(t.name()), Term::state_const(s));
        default: {
            if (t.kids().empty()) return t;
            std::vector<Term> kids;
            kids.reserve(t.kids().size());
            for (const Term& k : t.kids()) kids.push_back(approximate_rec(k, s));
            return t.with_kids(std::move(kids));
        }
    }
}

}  // namespace

Term approximate(const Term& t, StateId s) {
    if (contains_approx_family(t))
        throw WrongFragmentError("approximate: term already contains approximation constants");
    return approximate_rec(t, s);
}

Value eval_atomic(const DefEnv& env, const Term& t, std::uint64_t step_cap,
                  const EvalHooks* hooks) {
    NormalForm nf = normalize(env, t, Strategy::Outermost, step_cap, hooks);
    if (!nf.value) throw TypeError("eval_atomic: term is not of atomic type: " + print(t));
    return *nf.value;
}

bool equal_learn(const DefEnv& env, const Term& t1, const Term& t2) {
    TypeExpr a = typecheck(env, TypeCtx{}, t1);
    TypeExpr b = typecheck(env, TypeCtx{}, t2);
    if (a != b) throw TypeError("equal_learn: compared terms have different types");
    if (!a.is_atomic()) throw TypeError("equal_learn: comparison requires an atomic type");
    return normalize(env, t1).term == normalize(env, t2).term;
}

}  // namespace ilr
