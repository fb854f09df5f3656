#include "ilr/formula.hpp"

#include "ilr/error.hpp"
#include "ilr/print.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

Formula Formula::atomic(Term head, std::vector<Term> args) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Atomic, std::move(head), std::move(args), {}, nullptr, nullptr}));
}

namespace {
std::shared_ptr<const Formula> box(Formula f) { return std::make_shared<const Formula>(std::move(f)); }
}  // namespace

Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::And, {}, {}, {}, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Or, {}, {}, {}, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::imp(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Imp, {}, {}, {}, box(std::move(a)), box(std::move(b))}));
}
Formula Formula::forall(std::string var, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Forall, {}, {}, std::move(var), box(std::move(body)), nullptr}));
}
Formula Formula::exists(std::string var, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::Exists, {}, {}, std::move(var), box(std::move(body)), nullptr}));
}

void Formula::free_vars(std::set<std::string>& out) const {
    switch (kind()) {
        case FormulaKind::Atomic:
            for (const Term& a : args()) a.free_vars(out);
            return;
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Imp:
            left().free_vars(out);
            right().free_vars(out);
            return;
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            std::set<std::string> inner;
            body().free_vars(inner);
            inner.erase(var());
            out.insert(inner.begin(), inner.end());
            return;
        }
    }
}

std::set<std::string> Formula::free_vars() const {
    std::set<std::string> out;
    free_vars(out);
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case FormulaKind::Atomic:
            return a.head() == b.head() && a.args() == b.args();
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Imp:
            return a.left() == b.left() && a.right() == b.right();
        case FormulaKind::Forall:
        case FormulaKind::Exists:
            return a.var() == b.var() && a.body() == b.body();
    }
    return false;
}

namespace {

void validate_rec(const DefEnv& env, const Formula& a, TypeCtx& ctx) {
    switch (a.kind()) {
        case FormulaKind::Atomic: {
            const Term& h = a.head();
            if (!h.closed()) throw TypeError("atomic head is not closed: " + print(h));
            if (!has_state_empty(h))
                throw TypeError("atomic head mentions a non-empty state: " + print(h));
            if (contains_approx_family(h))
                throw TypeError("atomic head contains approximation constants: " + print(h));
            TypeExpr ht = typecheck(env, TypeCtx{}, h);
            for (const Term& arg : a.args()) {
                if (ht.kind() != TypeKind::Arrow || ht.left() != TypeExpr::nat())
                    throw TypeError("atomic head applied to too many arguments: " + print(h));
                if (!has_state_empty(arg) || contains_approx_family(arg))
                    throw TypeError("atomic argument outside the source language: " + print(arg));
                if (typecheck(env, ctx, arg) != TypeExpr::nat())
                    throw TypeError("atomic argument is not a numeral term: " + print(arg));
                ht = ht.right();
            }
            if (ht != TypeExpr::boolean())
                throw TypeError("atomic head does not end in Bool: " + print(h));
            return;
        }
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Imp:
            validate_rec(env, a.left(), ctx);
            validate_rec(env, a.right(), ctx);
            return;
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            auto prev = ctx.find(a.var());
            std::optional<TypeExpr> saved;
            if (prev != ctx.end()) saved = prev->second;
            ctx.insert_or_assign(a.var(), TypeExpr::nat());
            validate_rec(env, a.body(), ctx);
            if (saved) ctx.insert_or_assign(a.var(), *saved);
            else ctx.erase(a.var());
            return;
        }
    }
}

}  // namespace

void validate_formula(const DefEnv& env, const Formula& a) {
    TypeCtx ctx;
    for (const std::string& v : a.free_vars()) ctx.emplace(v, TypeExpr::nat());
    validate_rec(env, a, ctx);
}

TypeExpr realizer_type(const Formula& a) {
    switch (a.kind()) {
        case FormulaKind::Atomic:
            return TypeExpr::state();
        case FormulaKind::And:
            return TypeExpr::prod(realizer_type(a.left()), realizer_type(a.right()));
        case FormulaKind::Or:
            return TypeExpr::prod(
                TypeExpr::boolean(),
                TypeExpr::prod(realizer_type(a.left()), realizer_type(a.right())));
        case FormulaKind::Imp:
            return TypeExpr::arrow(realizer_type(a.left()), realizer_type(a.right()));
        case FormulaKind::Forall:
            return TypeExpr::arrow(TypeExpr::nat(), realizer_type(a.body()));
        case FormulaKind::Exists:
            return TypeExpr::prod(TypeExpr::nat(), realizer_type(a.body()));
    }
    throw InternalError("realizer_type: unhandled formula kind");
}

Formula approx_formula(const Formula& a, StateId s) {
    switch (a.kind()) {
        case FormulaKind::Atomic: {
            std::vector<Term> args;
            args.reserve(a.args().size());
            for (const Term& t : a.args()) args.push_back(approximate(t, s));
            return Formula::atomic(approximate(a.head(), s), std::move(args));
        }
        case FormulaKind::And:
            return Formula::conj(approx_formula(a.left(), s), approx_formula(a.right(), s));
        case FormulaKind::Or:
            return Formula::disj(approx_formula(a.left(), s), approx_formula(a.right(), s));
        case FormulaKind::Imp:
            return Formula::imp(approx_formula(a.left(), s), approx_formula(a.right(), s));
        case FormulaKind::Forall:
            return Formula::forall(a.var(), approx_formula(a.body(), s));
        case FormulaKind::Exists:
            return Formula::exists(a.var(), approx_formula(a.body(), s));
    }
    throw InternalError("approx_formula: unhandled formula kind");
}

bool eval_closed_atomic(const DefEnv& env, const Formula& a) {
    if (a.kind() != FormulaKind::Atomic)
        throw TypeError("eval_closed_atomic: formula is not atomic");
    Term t = Term::apps(a.head(), a.args());
    Value v = eval_atomic(env, t);
    return std::get<Boolean>(v).b;
}

Formula subst_formula(const Formula& a, const std::string& x, const Term& t) {
    switch (a.kind()) {
        case FormulaKind::Atomic: {
            std::vector<Term> args;
            args.reserve(a.args().size());
            for (const Term& arg : a.args()) args.push_back(subst(arg, x, t));
            return Formula::atomic(a.head(), std::move(args));
        }
        case FormulaKind::And:
            return Formula::conj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
        case FormulaKind::Or:
            return Formula::disj(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
        case FormulaKind::Imp:
            return Formula::imp(subst_formula(a.left(), x, t), subst_formula(a.right(), x, t));
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            bool is_forall = a.kind() == FormulaKind::Forall;
            if (a.var() == x) return a;  // shadowed
            std::set<std::string> fv = t.free_vars();
            if (fv.count(a.var())) {
                std::set<std::string> avoid = fv;
                a.body().free_vars(avoid);
                avoid.insert(x);
                std::string y = fresh_name(a.var(), avoid);
                Formula renamed = subst_formula(a.body(), a.var(), Term::var(y));
                Formula inner = subst_formula(renamed, x, t);
                return is_forall ? Formula::forall(y, std::move(inner))
                                 : Formula::exists(y, std::move(inner));
            }
            Formula inner = subst_formula(a.body(), x, t);
            return is_forall ? Formula::forall(a.var(), std::move(inner))
                             : Formula::exists(a.var(), std::move(inner));
        }
    }
    throw InternalError("subst_formula: unhandled formula kind");
}

Formula negated_atom(const PredName& p, std::size_t arity, std::vector<Term> args) {
    std::vector<Term> vars;
    Term applied = Term::def_ref(p);
    for (std::size_t i = 0; i < arity; ++i) {
        std::string x = "_a" + std::to_string(i + 1);
        vars.push_back(Term::var(x));
        applied = Term::app(applied, vars.back());
    }
    Term head = Term::app(Term::def_ref("notb"), applied);
    for (std::size_t i = arity; i > 0; --i)
        head = Term::lam("_a" + std::to_string(i), TypeExpr::nat(), head);
    return Formula::atomic(head, std::move(args));
}

Formula falsum() { return Formula::atomic(Term::false_(), {}); }

}  // namespace ilr
