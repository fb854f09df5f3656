#include "ilr/typecheck.hpp"

#include "ilr/error.hpp"
#include "ilr/print.hpp"

namespace ilr {

namespace {

TypeExpr nat_fn(std::size_t n, const TypeExpr& result) {
    TypeExpr t = result;
    for (std::size_t i = 0; i < n; ++i) t = TypeExpr::arrow(TypeExpr::nat(), t);
    return t;
}

[[noreturn]] void fail(const std::string& what, const Term& t) {
    throw TypeError(what + " in `" + print(t) + "`");
}

std::size_t pred_arity_or_fail(const DefEnv& env, const Term& t) {
    auto k = env.pred_arity(t.name());
    if (!k) fail("unknown or non-predicate name `" + t.name() + "`", t);
    if (*k < 1) fail("predicate `" + t.name() + "` has arity 0", t);
    return *k;
}

}  // namespace

TypeExpr typecheck(const DefEnv& env, const TypeCtx& ctx, const Term& t) {
    switch (t.kind()) {
        case TermKind::Var: {
            auto it = ctx.find(t.name());
            if (it == ctx.end()) fail("unbound variable `" + t.name() + "`", t);
            return it->second;
        }
        case TermKind::Lam: {
            TypeCtx inner = ctx;
            inner.insert_or_assign(t.name(), t.ann());
            return TypeExpr::arrow(t.ann(), typecheck(env, inner, t.kid(0)));
        }
        case TermKind::App: {
            TypeExpr f = typecheck(env, ctx, t.kid(0));
            if (f.kind() != TypeKind::Arrow) fail("application of a non-function", t);
            TypeExpr a = typecheck(env, ctx, t.kid(1));
            if (a != f.left())
                fail("argument type " + to_string(a) + " does not match " + to_string(f.left()), t);
            return f.right();
        }
        case TermKind::Pair:
            return TypeExpr::prod(typecheck(env, ctx, t.kid(0)), typecheck(env, ctx, t.kid(1)));
        case TermKind::Proj0:
        case TermKind::Proj1: {
            TypeExpr p = typecheck(env, ctx, t.kid(0));
            if (p.kind() != TypeKind::Prod) fail("projection of a non-pair type", t);
            return t.kind() == TermKind::Proj0 ? p.left() : p.right();
        }
        case TermKind::Zero:
            return TypeExpr::nat();
        case TermKind::Succ: {
            if (typecheck(env, ctx, t.kid(0)) != TypeExpr::nat())
                fail("successor of a non-numeral type", t);
            return TypeExpr::nat();
        }
        case TermKind::True:
        case TermKind::False:
            return TypeExpr::boolean();
        case TermKind::If: {
            if (typecheck(env, ctx, t.kid(0)) != TypeExpr::boolean())
                fail("non-boolean condition", t);
            TypeExpr a = typecheck(env, ctx, t.kid(1));
            TypeExpr b = typecheck(env, ctx, t.kid(2));
            if (a != b) fail("branch types differ: " + to_string(a) + " vs " + to_string(b), t);
            return a;
        }
        case TermKind::Rec: {
            TypeExpr base = typecheck(env, ctx, t.kid(0));
            TypeExpr step = typecheck(env, ctx, t.kid(1));
            TypeExpr want =
                TypeExpr::arrow(TypeExpr::nat(), TypeExpr::arrow(base, base));
            if (step != want)
                fail("recursor step has type " + to_string(step) + ", expected " + to_string(want),
                     t);
            if (typecheck(env, ctx, t.kid(2)) != TypeExpr::nat())
                fail("recursor argument is not a numeral type", t);
            return base;
        }
        case TermKind::StateConst:
            return TypeExpr::state();
        case TermKind::Join: {
            if (typecheck(env, ctx, t.kid(0)) != TypeExpr::state() ||
                typecheck(env, ctx, t.kid(1)) != TypeExpr::state())
                fail("join of non-states", t);
            return TypeExpr::state();
        }
        case TermKind::OracleX:
            return nat_fn(pred_arity_or_fail(env, t) - 1, TypeExpr::boolean());
        case TermKind::SkolemPhi:
            return nat_fn(pred_arity_or_fail(env, t) - 1, TypeExpr::nat());
        case TermKind::AddClass:
            return nat_fn(pred_arity_or_fail(env, t), TypeExpr::state());
        case TermKind::ChiApprox:
            return TypeExpr::arrow(TypeExpr::state(),
                                   nat_fn(pred_arity_or_fail(env, t) - 1, TypeExpr::boolean()));
        case TermKind::PhiApprox:
            return TypeExpr::arrow(TypeExpr::state(),
                                   nat_fn(pred_arity_or_fail(env, t) - 1, TypeExpr::nat()));
        case TermKind::AddApprox:
            return TypeExpr::arrow(TypeExpr::state(),
                                   nat_fn(pred_arity_or_fail(env, t), TypeExpr::state()));
        case TermKind::DefRef: {
            const DefEnv::Def* d = env.lookup(t.name());
            if (!d) fail("unknown definition `" + t.name() + "`", t);
            return d->type;
        }
    }
    throw InternalError("typecheck: unhandled term kind");
}

Fragment fragment_join(Fragment a, Fragment b) {
    if (a == b) return a;
    auto rank = [](Fragment f) {
        switch (f) {
            case Fragment::Pure: return 0;
            case Fragment::Stateful: return 1;
            case Fragment::Ideal:
            case Fragment::Learning: return 2;
            case Fragment::Mixed: return 3;
        }
        return 3;
    };
    if (rank(a) < rank(b)) std::swap(a, b);
    // now rank(a) >= rank(b)
    if (rank(a) > rank(b)) return a == Fragment::Mixed ? Fragment::Mixed : a;
    // equal rank, different fragments: Ideal vs Learning
    return Fragment::Mixed;
}

Fragment classify(const Term& t) {
    Fragment f = Fragment::Pure;
    switch (t.kind()) {
        case TermKind::StateConst:
        case TermKind::Join:
            f = Fragment::Stateful;
            break;
        case TermKind::OracleX:
        case TermKind::SkolemPhi:
        case TermKind::AddClass:
            f = Fragment::Ideal;
            break;
        case TermKind::ChiApprox:
        case TermKind::PhiApprox:
        case TermKind::AddApprox:
            f = Fragment::Learning;
            break;
        default:
            break;
    }
    for (const Term& k : t.kids()) f = fragment_join(f, classify(k));
    return f;
}

const char* to_string(Fragment f) {
    switch (f) {
        case Fragment::Pure: return "pure";
        case Fragment::Stateful: return "stateful";
        case Fragment::Ideal: return "ideal";
        case Fragment::Learning: return "learning";
        case Fragment::Mixed: return "mixed";
    }
    return "?";
}

bool has_state_empty(const Term& t) {
    if (t.kind() == TermKind::StateConst && !state_empty(t.state())) return false;
    for (const Term& k : t.kids())
        if (!has_state_empty(k)) return false;
    return true;
}

bool contains_oracle_family(const Term& t) {
    if (t.kind() == TermKind::OracleX || t.kind() == TermKind::SkolemPhi ||
        t.kind() == TermKind::AddClass)
        return true;
    for (const Term& k : t.kids())
        if (contains_oracle_family(k)) return true;
    return false;
}

bool contains_approx_family(const Term& t) {
    if (t.kind() == TermKind::ChiApprox || t.kind() == TermKind::PhiApprox ||
        t.kind() == TermKind::AddApprox)
        return true;
    for (const Term& k : t.kids())
        if (contains_approx_family(k)) return true;
    return false;
}

}  // namespace ilr
