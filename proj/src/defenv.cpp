#include "ilr/defenv.hpp"

#include <mutex>

#include "ilr/error.hpp"
#include "ilr/parse.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

void DefEnv::define(const std::string& name, const TypeExpr& type, const Term& body) {
    if (defs_.count(name)) throw TypeError("duplicate definition `" + name + "`");
    if (!body.closed()) throw TypeError("definition body of `" + name + "` is not closed");
    if (contains_oracle_family(body) || contains_approx_family(body))
        throw TypeError("definition body of `" + name + "` uses oracle or approximation constants");
    if (!has_state_empty(body))
        throw TypeError("definition body of `" + name + "` mentions a non-empty state");
    TypeExpr got = typecheck(*this, TypeCtx{}, body);
    if (got != type)
        throw TypeError("definition `" + name + "` declared " + to_string(type) + " but has type " +
                        to_string(got));
    defs_.emplace(name, Def{type, body});
}

const DefEnv::Def* DefEnv::lookup(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

const DefEnv::Def& DefEnv::at(const std::string& name) const {
    const Def* d = lookup(name);
    if (!d) throw TypeError("unknown definition `" + name + "`");
    return *d;
}

std::optional<std::size_t> DefEnv::pred_arity(const std::string& name) const {
    const Def* d = lookup(name);
    if (!d) return std::nullopt;
    std::size_t k = 0;
    TypeExpr t = d->type;
    while (t.kind() == TypeKind::Arrow && t.left() == TypeExpr::nat()) {
        ++k;
        t = t.right();
    }
    if (t != TypeExpr::boolean() || k == 0) return std::nullopt;
    return k;
}

const char* prelude_source() {
    return
        "# Built-in definitions loaded by default (--no-prelude disables).\n"
        "notb : Bool -> Bool = \\a:Bool. if a then false else true\n"
        "andb : Bool -> Bool -> Bool = \\a:Bool. \\b:Bool. if a then b else false\n"
        "orb : Bool -> Bool -> Bool = \\a:Bool. \\b:Bool. if a then true else b\n"
        "impb : Bool -> Bool -> Bool = \\a:Bool. \\b:Bool. if a then b else true\n"
        "pred : N -> N = \\n:N. rec(0, \\k:N. \\r:N. k, n)\n"
        "sub : N -> N -> N = \\m:N. \\n:N. rec(m, \\k:N. \\r:N. pred r, n)\n"
        "plus : N -> N -> N = \\m:N. \\n:N. rec(m, \\k:N. \\r:N. S r, n)\n"
        "isz : N -> Bool = \\n:N. rec(true, \\k:N. \\r:Bool. false, n)\n"
        "leq : N -> N -> Bool = \\m:N. \\n:N. isz (sub m n)\n"
        "eq : N -> N -> Bool = \\m:N. \\n:N. andb (leq m n) (leq n m)\n"
        "geq : N -> N -> Bool = \\m:N. \\n:N. leq n m\n"
        "NEXT : N -> N -> Bool = \\x:N. \\y:N. eq y (S x)\n"
        "GEQ : N -> N -> Bool = \\x:N. \\y:N. leq x y\n";
}

const DefEnv& prelude() {
    static const DefEnv env = [] {
        DefEnv e;
        parse_defs(e, prelude_source());
        return e;
    }();
    return env;
}

}  // namespace ilr
