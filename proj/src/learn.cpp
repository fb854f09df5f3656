#include "ilr/learn.hpp"

#include <nlohmann/json.hpp>

#include "ilr/error.hpp"
#include "ilr/print.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

WiChain::WiChain(std::vector<StateId> states) : states_(std::move(states)) {
    if (states_.empty()) throw Error("a chain needs at least one state");
    for (std::size_t i = 0; i + 1 < states_.size(); ++i)
        if (!state_subset(states_[i], states_[i + 1]))
            throw Error("chain is not weakly increasing at index " + std::to_string(i + 1));
}

namespace {

Term p0(const Term& t) { return Term::proj0(t); }
Term p1(const Term& t) { return Term::proj0(Term::proj1(t)); }
Term p2(const Term& t) { return Term::proj1(Term::proj1(t)); }

Value value_at(const DefEnv& env, const Term& t, StateId s) {
    return eval_atomic(env, approximate(t, s));
}

Verdict pass() { return Verdict{}; }

Verdict fail(std::string path, StateId s, std::string detail) {
    return Verdict{Verdict::Kind::Fail, 0, std::move(path), s, std::move(detail)};
}

std::string extend(const std::string& path, int child) {
    if (path.empty()) return std::to_string(child);
    return path + "/" + std::to_string(child);
}

Verdict combine(Verdict a, const Verdict& b) {
    if (a.kind == Verdict::Kind::Fail) return a;
    if (b.kind == Verdict::Kind::Fail) return b;
    a.unverified_imps += b.unverified_imps;
    if (a.unverified_imps > 0) a.kind = Verdict::Kind::PassUnverifiedImp;
    return a;
}

Verdict realizes_rec(const DefEnv& env, const Term& t, const Formula& a, StateId s,
                     std::uint64_t depth, const ImpCandidates& cands, const std::string& path) {
    switch (a.kind()) {
        case FormulaKind::Atomic: {
            Value v = value_at(env, t, s);
            StateId out = std::get<StateVal>(v).s;
            if (!state_empty(out)) return pass();  // new knowledge offered, nothing to certify
            Formula approx = approx_formula(a, s);
            if (eval_closed_atomic(env, approx)) return pass();
            return fail(path, s,
                        "empty realizer but " + print(a) + " is false at " + print_state(s));
        }
        case FormulaKind::And: {
            Verdict l = realizes_rec(env, Term::proj0(t), a.left(), s, depth, cands,
                                     extend(path, 0));
            if (!l.passed()) return l;
            return combine(l, realizes_rec(env, Term::proj1(t), a.right(), s, depth, cands,
                                           extend(path, 1)));
        }
        case FormulaKind::Or: {
            Value b = value_at(env, p0(t), s);
            if (std::get<Boolean>(b).b)
                return realizes_rec(env, p1(t), a.left(), s, depth, cands, extend(path, 0));
            return realizes_rec(env, p2(t), a.right(), s, depth, cands, extend(path, 1));
        }
        case FormulaKind::Imp: {
            auto it = cands.find(path);
            if (it == cands.end() || it->second.empty())
                return Verdict{Verdict::Kind::PassUnverifiedImp, 1, {}, {}, {}};
            Verdict acc = pass();
            for (const Term& u : it->second) {
                Verdict pre = realizes_rec(env, u, a.left(), s, depth, cands, extend(path, 0));
                if (!pre.passed()) continue;  // candidate does not realize the antecedent
                Verdict post = realizes_rec(env, Term::app(t, u), a.right(), s, depth, cands,
                                            extend(path, 1));
                if (!post.passed()) return post;
                acc = combine(acc, combine(pre, post));
            }
            return acc;
        }
        case FormulaKind::Forall: {
            Verdict acc = pass();
            for (std::uint64_t n = 0; n <= depth; ++n) {
                Term inst = Term::app(t, Term::numeral(n));
                Formula body = subst_formula(a.body(), a.var(), Term::numeral(n));
                Verdict v = realizes_rec(env, inst, body, s, depth, cands, extend(path, 0));
                if (!v.passed()) return v;
                acc = combine(acc, v);
            }
            return acc;
        }
        case FormulaKind::Exists: {
            Value n = value_at(env, Term::proj0(t), s);
            std::uint64_t w = std::get<Numeral>(n).k;
            Formula body = subst_formula(a.body(), a.var(), Term::numeral(w));
            return realizes_rec(env, Term::proj1(t), body, s, depth, cands, extend(path, 0));
        }
    }
    throw InternalError("realizes_at: unhandled formula kind");
}

}  // namespace

Verdict realizes_at(const DefEnv& env, const Term& t, const Formula& a, StateId s,
                    std::uint64_t depth, const ImpCandidates& imp_candidates) {
    if (!t.closed()) throw TypeError("realizer must be closed: " + print(t));
    if (!has_state_empty(t)) throw TypeError("realizer must have empty state: " + print(t));
    if (!a.closed()) throw TypeError("formula must be closed: " + print(a));
    TypeExpr ty = typecheck(env, TypeCtx{}, t);
    TypeExpr want = realizer_type(a);
    if (ty != want)
        throw TypeError("realizer has type " + to_string(ty) + ", formula needs " +
                        to_string(want));
    return realizes_rec(env, t, a, s, depth, imp_candidates, "");
}

ConvergenceReport check_converges(const DefEnv& env, const Term& t, const WiChain& chain) {
    const auto& states = chain.states();
    ConvergenceReport report;
    std::optional<Value> prev;
    for (std::size_t i = 0; i < states.size(); ++i) {
        Value v = value_at(env, t, states[i]);
        if (prev && !(v == *prev)) report.last_change_index = i;
        prev = v;
    }
    report.final_value = *prev;
    return report;
}

std::pair<StateId, LearnTrace> fixed_point(const DefEnv& env, const Term& t, StateId start,
                                           std::uint64_t iter_cap) {
    if (!t.closed()) throw TypeError("learning term must be closed: " + print(t));
    if (!has_state_empty(t)) throw TypeError("learning term must have empty state: " + print(t));
    if (typecheck(env, TypeCtx{}, t) != TypeExpr::state())
        throw TypeError("learning term must have type S: " + print(t));

    LearnTrace trace;
    trace.warm_start = !state_empty(start);
    StateId cur = start;
    for (std::uint64_t i = 0;; ++i) {
        if (i >= iter_cap)
            throw IterCapError("learning loop did not stabilize within " +
                               std::to_string(iter_cap) + " iterations");
        Value v = value_at(env, t, cur);
        StateId tau = std::get<StateVal>(v).s;
        if (!states_consistent(cur, tau) || !states_disjoint(cur, tau))
            throw InternalError("learning increment is not consistent-and-disjoint with the state");
        StateId next = state_union(cur, tau);
        trace.iterations.push_back(Iteration{i, cur, tau, next});
        if (state_empty(tau)) {
            trace.stable = true;
            return {cur, std::move(trace)};
        }
        cur = next;
    }
}

WitnessResult pi02_witness(const DefEnv& env, const Term& t, const PredName& p, std::uint64_t n,
                           std::uint64_t iter_cap, StateId start) {
    TypeExpr want = TypeExpr::arrow(
        TypeExpr::nat(), TypeExpr::prod(TypeExpr::nat(), TypeExpr::state()));
    if (!t.closed()) throw TypeError("realizer must be closed: " + print(t));
    if (!has_state_empty(t)) throw TypeError("realizer must have empty state: " + print(t));
    TypeExpr ty = typecheck(env, TypeCtx{}, t);
    if (ty != want)
        throw TypeError("witness extraction needs a realizer of type " + to_string(want) +
                        ", got " + to_string(ty));

    Term applied = Term::app(t, Term::numeral(n));
    auto [final_state, trace] = fixed_point(env, Term::proj1(applied), start, iter_cap);
    Value wv = value_at(env, Term::proj0(applied), final_state);
    std::uint64_t witness = std::get<Numeral>(wv).k;

    // read-off guarantee: the extracted pair must be a true instance
    Term instance = Term::app(Term::app(Term::def_ref(p), Term::numeral(n)),
                              Term::numeral(witness));
    Value ok = eval_atomic(env, instance);
    if (!std::get<Boolean>(ok).b)
        throw CheckFailedError("extracted witness " + std::to_string(witness) + " for input " +
                                   std::to_string(n) + " does not satisfy " + p + " at state " +
                                   print_state(final_state),
                               witness);
    return WitnessResult{witness, std::move(trace)};
}

namespace {

nlohmann::ordered_json state_to_json(StateId s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Atom& a : StateStore::instance().atoms(s)) {
        nlohmann::ordered_json args = nlohmann::ordered_json::array();
        for (std::uint64_t x : a.args) args.push_back(x);
        arr.push_back({{"pred", a.pred}, {"args", args}, {"witness", a.witness}});
    }
    return arr;
}

}  // namespace

std::string trace_to_json(const LearnTrace& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.iterations.size(); ++i) {
        const Iteration& it = trace.iterations[i];
        bool last = i + 1 == trace.iterations.size();
        nlohmann::ordered_json obj{{"iter", it.index},
                           {"state", state_to_json(it.before)},
                           {"tau", state_to_json(it.tau)},
                           {"stable", last && trace.stable}};
        if (i == 0 && trace.warm_start) obj["warm_start"] = true;
        out += obj.dump();
        out += "\n";
    }
    return out;
}

}  // namespace ilr
