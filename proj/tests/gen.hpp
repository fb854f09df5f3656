#pragma once

// Random closed well-typed term generation for the property suites.
// Lives in test code only; the library never depends on it.

#include <cstdint>
#include <random>
#include <vector>

#include "ilr/defenv.hpp"
#include "ilr/state.hpp"
#include "ilr/term.hpp"
#include "ilr/type.hpp"

namespace ilr::testgen {

// Predicates the generated constants draw from (prelude, arity 2).
inline const std::vector<PredName>& gen_preds() {
    static const std::vector<PredName> ps = {"NEXT", "GEQ"};
    return ps;
}

// Fixed pool of eight states used across the suites.
inline const std::vector<StateId>& state_pool() {
    static const std::vector<StateId> pool = [] {
        auto& store = StateStore::instance();
        std::vector<StateId> p;
        p.push_back(kEmptyState);
        p.push_back(store.intern({Atom{"GEQ", {2}, 3}}));
        p.push_back(store.intern({Atom{"NEXT", {2}, 3}}));
        p.push_back(store.intern({Atom{"GEQ", {2}, 3}, Atom{"NEXT", {2}, 3}}));
        p.push_back(store.intern({Atom{"GEQ", {0}, 0}}));
        p.push_back(store.intern({Atom{"NEXT", {0}, 1}, Atom{"NEXT", {1}, 2}}));
        p.push_back(store.intern({Atom{"GEQ", {2}, 5}, Atom{"GEQ", {4}, 7}}));
        p.push_back(store.intern({Atom{"GEQ", {2}, 2}, Atom{"NEXT", {5}, 6}, Atom{"GEQ", {0}, 9}}));
        return p;
    }();
    return pool;
}

enum class GenMode {
    Learning,  // approximation constants over pool states (closed T_Learn)
    Ideal,     // oracle constants, empty state only (closed T_Class of state 0)
};

class TermGen {
public:
    TermGen(std::uint64_t seed, GenMode mode) : rng_(seed), mode_(mode) {}

    Term atomic(const TypeExpr& ty, int depth) { return gen(ty, depth); }

    Term nat(int depth) { return gen(TypeExpr::nat(), depth); }
    Term boolean(int depth) { return gen(TypeExpr::boolean(), depth); }
    Term state(int depth) { return gen(TypeExpr::state(), depth); }

private:
    std::mt19937_64 rng_;
    GenMode mode_;
    std::vector<std::pair<std::string, TypeExpr>> ctx_;
    int fresh_ = 0;

    std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

    PredName pred() { return gen_preds()[pick(gen_preds().size())]; }

    Term state_leaf() {
        if (mode_ == GenMode::Ideal) return Term::state_const(kEmptyState);
        const auto& pool = state_pool();
        return Term::state_const(pool[pick(pool.size())]);
    }

    // a context variable of the exact type, if any
    std::optional<Term> ctx_var(const TypeExpr& ty) {
        std::vector<const std::string*> hits;
        for (const auto& [name, t] : ctx_)
            if (t == ty) hits.push_back(&name);
        if (hits.empty()) return std::nullopt;
        return Term::var(*hits[pick(hits.size())]);
    }

    Term leaf(const TypeExpr& ty) {
        if (auto v = ctx_var(ty); v && pick(2) == 0) return *v;
        switch (ty.kind()) {
            case TypeKind::Nat: return Term::numeral(pick(5));
            case TypeKind::Bool: return Term::boolean(pick(2) == 0);
            case TypeKind::State: return state_leaf();
            case TypeKind::Prod: return Term::pair(leaf(ty.left()), leaf(ty.right()));
            case TypeKind::Arrow: {
                std::string x = "v" + std::to_string(++fresh_);
                ctx_.emplace_back(x, ty.left());
                Term body = leaf(ty.right());
                ctx_.pop_back();
                return Term::lam(x, ty.left(), body);
            }
        }
        return Term::zero();
    }

    Term lam_of(const TypeExpr& ty, int depth) {
        std::string x = "v" + std::to_string(++fresh_);
        ctx_.emplace_back(x, ty.left());
        Term body = gen(ty.right(), depth - 1);
        ctx_.pop_back();
        return Term::lam(x, ty.left(), body);
    }

    Term gen(const TypeExpr& ty, int depth) {
        if (depth <= 0) return leaf(ty);
        if (auto v = ctx_var(ty); v && pick(4) == 0) return *v;

        // generic combinators available at every type
        switch (pick(10)) {
            case 0:
                return Term::if_(gen(TypeExpr::boolean(), depth - 1), gen(ty, depth - 1),
                                 gen(ty, depth - 1));
            case 1: {  // apply a generated function
                TypeExpr dom = small_type();
                return Term::app(lam_of(TypeExpr::arrow(dom, ty), depth), gen(dom, depth - 1));
            }
            case 2: {  // project from a pair
                bool left = pick(2) == 0;
                TypeExpr other = small_type();
                Term p = Term::pair(left ? gen(ty, depth - 1) : gen(other, depth - 1),
                                    left ? gen(other, depth - 1) : gen(ty, depth - 1));
                return left ? Term::proj0(p) : Term::proj1(p);
            }
            case 3: {  // primitive recursion with a constant-ish step
                std::string k = "v" + std::to_string(++fresh_);
                std::string r = "v" + std::to_string(++fresh_);
                ctx_.emplace_back(k, TypeExpr::nat());
                ctx_.emplace_back(r, ty);
                Term step_body = gen(ty, depth - 2);
                ctx_.pop_back();
                ctx_.pop_back();
                Term step = Term::lam(k, TypeExpr::nat(), Term::lam(r, ty, step_body));
                return Term::rec(gen(ty, depth - 1), step, Term::numeral(pick(4)));
            }
            default:
                break;
        }
        // type-directed constants
        switch (ty.kind()) {
            case TypeKind::Nat:
                switch (pick(3)) {
                    case 0: return Term::succ(gen(ty, depth - 1));
                    case 1:
                        return Term::apps(Term::def_ref(pick(2) ? "plus" : "sub"),
                                          {gen(ty, depth - 1), gen(ty, depth - 1)});
                    default:
                        if (mode_ == GenMode::Learning)
                            return Term::apps(Term::phi_approx(pred()),
                                              {state_leaf(), gen(TypeExpr::nat(), depth - 1)});
                        return Term::app(Term::skolem_phi(pred()), gen(TypeExpr::nat(), depth - 1));
                }
            case TypeKind::Bool:
                switch (pick(3)) {
                    case 0:
                        return Term::apps(Term::def_ref(pick(2) ? "leq" : "eq"),
                                          {gen(TypeExpr::nat(), depth - 1),
                                           gen(TypeExpr::nat(), depth - 1)});
                    case 1:
                        return Term::app(Term::def_ref("notb"), gen(ty, depth - 1));
                    default:
                        if (mode_ == GenMode::Learning)
                            return Term::apps(Term::chi_approx(pred()),
                                              {state_leaf(), gen(TypeExpr::nat(), depth - 1)});
                        return Term::app(Term::oracle_x(pred()), gen(TypeExpr::nat(), depth - 1));
                }
            case TypeKind::State:
                switch (pick(3)) {
                    case 0:
                        return Term::join(gen(ty, depth - 1), gen(ty, depth - 1));
                    case 1:
                        if (mode_ == GenMode::Learning)
                            return Term::apps(Term::add_approx(pred()),
                                              {state_leaf(), gen(TypeExpr::nat(), depth - 1),
                                               gen(TypeExpr::nat(), depth - 1)});
                        return Term::apps(Term::add_class(pred()),
                                          {gen(TypeExpr::nat(), depth - 1),
                                           gen(TypeExpr::nat(), depth - 1)});
                    default:
                        return state_leaf();
                }
            case TypeKind::Prod:
                return Term::pair(gen(ty.left(), depth - 1), gen(ty.right(), depth - 1));
            case TypeKind::Arrow:
                return lam_of(ty, depth);
        }
        return leaf(ty);
    }

    TypeExpr small_type() {
        switch (pick(4)) {
            case 0: return TypeExpr::nat();
            case 1: return TypeExpr::boolean();
            case 2: return TypeExpr::state();
            default: return TypeExpr::prod(TypeExpr::nat(), TypeExpr::state());
        }
    }
};

// Atoms for the exhaustive state-algebra pool: six atoms with two
// deliberate conflicts (same pred+args, different witness).
inline const std::vector<Atom>& algebra_atoms() {
    static const std::vector<Atom> atoms = {
        Atom{"GEQ", {2}, 3}, Atom{"GEQ", {2}, 5},  // conflict
        Atom{"NEXT", {2}, 3}, Atom{"GEQ", {4}, 7},
        Atom{"NEXT", {0}, 1}, Atom{"GEQ", {4}, 4},  // conflicts with {4},7
    };
    return atoms;
}

// Every state formed from up to `max_size` pairwise consistent pool atoms.
inline std::vector<StateId> algebra_states(std::size_t max_size = 3) {
    const auto& atoms = algebra_atoms();
    std::vector<StateId> out;
    std::size_t n = atoms.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Atom> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) chosen.push_back(atoms[i]);
        if (chosen.size() > max_size) continue;
        bool ok = true;
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
            for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
                if (!atoms_consistent(chosen[i], chosen[j])) ok = false;
        if (!ok) continue;
        out.push_back(StateStore::instance().intern(std::move(chosen)));
    }
    return out;
}

}  // namespace ilr::testgen
