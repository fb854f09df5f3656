#include "ilr/state.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/eval.hpp"

namespace ilr {

bool atoms_consistent(const Atom& a, const Atom& b) {
    if (a.pred == b.pred && a.args == b.args) return a.witness == b.witness;
    return true;
}

namespace {

bool pairwise_consistent(const std::vector<Atom>& atoms) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (!atoms_consistent(atoms[i], atoms[j])) return false;
    return true;
}

}  // namespace

struct StateStore::Impl {
    mutable std::shared_mutex mu;
    std::vector<std::vector<Atom>> by_id;
    std::map<std::vector<Atom>, StateId> ids;
};

StateStore::StateStore() : impl_(new Impl) {
    impl_->by_id.push_back({});
    impl_->ids.emplace(std::vector<Atom>{}, kEmptyState);
}

StateStore& StateStore::instance() {
    static StateStore store;
    return store;
}

StateId StateStore::intern(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    if (!pairwise_consistent(atoms))
        throw InternalError("inconsistent atom set cannot form a state");
    {
        std::shared_lock lock(impl_->mu);
        auto it = impl_->ids.find(atoms);
        if (it != impl_->ids.end()) return it->second;
    }
    std::unique_lock lock(impl_->mu);
    auto it = impl_->ids.find(atoms);
    if (it != impl_->ids.end()) return it->second;
    StateId id{static_cast<std::uint32_t>(impl_->by_id.size())};
    impl_->by_id.push_back(atoms);
    impl_->ids.emplace(std::move(atoms), id);
    return id;
}

const std::vector<Atom>& StateStore::atoms(StateId id) const {
    std::shared_lock lock(impl_->mu);
    return impl_->by_id.at(id.v);
}

bool state_empty(StateId s) { return s == kEmptyState; }

std::size_t state_size(StateId s) { return StateStore::instance().atoms(s).size(); }

bool state_subset(StateId a, StateId b) {
    const auto& xs = StateStore::instance().atoms(a);
    const auto& ys = StateStore::instance().atoms(b);
    return std::includes(ys.begin(), ys.end(), xs.begin(), xs.end());
}

bool states_consistent(StateId a, StateId b) {
    const auto& xs = StateStore::instance().atoms(a);
    const auto& ys = StateStore::instance().atoms(b);
    for (const Atom& x : xs)
        for (const Atom& y : ys)
            if (!atoms_consistent(x, y)) return false;
    return true;
}

bool states_disjoint(StateId a, StateId b) {
    const auto& xs = StateStore::instance().atoms(a);
    const auto& ys = StateStore::instance().atoms(b);
    std::vector<Atom> common;
    std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(), std::back_inserter(common));
    return common.empty();
}

StateId cunion(StateId a, StateId b) {
    const auto& xs = StateStore::instance().atoms(a);
    const auto& ys = StateStore::instance().atoms(b);
    std::vector<Atom> out = xs;
    for (const Atom& y : ys) {
        bool ok = true;
        for (const Atom& x : xs)
            if (!atoms_consistent(x, y)) { ok = false; break; }
        if (ok) out.push_back(y);
    }
    return StateStore::instance().intern(std::move(out));
}

StateId state_union(StateId a, StateId b) {
    const auto& xs = StateStore::instance().atoms(a);
    const auto& ys = StateStore::instance().atoms(b);
    std::vector<Atom> out = xs;
    out.insert(out.end(), ys.begin(), ys.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (!pairwise_consistent(out))
        throw InternalError("state_union of inconsistent states");
    return StateStore::instance().intern(std::move(out));
}

namespace {

// Evaluates pred(args..., m) in env; throws AtomError on unknown name or
// arity mismatch.
bool pred_holds(const DefEnv& env, const PredName& p, const std::vector<std::uint64_t>& args,
                std::uint64_t m) {
    auto arity = env.pred_arity(p);
    if (!arity) throw AtomError("unknown predicate: " + p);
    if (*arity != args.size() + 1)
        throw AtomError("arity mismatch for " + p + ": expected " + std::to_string(*arity) +
                        " arguments, got " + std::to_string(args.size() + 1));
    Term t = Term::def_ref(p);
    for (std::uint64_t a : args) t = Term::app(t, Term::numeral(a));
    t = Term::app(t, Term::numeral(m));
    Value v = eval_atomic(env, t);
    return std::get<Boolean>(v).b;
}

}  // namespace

Atom mk_atom(const DefEnv& env, const PredName& p, const std::vector<std::uint64_t>& args,
             std::uint64_t m) {
    if (!pred_holds(env, p, args, m))
        throw AtomError("predicate-false: " + p + " does not hold on the given instance");
    return Atom{p, args, m};
}

StateId add_step(const DefEnv& env, StateId s, const PredName& p,
                 const std::vector<std::uint64_t>& args, std::uint64_t m) {
    auto [found, unused] = chi_phi_lookup(s, p, args);
    (void)unused;
    if (found) return kEmptyState;
    if (!pred_holds(env, p, args, m)) return kEmptyState;
    return StateStore::instance().intern({Atom{p, args, m}});
}

std::pair<bool, std::uint64_t> chi_phi_lookup(StateId s, const PredName& p,
                                              const std::vector<std::uint64_t>& args) {
    for (const Atom& a : StateStore::instance().atoms(s))
        if (a.pred == p && a.args == args) return {true, a.witness};
    return {false, 0};
}

std::string to_string(const Atom& a) {
    std::ostringstream os;
    os << a.pred << "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) os << ", ";
        os << a.args[i];
    }
    os << ")=" << a.witness;
    return os.str();
}

}  // namespace ilr
