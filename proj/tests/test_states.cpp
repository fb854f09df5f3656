#include <doctest.h>

#include <set>
#include <thread>

#include "gen.hpp"
#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/state.hpp"

using namespace ilr;

namespace {
StateId mk(std::vector<Atom> atoms) { return StateStore::instance().intern(std::move(atoms)); }
}  // namespace

TEST_CASE("mk_atom validates the instance") {
    CHECK(mk_atom(prelude(), "NEXT", {2}, 3) == Atom{"NEXT", {2}, 3});
    CHECK_THROWS_AS(mk_atom(prelude(), "NEXT", {2}, 5), AtomError);
    CHECK(mk_atom(prelude(), "GEQ", {2}, 3) == Atom{"GEQ", {2}, 3});
    CHECK_THROWS_AS(mk_atom(prelude(), "NEXT", {2, 9}, 3), AtomError);  // arity
    CHECK_THROWS_AS(mk_atom(prelude(), "nosuch", {2}, 3), AtomError);
}

TEST_CASE("atoms_consistent") {
    CHECK_FALSE(atoms_consistent(Atom{"GEQ", {2}, 3}, Atom{"GEQ", {2}, 5}));
    CHECK(atoms_consistent(Atom{"GEQ", {2}, 3}, Atom{"GEQ", {4}, 7}));
    CHECK(atoms_consistent(Atom{"GEQ", {2}, 3}, Atom{"NEXT", {2}, 3}));
}

TEST_CASE("cunion is left-biased with neutral empty") {
    StateId a = mk({Atom{"GEQ", {2}, 3}});
    StateId b = mk({Atom{"GEQ", {2}, 5}});
    CHECK(cunion(a, b) == a);
    CHECK(cunion(b, a) == b);  // bias exhibited in both directions
    CHECK(cunion(kEmptyState, a) == a);
    CHECK(cunion(a, kEmptyState) == a);
    StateId c = mk({Atom{"NEXT", {2}, 3}});
    CHECK(cunion(a, c) == mk({Atom{"GEQ", {2}, 3}, Atom{"NEXT", {2}, 3}}));
}

TEST_CASE("add_step") {
    StateId s1 = mk({Atom{"GEQ", {2}, 3}});
    CHECK(add_step(prelude(), s1, "GEQ", {2}, 9) == kEmptyState);  // witness already known
    CHECK(add_step(prelude(), s1, "GEQ", {4}, 7) == mk({Atom{"GEQ", {4}, 7}}));
    CHECK(add_step(prelude(), s1, "GEQ", {4}, 1) == kEmptyState);  // false instance
}

TEST_CASE("chi_phi_lookup") {
    StateId s1 = mk({Atom{"GEQ", {2}, 3}});
    CHECK(chi_phi_lookup(s1, "GEQ", {2}) == std::pair<bool, std::uint64_t>{true, 3});
    CHECK(chi_phi_lookup(s1, "GEQ", {5}) == std::pair<bool, std::uint64_t>{false, 0});
    CHECK(chi_phi_lookup(kEmptyState, "NEXT", {0}) == std::pair<bool, std::uint64_t>{false, 0});
}

TEST_CASE("state algebra laws on the exhaustive pool") {
    std::vector<StateId> states = testgen::algebra_states(2);  // smaller cube here; the
                                                               // acceptance suite runs size 3
    for (StateId a : states)
        for (StateId b : states) {
            // result within the plain union
            const auto& ua = StateStore::instance().atoms(a);
            const auto& ub = StateStore::instance().atoms(b);
            std::set<Atom> un(ua.begin(), ua.end());
            un.insert(ub.begin(), ub.end());
            for (const Atom& x : StateStore::instance().atoms(cunion(a, b)))
                CHECK(un.count(x));
            for (StateId c : states) {
                CHECK(cunion(cunion(a, b), c) == cunion(a, cunion(b, c)));
                if (cunion(cunion(a, b), c) == kEmptyState) {
                    CHECK(a == kEmptyState);
                    CHECK(b == kEmptyState);
                    CHECK(c == kEmptyState);
                }
                // consistency/disjointness preservation
                if (states_consistent(c, a) && states_consistent(c, b))
                    CHECK(states_consistent(c, cunion(a, b)));
                if (states_disjoint(c, a) && states_disjoint(c, b))
                    CHECK(states_disjoint(c, cunion(a, b)));
            }
        }
}

TEST_CASE("add_step result is consistent and disjoint with the state") {
    for (StateId s : testgen::state_pool()) {
        for (std::uint64_t n = 0; n < 4; ++n)
            for (std::uint64_t m = 0; m < 4; ++m) {
                StateId inc = add_step(prelude(), s, "GEQ", {n}, m);
                CHECK(states_consistent(s, inc));
                CHECK(states_disjoint(s, inc));
            }
    }
}

TEST_CASE("interning is injective and safe under concurrent insertion") {
    std::vector<Atom> atoms = {Atom{"GEQ", {40}, 41}, Atom{"NEXT", {40}, 41}};
    std::vector<StateId> ids(8);
    std::vector<std::thread> workers;
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&, i] { ids[i] = StateStore::instance().intern(atoms); });
    for (auto& w : workers) w.join();
    for (int i = 1; i < 8; ++i) CHECK(ids[i] == ids[0]);
    // order does not matter, equal sets share one id
    CHECK(mk({atoms[1], atoms[0]}) == ids[0]);
}

TEST_CASE("interner rejects inconsistent atom sets") {
    CHECK_THROWS_AS(mk({Atom{"GEQ", {2}, 3}, Atom{"GEQ", {2}, 5}}), InternalError);
}
