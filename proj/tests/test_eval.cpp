#include <doctest.h>

#include "gen.hpp"
#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/eval.hpp"
#include "ilr/proof.hpp"
#include "ilr/typecheck.hpp"

using namespace ilr;

namespace {
const StateId s1 = StateStore::instance().intern({Atom{"GEQ", {2}, 3}});
Term sc(StateId s) { return Term::state_const(s); }
}  // namespace

TEST_CASE("normalize: state-indexed constants") {
    Term chi = Term::apps(Term::chi_approx("GEQ"), {sc(s1), Term::numeral(2)});
    CHECK(eval_atomic(prelude(), chi) == Value{Boolean{true}});
    Term phi = Term::apps(Term::phi_approx("GEQ"), {sc(s1), Term::numeral(2)});
    CHECK(eval_atomic(prelude(), phi) == Value{Numeral{3}});
    Term phi_miss = Term::apps(Term::phi_approx("GEQ"), {sc(kEmptyState), Term::numeral(2)});
    CHECK(eval_atomic(prelude(), phi_miss) == Value{Numeral{0}});
}

TEST_CASE("normalize: join of state constants") {
    Term j = Term::join(sc(kEmptyState), sc(s1));
    CHECK(eval_atomic(prelude(), j) == Value{StateVal{s1}});
}

TEST_CASE("normalize: recursor doubling") {
    // R 0 (\k r. S (S r)) 3 unfolds to six successors
    Term dbl = Term::rec(
        Term::zero(),
        Term::lam("k", TypeExpr::nat(),
                  Term::lam("r", TypeExpr::nat(), Term::succ(Term::succ(Term::var("r"))))),
        Term::numeral(3));
    CHECK(eval_atomic(prelude(), dbl) == Value{Numeral{6}});
}

TEST_CASE("normalize: preconditions") {
    CHECK_THROWS_AS(normalize(prelude(), Term::var("x")), NotClosedError);
    CHECK_THROWS_AS(normalize(prelude(), Term::app(Term::oracle_x("GEQ"), Term::zero())),
                    WrongFragmentError);
    Term omega_ish = Term::rec(Term::zero(),
                               Term::lam("k", TypeExpr::nat(),
                                         Term::lam("r", TypeExpr::nat(), Term::var("r"))),
                               Term::numeral(3));
    CHECK_THROWS_AS(normalize(prelude(), omega_ish, Strategy::Outermost, 2), StepBudgetError);
}

TEST_CASE("approximate") {
    Term t = Term::app(Term::oracle_x("GEQ"), Term::numeral(2));
    Term want = Term::app(Term::app(Term::chi_approx("GEQ"), sc(s1)), Term::numeral(2));
    CHECK(approximate(t, s1) == want);

    Term id = Term::lam("x", TypeExpr::nat(), Term::var("x"));
    CHECK(approximate(id, s1) == id);

    CHECK_THROWS_AS(approximate(want, s1), WrongFragmentError);
}

TEST_CASE("approximate: excluded-middle realizer guesses the truth value") {
    // first component of the approximated realizer is the chi guess
    Term e2 = Term::app(em1_term(prelude(), "GEQ"), Term::numeral(2));
    Term guess = Term::proj0(approximate(e2, s1));
    CHECK(eval_atomic(prelude(), guess) == Value{Boolean{true}});
    Term guess_empty = Term::proj0(approximate(e2, kEmptyState));
    CHECK(eval_atomic(prelude(), guess_empty) == Value{Boolean{false}});
}

TEST_CASE("eval_atomic") {
    Term next23 = Term::apps(Term::def_ref("NEXT"), {Term::numeral(2), Term::numeral(3)});
    CHECK(eval_atomic(prelude(), next23) == Value{Boolean{true}});
    Term add = Term::apps(Term::add_approx("NEXT"),
                          {sc(kEmptyState), Term::numeral(2), Term::numeral(3)});
    StateId learned = StateStore::instance().intern({Atom{"NEXT", {2}, 3}});
    CHECK(eval_atomic(prelude(), add) == Value{StateVal{learned}});
}

TEST_CASE("equal_learn") {
    Term plus11 = Term::apps(Term::def_ref("plus"), {Term::numeral(1), Term::numeral(1)});
    CHECK(equal_learn(prelude(), Term::numeral(2), plus11));
    CHECK_FALSE(equal_learn(prelude(), Term::true_(), Term::false_()));
    CHECK(equal_learn(prelude(), Term::join(sc(s1), sc(s1)), sc(s1)));
    CHECK_THROWS_AS(equal_learn(prelude(), Term::zero(), Term::true_()), TypeError);
}

TEST_CASE("strategy independence at atomic types") {
    testgen::TermGen gen(11, testgen::GenMode::Learning);
    const TypeExpr targets[] = {TypeExpr::nat(), TypeExpr::boolean(), TypeExpr::state()};
    for (int i = 0; i < 60; ++i) {
        Term t = gen.atomic(targets[i % 3], 4);
        NormalForm outer = normalize(prelude(), t, Strategy::Outermost);
        NormalForm inner = normalize(prelude(), t, Strategy::Innermost);
        REQUIRE(outer.value.has_value());
        REQUIRE(inner.value.has_value());
        CHECK(*outer.value == *inner.value);
        CHECK(outer.term == inner.term);
    }
}

TEST_CASE("state safety of approximated state terms") {
    testgen::TermGen gen(13, testgen::GenMode::Ideal);
    for (int i = 0; i < 30; ++i) {
        Term t = gen.state(4);
        REQUIRE(has_state_empty(t));
        for (StateId s : testgen::state_pool()) {
            Value v = eval_atomic(prelude(), approximate(t, s));
            StateId out = std::get<StateVal>(v).s;
            CHECK(states_consistent(s, out));
            CHECK(states_disjoint(s, out));
        }
    }
}

TEST_CASE("evaluation hook observes lookups") {
    std::vector<std::pair<PredName, std::vector<std::uint64_t>>> seen;
    EvalHooks hooks;
    hooks.on_lookup = [&](const PredName& p, const std::vector<std::uint64_t>& args, StateId) {
        seen.emplace_back(p, args);
    };
    Term chi = Term::apps(Term::chi_approx("GEQ"), {sc(s1), Term::numeral(2)});
    normalize(prelude(), chi, Strategy::Outermost, kDefaultStepCap, &hooks);
    REQUIRE(seen.size() == 1);
    CHECK(seen[0].first == "GEQ");
    CHECK(seen[0].second == std::vector<std::uint64_t>{2});
}
