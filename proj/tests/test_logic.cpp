#include <doctest.h>

#include "gen.hpp"
#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/formula.hpp"
#include "ilr/parse.hpp"
#include "ilr/print.hpp"
#include "ilr/proof.hpp"

using namespace ilr;

namespace {
const StateId s1 = StateStore::instance().intern({Atom{"GEQ", {2}, 3}});
Formula atom2(const char* p, Term a, Term b) {
    return Formula::atomic(Term::def_ref(p), {std::move(a), std::move(b)});
}
}  // namespace

TEST_CASE("realizer_type") {
    CHECK(realizer_type(atom2("eq", Term::zero(), Term::zero())) == TypeExpr::state());
    Formula ex = Formula::exists("y", atom2("NEXT", Term::numeral(2), Term::var("y")));
    CHECK(realizer_type(ex) == TypeExpr::prod(TypeExpr::nat(), TypeExpr::state()));
    Formula all = Formula::forall("y", negated_atom("NEXT", 2, {Term::numeral(2), Term::var("y")}));
    Formula disj = Formula::disj(ex, all);
    CHECK(realizer_type(disj) ==
          TypeExpr::prod(TypeExpr::boolean(),
                         TypeExpr::prod(TypeExpr::prod(TypeExpr::nat(), TypeExpr::state()),
                                        TypeExpr::arrow(TypeExpr::nat(), TypeExpr::state()))));
}

TEST_CASE("approx_formula") {
    Formula a = Formula::atomic(Term::oracle_x("GEQ"), {Term::numeral(2)});
    Formula got = approx_formula(a, s1);
    Formula want = Formula::atomic(Term::app(Term::chi_approx("GEQ"), Term::state_const(s1)),
                                   {Term::numeral(2)});
    CHECK(got == want);

    Formula pure = atom2("NEXT", Term::numeral(2), Term::numeral(3));
    CHECK(approx_formula(pure, s1) == pure);

    // substitute then approximate: NEXT(2, Phi 2) at the empty state
    Formula skolem = atom2("NEXT", Term::var("a"),
                           Term::app(Term::skolem_phi("NEXT"), Term::var("a")));
    Formula inst = subst_formula(skolem, "a", Term::numeral(2));
    Formula approx = approx_formula(inst, kEmptyState);
    Term want_arg = Term::app(Term::app(Term::phi_approx("NEXT"), Term::state_const(kEmptyState)),
                              Term::numeral(2));
    CHECK(approx == atom2("NEXT", Term::numeral(2), want_arg));
}

TEST_CASE("eval_closed_atomic") {
    CHECK(eval_closed_atomic(prelude(), atom2("NEXT", Term::numeral(2), Term::numeral(3))));

    // combined head: NEXT(2,3) implies the chi guess; false at empty state,
    // true once the atom is known
    Term head = Term::lam(
        "_a1", TypeExpr::nat(),
        Term::lam("_a2", TypeExpr::nat(),
                  Term::apps(Term::def_ref("impb"),
                             {Term::apps(Term::def_ref("NEXT"), {Term::var("_a1"), Term::var("_a2")}),
                              Term::apps(Term::chi_approx("NEXT"),
                                         {Term::state_const(kEmptyState), Term::var("_a1")})})));
    Formula f = Formula::atomic(head, {Term::numeral(2), Term::numeral(3)});
    CHECK_FALSE(eval_closed_atomic(prelude(), f));

    StateId learned = StateStore::instance().intern({Atom{"NEXT", {2}, 3}});
    Term head2 = Term::lam(
        "_a1", TypeExpr::nat(),
        Term::lam("_a2", TypeExpr::nat(),
                  Term::apps(Term::def_ref("impb"),
                             {Term::apps(Term::def_ref("NEXT"), {Term::var("_a1"), Term::var("_a2")}),
                              Term::apps(Term::chi_approx("NEXT"),
                                         {Term::state_const(learned), Term::var("_a1")})})));
    CHECK(eval_closed_atomic(prelude(), Formula::atomic(head2, {Term::numeral(2), Term::numeral(3)})));
}

TEST_CASE("subst_formula") {
    Formula ex = Formula::exists("y", atom2("NEXT", Term::var("x"), Term::var("y")));
    CHECK(subst_formula(ex, "x", Term::numeral(2)) ==
          Formula::exists("y", atom2("NEXT", Term::numeral(2), Term::var("y"))));

    Formula shadowed = Formula::forall("x", atom2("NEXT", Term::var("x"), Term::var("x")));
    CHECK(subst_formula(shadowed, "x", Term::numeral(7)) == shadowed);

    Formula open = atom2("NEXT", Term::var("x"), Term::succ(Term::var("x")));
    CHECK(subst_formula(open, "x", Term::var("a")) ==
          atom2("NEXT", Term::var("a"), Term::succ(Term::var("a"))));
}

TEST_CASE("subst_formula avoids capture") {
    // (exists y. NEXT(x, y))[x := y] must rename the binder
    Formula ex = Formula::exists("y", atom2("NEXT", Term::var("x"), Term::var("y")));
    Formula got = subst_formula(ex, "x", Term::var("y"));
    CHECK(got.kind() == FormulaKind::Exists);
    CHECK(got.var() != "y");
    CHECK(got.body() == atom2("NEXT", Term::var("y"), Term::var(got.var())));
}

TEST_CASE("realizer type is invariant under approximation") {
    const DefEnv& env = prelude();
    std::vector<Formula> samples = {
        parse_formula(env, "forall x. exists y. NEXT(x, y)"),
        em1_statement(env, "GEQ"),
        parse_formula(env, "eq(0, 0) /\\ (NEXT(1, 2) -> exists z. GEQ(z, z))"),
        Formula::atomic(Term::oracle_x("GEQ"), {Term::numeral(2)}),
    };
    for (const Formula& a : samples)
        for (StateId s : testgen::state_pool())
            CHECK(realizer_type(approx_formula(a, s)) == realizer_type(a));
}

TEST_CASE("validate_formula rejects ill-formed atoms") {
    // open head
    Formula bad_head = Formula::atomic(Term::var("q"), {});
    CHECK_THROWS_AS(validate_formula(prelude(), bad_head), TypeError);
    // argument of the wrong type
    Formula bad_arg = Formula::atomic(Term::def_ref("isz"), {Term::true_()});
    CHECK_THROWS_AS(validate_formula(prelude(), bad_arg), TypeError);
    // too many arguments
    Formula bad_arity =
        Formula::atomic(Term::def_ref("isz"), {Term::zero(), Term::zero()});
    CHECK_THROWS_AS(validate_formula(prelude(), bad_arity), TypeError);
}
