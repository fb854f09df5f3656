#include <doctest.h>

#include "gen.hpp"
#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/parse.hpp"
#include "ilr/proof.hpp"
#include "ilr/typecheck.hpp"

using namespace ilr;

TEST_CASE("typecheck: identity") {
    Term id = Term::lam("x", TypeExpr::nat(), Term::var("x"));
    CHECK(typecheck(prelude(), id) == TypeExpr::arrow(TypeExpr::nat(), TypeExpr::nat()));
}

TEST_CASE("typecheck: excluded-middle realizer for GEQ") {
    // |exists y P or forall y not P| composed by hand from the clause types
    TypeExpr want = TypeExpr::arrow(
        TypeExpr::nat(),
        TypeExpr::prod(TypeExpr::boolean(),
                       TypeExpr::prod(TypeExpr::prod(TypeExpr::nat(), TypeExpr::state()),
                                      TypeExpr::arrow(TypeExpr::nat(), TypeExpr::state()))));
    CHECK(typecheck(prelude(), em1_term(prelude(), "GEQ")) == want);
}

TEST_CASE("typecheck: projection of a non-pair") {
    CHECK_THROWS_AS(typecheck(prelude(), Term::proj0(Term::zero())), TypeError);
}

TEST_CASE("typecheck: unbound variable and unknown definition") {
    CHECK_THROWS_AS(typecheck(prelude(), Term::var("ghost")), TypeError);
    CHECK_THROWS_AS(typecheck(prelude(), Term::def_ref("ghost")), TypeError);
}

TEST_CASE("typecheck: state constants and join") {
    Term j = Term::join(Term::state_const(kEmptyState), Term::state_const(kEmptyState));
    CHECK(typecheck(prelude(), j) == TypeExpr::state());
    CHECK_THROWS_AS(typecheck(prelude(), Term::join(Term::zero(), Term::zero())), TypeError);
}

TEST_CASE("classify: fragments") {
    CHECK(classify(Term::lam("x", TypeExpr::nat(), Term::var("x"))) == Fragment::Pure);
    CHECK(classify(Term::app(Term::oracle_x("GEQ"), Term::numeral(2))) == Fragment::Ideal);
    Term chi = Term::apps(Term::chi_approx("GEQ"),
                          {Term::state_const(testgen::state_pool()[1]), Term::numeral(2)});
    CHECK(classify(chi) == Fragment::Learning);
    CHECK(classify(Term::state_const(kEmptyState)) == Fragment::Stateful);
    CHECK(classify(Term::pair(Term::oracle_x("GEQ"), Term::chi_approx("GEQ"))) ==
          Fragment::Mixed);
}

namespace {
Fragment own_fragment(const Term& t) {
    switch (t.kind()) {
        case TermKind::StateConst:
        case TermKind::Join:
            return Fragment::Stateful;
        case TermKind::OracleX:
        case TermKind::SkolemPhi:
        case TermKind::AddClass:
            return Fragment::Ideal;
        case TermKind::ChiApprox:
        case TermKind::PhiApprox:
        case TermKind::AddApprox:
            return Fragment::Learning;
        default:
            return Fragment::Pure;
    }
}
}  // namespace

TEST_CASE("classify: monotone under subterm inclusion") {
    testgen::TermGen gen(7, testgen::GenMode::Learning);
    for (int i = 0; i < 50; ++i) {
        Term t = gen.atomic(TypeExpr::state(), 4);
        // fragment of the whole is the join of the node's own fragment and
        // its children's fragments
        Fragment joined = own_fragment(t);
        for (const Term& k : t.kids()) joined = fragment_join(joined, classify(k));
        CHECK(classify(t) == joined);
    }
}

TEST_CASE("has_state_empty") {
    Term add23 = Term::apps(Term::add_class("NEXT"), {Term::numeral(2), Term::numeral(3)});
    CHECK(has_state_empty(add23));
    Term with_s1 = Term::state_const(testgen::state_pool()[1]);
    CHECK_FALSE(has_state_empty(with_s1));
    CHECK(has_state_empty(Term::state_const(kEmptyState)));
}

TEST_CASE("defenv: rejects bad bodies") {
    DefEnv env;
    parse_defs(env, prelude_source());
    CHECK_THROWS_AS(env.define("open", TypeExpr::nat(), Term::var("x")), TypeError);
    CHECK_THROWS_AS(env.define("oracle", TypeExpr::boolean(),
                               Term::app(Term::oracle_x("GEQ"), Term::zero())),
                    TypeError);
    CHECK_THROWS_AS(
        env.define("stateful", TypeExpr::state(), Term::state_const(testgen::state_pool()[1])),
        TypeError);
    CHECK_THROWS_AS(env.define("eq", TypeExpr::nat(), Term::zero()), TypeError);  // duplicate
}
