#include <doctest.h>

#include "gen.hpp"
#include "ilr/defenv.hpp"
#include "ilr/error.hpp"
#include "ilr/eval.hpp"
#include "ilr/parse.hpp"
#include "ilr/print.hpp"
#include "ilr/proof.hpp"
#include "ilr/typecheck.hpp"

using namespace ilr;

namespace {

// the intuitionistic successor proof, built programmatically
ProofNode successor_proof() {
    Formula ex = Formula::exists(
        "y", Formula::atomic(Term::def_ref("NEXT"), {Term::var("a"), Term::var("y")}));
    Formula ax = Formula::atomic(Term::def_ref("NEXT"),
                                 {Term::var("a"), Term::succ(Term::var("a"))});
    return ProofNode::forall_i(
        "a", ProofNode::exists_i(Term::succ(Term::var("a")), ex, ProofNode::atomic_axiom(ax)));
}

}  // namespace

TEST_CASE("check: successor proof") {
    Judgement j = check(prelude(), successor_proof());
    CHECK(j.assumptions.empty());
    CHECK(print(j.conclusion) == "forall a. exists y. NEXT(a, y)");
}

TEST_CASE("check: excluded-middle statement") {
    Judgement j = check(prelude(), ProofNode::em1("GEQ"));
    CHECK(print(j.conclusion) ==
          "forall x1. (exists y. GEQ(x1, y)) \\/ (forall y. !GEQ(x1, y))");
}

TEST_CASE("check: eigenvariable violations") {
    Formula open_a = Formula::atomic(Term::def_ref("NEXT"),
                                     {Term::var("a"), Term::succ(Term::var("a"))});
    ProofNode bad = ProofNode::forall_i("a", ProofNode::assume("h", open_a));
    CHECK_THROWS_AS(check(prelude(), bad), ProofError);

    // exists_e whose eigenvariable leaks into the conclusion
    Formula ex = Formula::exists(
        "y", Formula::atomic(Term::def_ref("NEXT"), {Term::zero(), Term::var("y")}));
    ProofNode leak = ProofNode::exists_e(ProofNode::assume("u", ex), "y", "h",
                                         ProofNode::assume("h2", ex.body()));
    CHECK_THROWS_AS(check(prelude(), leak), ProofError);
}

TEST_CASE("check: rule mismatches") {
    ProofNode p = ProofNode::and_e0(ProofNode::atomic_axiom(
        Formula::atomic(Term::def_ref("eq"), {Term::zero(), Term::zero()})));
    CHECK_THROWS_AS(check(prelude(), p), ProofError);

    CHECK_THROWS_AS(check(prelude(), ProofNode::em1("isz")), ProofError);  // arity 1

    ProofNode badpost = ProofNode::post(
        "nosuch", {},
        Formula::atomic(Term::def_ref("eq"), {Term::zero(), Term::zero()}));
    CHECK_THROWS_AS(check(prelude(), badpost), ProofError);

    ProofNode wrongpost = ProofNode::post(
        "eq_refl", {},
        Formula::atomic(Term::def_ref("eq"), {Term::zero(), Term::numeral(1)}));
    CHECK_THROWS_AS(check(prelude(), wrongpost), ProofError);
}

TEST_CASE("extract: assumptions become variables") {
    Formula a = Formula::atomic(Term::def_ref("eq"), {Term::zero(), Term::zero()});
    CHECK(extract(prelude(), ProofNode::assume("x", a)) == Term::var("x"));
}

TEST_CASE("extract: successor proof realizer") {
    Term t = extract(prelude(), successor_proof());
    Term want = Term::lam("a", TypeExpr::nat(),
                          Term::pair(Term::succ(Term::var("a")), Term::state_const(kEmptyState)));
    CHECK(t == want);
    CHECK(print(t) == "\\a:N. (S a, empty)");
}

TEST_CASE("extract: oracle axiom realizer proposes the atom") {
    ProofNode chi = ProofNode::chi_axiom("NEXT", {Term::var("a")}, Term::succ(Term::var("a")));
    // needs a context where `a` is universally closed to check, so wrap
    ProofNode wrapped = ProofNode::forall_i("a", chi);
    check(prelude(), wrapped);
    Term t = extract(prelude(), chi);
    CHECK(t == Term::apps(Term::add_class("NEXT"), {Term::var("a"), Term::succ(Term::var("a"))}));
}

TEST_CASE("em1_term typechecks at the realizer type of its statement") {
    for (const char* p : {"GEQ", "NEXT"}) {
        Term t = em1_term(prelude(), p);
        Formula stmt = em1_statement(prelude(), p);
        CHECK(typecheck(prelude(), t) == realizer_type(stmt));
        CHECK(has_state_empty(t));
    }
}

TEST_CASE("taut_consequence") {
    Term a = Term::var("a");
    Term b = Term::var("b");
    Term imp_ab = Term::apps(Term::def_ref("impb"), {a, b});
    CHECK(taut_consequence(prelude(), {a, imp_ab}, b));  // modus ponens
    Term excl = Term::apps(Term::def_ref("orb"), {a, Term::app(Term::def_ref("notb"), a)});
    CHECK(taut_consequence(prelude(), {}, excl));
    CHECK_FALSE(taut_consequence(prelude(), {a}, b));
}

TEST_CASE("taut_consequence folds closed pure subterms") {
    Term t = Term::apps(Term::def_ref("NEXT"), {Term::numeral(2), Term::numeral(3)});
    CHECK(taut_consequence(prelude(), {}, t));  // literally true after evaluation
    Term f = Term::apps(Term::def_ref("NEXT"), {Term::numeral(2), Term::numeral(5)});
    CHECK_FALSE(taut_consequence(prelude(), {}, f));
    // oracle atoms stay opaque: X \/ !X is a tautology even though X has no value
    Term x = Term::app(Term::oracle_x("GEQ"), Term::numeral(2));
    CHECK(taut_consequence(prelude(), {},
                           Term::apps(Term::def_ref("orb"),
                                      {x, Term::app(Term::def_ref("notb"), x)})));
    CHECK_FALSE(taut_consequence(prelude(), {}, x));
}

TEST_CASE("dummy terms inhabit their types") {
    std::vector<TypeExpr> tys = {
        TypeExpr::nat(), TypeExpr::boolean(), TypeExpr::state(),
        TypeExpr::prod(TypeExpr::nat(), TypeExpr::state()),
        TypeExpr::arrow(TypeExpr::nat(), TypeExpr::prod(TypeExpr::boolean(), TypeExpr::state()))};
    for (const TypeExpr& ty : tys) {
        Term d = dummy_term(ty);
        CHECK(typecheck(prelude(), d) == ty);
        CHECK(d.closed());
    }
}

TEST_CASE("extraction typing and empty-state discipline on the corpus") {
    const DefEnv& env = prelude();
    std::vector<ProofNode> proofs = {successor_proof(), ProofNode::em1("NEXT"),
                                     ProofNode::em1("GEQ")};
    for (const ProofNode& p : proofs) {
        Judgement j = check(env, p);
        Term t = extract(env, p);
        TypeCtx ctx;
        for (const auto& [label, a] : j.assumptions) ctx.emplace(label, realizer_type(a));
        for (const std::string& v : j.free_vars) ctx.emplace(v, TypeExpr::nat());
        CHECK(typecheck(env, ctx, t) == realizer_type(j.conclusion));
        CHECK(has_state_empty(t));
    }
}

TEST_CASE("post realizers join premise knowledge") {
    // two axioms joined: realizer reduces to the empty state everywhere
    Formula a1 = Formula::atomic(Term::def_ref("eq"), {Term::zero(), Term::zero()});
    Formula a2 = Formula::atomic(Term::def_ref("leq"), {Term::zero(), Term::numeral(1)});
    ProofNode post = ProofNode::post(
        "taut", {ProofNode::atomic_axiom(a1), ProofNode::atomic_axiom(a2)}, a1);
    check(prelude(), post);
    Term t = extract(prelude(), post);
    CHECK(t == Term::join(Term::state_const(kEmptyState), Term::state_const(kEmptyState)));
    for (StateId s : testgen::state_pool()) {
        Value v = eval_atomic(prelude(), approximate(t, s));
        CHECK(v == Value{StateVal{kEmptyState}});
    }
}
