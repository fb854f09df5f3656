#include "ilr/proof.hpp"

#include <algorithm>
#include <map>

#include "ilr/error.hpp"
#include "ilr/eval.hpp"
#include "ilr/print.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

ProofNode ProofNode::make(Node n) {
    return ProofNode(std::make_shared<const Node>(std::move(n)));
}

ProofNode ProofNode::assume(std::string label, Formula a) {
    return make({RuleKind::Assume, std::move(label), {}, std::move(a), {}, {}});
}
ProofNode ProofNode::and_i(ProofNode p, ProofNode q) {
    return make({RuleKind::AndI, {}, {}, {}, {}, {std::move(p), std::move(q)}});
}
ProofNode ProofNode::and_e0(ProofNode p) {
    return make({RuleKind::AndE0, {}, {}, {}, {}, {std::move(p)}});
}
ProofNode ProofNode::and_e1(ProofNode p) {
    return make({RuleKind::AndE1, {}, {}, {}, {}, {std::move(p)}});
}
ProofNode ProofNode::imp_i(std::string label, Formula a, ProofNode p) {
    return make({RuleKind::ImpI, std::move(label), {}, std::move(a), {}, {std::move(p)}});
}
ProofNode ProofNode::imp_e(ProofNode p, ProofNode q) {
    return make({RuleKind::ImpE, {}, {}, {}, {}, {std::move(p), std::move(q)}});
}
ProofNode ProofNode::or_i0(ProofNode p, Formula b) {
    return make({RuleKind::OrI0, {}, {}, std::move(b), {}, {std::move(p)}});
}
ProofNode ProofNode::or_i1(Formula a, ProofNode p) {
    return make({RuleKind::OrI1, {}, {}, std::move(a), {}, {std::move(p)}});
}
ProofNode ProofNode::or_e(ProofNode p, std::string l1, ProofNode q1, std::string l2,
                          ProofNode q2) {
    return make({RuleKind::OrE, std::move(l1), std::move(l2), {}, {},
                 {std::move(p), std::move(q1), std::move(q2)}});
}
ProofNode ProofNode::forall_i(std::string var, ProofNode p) {
    return make({RuleKind::ForallI, std::move(var), {}, {}, {}, {std::move(p)}});
}
ProofNode ProofNode::forall_e(ProofNode p, Term t) {
    return make({RuleKind::ForallE, {}, {}, {}, {std::move(t)}, {std::move(p)}});
}
ProofNode ProofNode::exists_i(Term t, Formula ex, ProofNode p) {
    return make({RuleKind::ExistsI, {}, {}, std::move(ex), {std::move(t)}, {std::move(p)}});
}
ProofNode ProofNode::exists_e(ProofNode p, std::string var, std::string label, ProofNode q) {
    return make({RuleKind::ExistsE, std::move(var), std::move(label), {}, {},
                 {std::move(p), std::move(q)}});
}
ProofNode ProofNode::induction(ProofNode base, ProofNode step) {
    return make({RuleKind::Induction, {}, {}, {}, {}, {std::move(base), std::move(step)}});
}
ProofNode ProofNode::post(std::string rule_id, std::vector<ProofNode> premises,
                          Formula conclusion) {
    return make({RuleKind::Post, std::move(rule_id), {}, std::move(conclusion), {},
                 std::move(premises)});
}
ProofNode ProofNode::atomic_axiom(Formula a) {
    return make({RuleKind::AtomicAxiom, {}, {}, std::move(a), {}, {}});
}
ProofNode ProofNode::em1(PredName pred) {
    return make({RuleKind::EM1, std::move(pred), {}, {}, {}, {}});
}
ProofNode ProofNode::chi_axiom(PredName pred, std::vector<Term> args, Term t) {
    std::vector<Term> terms = std::move(args);
    terms.push_back(std::move(t));
    return make({RuleKind::ChiAxiom, std::move(pred), {}, {}, std::move(terms), {}});
}
ProofNode ProofNode::phi_axiom(PredName pred, std::vector<Term> args) {
    return make({RuleKind::PhiAxiom, std::move(pred), {}, {}, std::move(args), {}});
}

bool operator==(const ProofNode& a, const ProofNode& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.label() != b.label() || a.label2() != b.label2())
        return false;
    if (a.formula() != b.formula() || a.terms() != b.terms()) return false;
    if (a.kids().size() != b.kids().size()) return false;
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (a.kid(i) != b.kid(i)) return false;
    return true;
}

Term dummy_term(const TypeExpr& ty) {
    switch (ty.kind()) {
        case TypeKind::Nat: return Term::zero();
        case TypeKind::Bool: return Term::false_();
        case TypeKind::State: return Term::state_const(kEmptyState);
        case TypeKind::Prod: return Term::pair(dummy_term(ty.left()), dummy_term(ty.right()));
        case TypeKind::Arrow: return Term::lam("_", ty.left(), dummy_term(ty.right()));
    }
    throw InternalError("dummy_term: unhandled type kind");
}

namespace {

std::size_t em1_arity(const DefEnv& env, const PredName& pred) {
    auto k = env.pred_arity(pred);
    if (!k) throw ProofError("unknown predicate `" + pred + "`");
    if (*k < 2)
        throw ProofError("excluded-middle instance needs a predicate of arity >= 2, `" + pred +
                         "` has arity " + std::to_string(*k));
    return *k;
}

}  // namespace

Formula em1_statement(const DefEnv& env, const PredName& pred) {
    std::size_t k = em1_arity(env, pred) - 1;
    std::vector<Term> args;
    for (std::size_t i = 1; i <= k; ++i) args.push_back(Term::var("x" + std::to_string(i)));
    std::vector<Term> args_y = args;
    args_y.push_back(Term::var("y"));
    Formula ex = Formula::exists("y", Formula::atomic(Term::def_ref(pred), args_y));
    Formula all = Formula::forall("y", negated_atom(pred, k + 1, args_y));
    Formula body = Formula::disj(std::move(ex), std::move(all));
    for (std::size_t i = k; i >= 1; --i)
        body = Formula::forall("x" + std::to_string(i), std::move(body));
    return body;
}

Term em1_term(const DefEnv& env, const PredName& pred) {
    std::size_t k = em1_arity(env, pred) - 1;
    std::vector<Term> xs;
    for (std::size_t i = 1; i <= k; ++i) xs.push_back(Term::var("x" + std::to_string(i)));
    Term truth = Term::apps(Term::oracle_x(pred), xs);
    Term wit = Term::apps(Term::skolem_phi(pred), xs);
    Term add = Term::lam("n", TypeExpr::nat(),
                         Term::app(Term::apps(Term::add_class(pred), xs), Term::var("n")));
    Term body = Term::pair(truth, Term::pair(Term::pair(wit, Term::state_const(kEmptyState)), add));
    for (std::size_t i = k; i >= 1; --i)
        body = Term::lam("x" + std::to_string(i), TypeExpr::nat(), body);
    return body;
}

namespace {

std::size_t axiom_arity(const DefEnv& env, const PredName& pred) {
    auto k = env.pred_arity(pred);
    if (!k) throw ProofError("unknown predicate `" + pred + "`");
    return *k;
}

// Combined atomic heads of the oracle axiom schemas. Argument variables
// use the same canonical names as negated_atom so structural equality is
// stable across the parser and the checker.
Formula chi_axiom_formula(const DefEnv& env, const PredName& pred, std::vector<Term> args) {
    std::size_t arity = axiom_arity(env, pred);  // k+1
    if (args.size() != arity)
        throw ProofError("oracle axiom for `" + pred + "` expects " + std::to_string(arity) +
                         " terms, got " + std::to_string(args.size()));
    std::vector<Term> vars;
    for (std::size_t i = 1; i <= arity; ++i) vars.push_back(Term::var("_a" + std::to_string(i)));
    Term lhs = Term::apps(Term::def_ref(pred), vars);
    Term rhs = Term::apps(Term::oracle_x(pred),
                          std::vector<Term>(vars.begin(), vars.end() - 1));
    Term head = Term::app(Term::app(Term::def_ref("impb"), lhs), rhs);
    for (std::size_t i = arity; i >= 1; --i)
        head = Term::lam("_a" + std::to_string(i), TypeExpr::nat(), head);
    return Formula::atomic(head, std::move(args));
}

Formula phi_axiom_formula(const DefEnv& env, const PredName& pred, std::vector<Term> args) {
    std::size_t arity = axiom_arity(env, pred);
    std::size_t k = arity - 1;
    if (args.size() != k)
        throw ProofError("Skolem axiom for `" + pred + "` expects " + std::to_string(k) +
                         " terms, got " + std::to_string(args.size()));
    std::vector<Term> vars;
    for (std::size_t i = 1; i <= k; ++i) vars.push_back(Term::var("_a" + std::to_string(i)));
    Term lhs = Term::apps(Term::oracle_x(pred), vars);
    Term rhs = Term::app(Term::apps(Term::def_ref(pred), vars),
                         Term::apps(Term::skolem_phi(pred), vars));
    Term head = Term::app(Term::app(Term::def_ref("impb"), lhs), rhs);
    for (std::size_t i = k; i >= 1; --i)
        head = Term::lam("_a" + std::to_string(i), TypeExpr::nat(), head);
    return Formula::atomic(head, std::move(args));
}

// ---------------------------------------------------------------------
// Tautological consequence
// ---------------------------------------------------------------------

enum class SkOp { Atom, Const, Not, And, Or, Imp };

struct Skel {
    SkOp op = SkOp::Const;
    bool value = false;           // Const
    std::size_t atom = 0;         // Atom
    std::vector<Skel> kids;
};

struct AtomTable {
    std::map<std::string, std::size_t> index;
    std::size_t intern(const std::string& key) {
        auto [it, inserted] = index.emplace(key, index.size());
        (void)inserted;
        return it->second;
    }
};

void spine(const Term& t, Term& head, std::vector<Term>& args) {
    if (t.kind() == TermKind::App) {
        spine(t.kid(0), head, args);
        args.push_back(t.kid(1));
    } else {
        head = t;
    }
}

Skel skeleton(const DefEnv& env, Term t, AtomTable& atoms) {
    for (int fuel = 0; fuel < 10000; ++fuel) {
        if (t.kind() == TermKind::True) return {SkOp::Const, true, 0, {}};
        if (t.kind() == TermKind::False) return {SkOp::Const, false, 0, {}};
        Term head;
        std::vector<Term> args;
        spine(t, head, args);
        if (head.kind() == TermKind::Lam && !args.empty()) {
            // expose combined heads
            Term reduced = subst(head.kid(0), head.name(), args[0]);
            t = Term::apps(reduced, std::vector<Term>(args.begin() + 1, args.end()));
            continue;
        }
        if (head.kind() == TermKind::DefRef) {
            if (head.name() == "notb" && args.size() == 1)
                return {SkOp::Not, false, 0, {skeleton(env, args[0], atoms)}};
            if (args.size() == 2 &&
                (head.name() == "andb" || head.name() == "orb" || head.name() == "impb")) {
                SkOp op = head.name() == "andb" ? SkOp::And
                          : head.name() == "orb" ? SkOp::Or
                                                 : SkOp::Imp;
                return {op, false, 0,
                        {skeleton(env, args[0], atoms), skeleton(env, args[1], atoms)}};
            }
        }
        break;
    }
    // a maximal Boolean subterm: fold it if closed and oracle-free, else
    // treat it as an opaque propositional variable
    if (t.closed() && !contains_oracle_family(t)) {
        Value v = eval_atomic(env, t);
        return {SkOp::Const, std::get<Boolean>(v).b, 0, {}};
    }
    return {SkOp::Atom, false, atoms.intern(print(t)), {}};
}

bool eval_skel(const Skel& s, const std::vector<bool>& assignment) {
    switch (s.op) {
        case SkOp::Const: return s.value;
        case SkOp::Atom: return assignment[s.atom];
        case SkOp::Not: return !eval_skel(s.kids[0], assignment);
        case SkOp::And: return eval_skel(s.kids[0], assignment) && eval_skel(s.kids[1], assignment);
        case SkOp::Or: return eval_skel(s.kids[0], assignment) || eval_skel(s.kids[1], assignment);
        case SkOp::Imp: return !eval_skel(s.kids[0], assignment) || eval_skel(s.kids[1], assignment);
    }
    return false;
}

}  // namespace

bool taut_consequence(const DefEnv& env, const std::vector<Term>& premises,
                      const Term& conclusion) {
    AtomTable atoms;
    std::vector<Skel> prem;
    prem.reserve(premises.size());
    for (const Term& p : premises) prem.push_back(skeleton(env, p, atoms));
    Skel concl = skeleton(env, conclusion, atoms);

    std::size_t n = atoms.index.size();
    if (n > 20)
        throw VariableBudgetError("tautology check over " + std::to_string(n) +
                                  " atoms exceeds the 2^20 assignment budget");
    std::vector<bool> assignment(n, false);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1;
        bool all = true;
        for (const Skel& p : prem)
            if (!eval_skel(p, assignment)) { all = false; break; }
        if (all && !eval_skel(concl, assignment)) return false;
    }
    return true;
}

namespace {

// ---------------------------------------------------------------------
// Proof checking
// ---------------------------------------------------------------------

using Assumptions = std::vector<std::pair<std::string, Formula>>;

const Formula* find_assumption(const Assumptions& as, const std::string& label) {
    for (const auto& [l, f] : as)
        if (l == label) return &f;
    return nullptr;
}

void merge_into(Assumptions& into, const Assumptions& from) {
    for (const auto& [l, f] : from) {
        const Formula* prev = find_assumption(into, l);
        if (prev) {
            if (*prev != f)
                throw ProofError("assumption label `" + l + "` reused with a different formula");
        } else {
            into.emplace_back(l, f);
        }
    }
}

void discharge(Assumptions& as, const std::string& label, const Formula& expected) {
    for (auto it = as.begin(); it != as.end(); ++it) {
        if (it->first == label) {
            if (it->second != expected)
                throw ProofError("assumption `" + label + "` has formula " +
                                 print(it->second) + ", expected " + print(expected));
            as.erase(it);
            return;
        }
    }
    // vacuous discharge is fine
}

bool assumptions_mention(const Assumptions& as, const std::string& var) {
    for (const auto& [l, f] : as) {
        (void)l;
        if (f.free_vars().count(var)) return true;
    }
    return false;
}

// Terms allowed inside formulas and as quantifier witnesses.
void validate_lterm(const DefEnv& env, const Term& t) {
    if (contains_approx_family(t))
        throw ProofError("term contains approximation constants: " + print(t));
    if (!has_state_empty(t))
        throw ProofError("term mentions a non-empty state: " + print(t));
    TypeCtx ctx;
    for (const std::string& v : t.free_vars()) ctx.emplace(v, TypeExpr::nat());
    TypeExpr ty = typecheck(env, ctx, t);
    if (ty != TypeExpr::nat())
        throw ProofError("witness term is not of type N: " + print(t));
}

// Bounded numeral grid over the free variables; every instantiation that
// makes all premises true must make the conclusion true. Closed instances
// are decided exactly.
std::uint64_t grid_limit(std::size_t nvars) {
    switch (nvars) {
        case 0: return 0;
        case 1: return 9;
        case 2: return 6;
        case 3: return 4;
        default: return 2;
    }
}

bool instances_valid(const DefEnv& env, const std::vector<Formula>& premises,
                     const Formula& conclusion) {
    std::set<std::string> varset = conclusion.free_vars();
    for (const Formula& p : premises) p.free_vars(varset);
    std::vector<std::string> vars(varset.begin(), varset.end());

    std::uint64_t limit = grid_limit(vars.size());
    std::vector<std::uint64_t> vals(vars.size(), 0);
    while (true) {
        auto inst = [&](Formula f) {
            for (std::size_t i = 0; i < vars.size(); ++i)
                f = subst_formula(f, vars[i], Term::numeral(vals[i]));
            return f;
        };
        bool all = true;
        for (const Formula& p : premises)
            if (!eval_closed_atomic(env, inst(p))) { all = false; break; }
        if (all && !eval_closed_atomic(env, inst(conclusion))) return false;

        std::size_t i = 0;
        for (; i < vals.size(); ++i) {
            if (vals[i] < limit) { ++vals[i]; break; }
            vals[i] = 0;
        }
        if (i == vals.size()) break;
    }
    return true;
}

bool oracle_free(const Formula& a) {
    if (contains_oracle_family(a.head())) return false;
    for (const Term& t : a.args())
        if (contains_oracle_family(t)) return false;
    return true;
}

Term atomic_to_term(const Formula& a) { return Term::apps(a.head(), a.args()); }

const std::set<std::string> kPostRules = {"taut",     "eq_refl",  "eq_sym",
                                          "eq_trans", "eq_cong",  "leq_refl",
                                          "leq_trans", "equation"};

void validate_post(const DefEnv& env, const std::string& rule_id,
                   const std::vector<Formula>& premises, const Formula& conclusion) {
    for (const Formula& p : premises)
        if (p.kind() != FormulaKind::Atomic)
            throw ProofError("non-atomic premise in a Post rule: " + print(p));
    if (conclusion.kind() != FormulaKind::Atomic)
        throw ProofError("non-atomic conclusion in a Post rule: " + print(conclusion));
    if (!kPostRules.count(rule_id))
        throw ProofError("invalid-post-rule: unknown rule `" + rule_id + "`");

    if (rule_id == "taut") {
        std::vector<Term> prem;
        prem.reserve(premises.size());
        for (const Formula& p : premises) prem.push_back(atomic_to_term(p));
        if (!taut_consequence(env, prem, atomic_to_term(conclusion)))
            throw ProofError("invalid-post-rule: conclusion is not a tautological consequence");
        return;
    }
    // equality/ordering/equation rules: decided semantically
    if (!oracle_free(conclusion))
        throw ProofError("invalid-post-rule: `" + rule_id + "` cannot decide oracle formulas");
    for (const Formula& p : premises)
        if (!oracle_free(p))
            throw ProofError("invalid-post-rule: `" + rule_id + "` cannot decide oracle formulas");
    if (!instances_valid(env, premises, conclusion))
        throw ProofError("invalid-post-rule: a numeral instance refutes `" + rule_id + "`");
}

void validate_atomic_axiom(const DefEnv& env, const Formula& a) {
    if (a.kind() != FormulaKind::Atomic)
        throw ProofError("axiom formula is not atomic: " + print(a));
    if (taut_consequence(env, {}, atomic_to_term(a))) return;
    if (oracle_free(a) && instances_valid(env, {}, a)) return;
    throw ProofError("not a recognized atomic axiom: " + print(a));
}

struct CheckResult {
    Formula conclusion;
    Assumptions open;
};

CheckResult check_rec(const DefEnv& env, const ProofNode& p) {
    switch (p.kind()) {
        case RuleKind::Assume: {
            validate_formula(env, p.formula());
            return {p.formula(), {{p.label(), p.formula()}}};
        }
        case RuleKind::AndI: {
            CheckResult a = check_rec(env, p.kid(0));
            CheckResult b = check_rec(env, p.kid(1));
            merge_into(a.open, b.open);
            return {Formula::conj(a.conclusion, b.conclusion), std::move(a.open)};
        }
        case RuleKind::AndE0:
        case RuleKind::AndE1: {
            CheckResult a = check_rec(env, p.kid(0));
            if (a.conclusion.kind() != FormulaKind::And)
                throw ProofError("conjunction elimination on " + print(a.conclusion));
            Formula c = p.kind() == RuleKind::AndE0 ? a.conclusion.left() : a.conclusion.right();
            return {c, std::move(a.open)};
        }
        case RuleKind::ImpI: {
            validate_formula(env, p.formula());
            CheckResult a = check_rec(env, p.kid(0));
            discharge(a.open, p.label(), p.formula());
            return {Formula::imp(p.formula(), a.conclusion), std::move(a.open)};
        }
        case RuleKind::ImpE: {
            CheckResult f = check_rec(env, p.kid(0));
            CheckResult x = check_rec(env, p.kid(1));
            if (f.conclusion.kind() != FormulaKind::Imp)
                throw ProofError("implication elimination on " + print(f.conclusion));
            if (f.conclusion.left() != x.conclusion)
                throw ProofError("implication argument mismatch: expected " +
                                 print(f.conclusion.left()) + ", got " + print(x.conclusion));
            merge_into(f.open, x.open);
            return {f.conclusion.right(), std::move(f.open)};
        }
        case RuleKind::OrI0: {
            validate_formula(env, p.formula());
            CheckResult a = check_rec(env, p.kid(0));
            return {Formula::disj(a.conclusion, p.formula()), std::move(a.open)};
        }
        case RuleKind::OrI1: {
            validate_formula(env, p.formula());
            CheckResult a = check_rec(env, p.kid(0));
            return {Formula::disj(p.formula(), a.conclusion), std::move(a.open)};
        }
        case RuleKind::OrE: {
            CheckResult d = check_rec(env, p.kid(0));
            if (d.conclusion.kind() != FormulaKind::Or)
                throw ProofError("case split on " + print(d.conclusion));
            CheckResult q1 = check_rec(env, p.kid(1));
            CheckResult q2 = check_rec(env, p.kid(2));
            if (q1.conclusion != q2.conclusion)
                throw ProofError("case branches conclude different formulas: " +
                                 print(q1.conclusion) + " vs " + print(q2.conclusion));
            discharge(q1.open, p.label(), d.conclusion.left());
            discharge(q2.open, p.label2(), d.conclusion.right());
            merge_into(d.open, q1.open);
            merge_into(d.open, q2.open);
            return {q1.conclusion, std::move(d.open)};
        }
        case RuleKind::ForallI: {
            CheckResult a = check_rec(env, p.kid(0));
            if (assumptions_mention(a.open, p.var()))
                throw ProofError("eigenvariable-violation: `" + p.var() +
                                 "` occurs free in an open assumption");
            return {Formula::forall(p.var(), a.conclusion), std::move(a.open)};
        }
        case RuleKind::ForallE: {
            CheckResult a = check_rec(env, p.kid(0));
            if (a.conclusion.kind() != FormulaKind::Forall)
                throw ProofError("universal elimination on " + print(a.conclusion));
            validate_lterm(env, p.terms()[0]);
            Formula c = subst_formula(a.conclusion.body(), a.conclusion.var(), p.terms()[0]);
            return {c, std::move(a.open)};
        }
        case RuleKind::ExistsI: {
            validate_formula(env, p.formula());
            if (p.formula().kind() != FormulaKind::Exists)
                throw ProofError("existential introduction needs an existential formula, got " +
                                 print(p.formula()));
            validate_lterm(env, p.terms()[0]);
            CheckResult a = check_rec(env, p.kid(0));
            Formula want =
                subst_formula(p.formula().body(), p.formula().var(), p.terms()[0]);
            if (a.conclusion != want)
                throw ProofError("existential introduction premise is " + print(a.conclusion) +
                                 ", expected " + print(want));
            return {p.formula(), std::move(a.open)};
        }
        case RuleKind::ExistsE: {
            CheckResult e = check_rec(env, p.kid(0));
            if (e.conclusion.kind() != FormulaKind::Exists)
                throw ProofError("existential elimination on " + print(e.conclusion));
            CheckResult q = check_rec(env, p.kid(1));
            Formula hyp = subst_formula(e.conclusion.body(), e.conclusion.var(),
                                        Term::var(p.var()));
            discharge(q.open, p.label2(), hyp);
            if (q.conclusion.free_vars().count(p.var()))
                throw ProofError("eigenvariable-violation: `" + p.var() +
                                 "` occurs free in the conclusion");
            if (assumptions_mention(q.open, p.var()))
                throw ProofError("eigenvariable-violation: `" + p.var() +
                                 "` occurs free in an open assumption");
            merge_into(e.open, q.open);
            return {q.conclusion, std::move(e.open)};
        }
        case RuleKind::Induction: {
            CheckResult step = check_rec(env, p.kid(1));
            if (step.conclusion.kind() != FormulaKind::Forall ||
                step.conclusion.body().kind() != FormulaKind::Imp)
                throw ProofError("induction step must conclude forall x. A -> A[S x], got " +
                                 print(step.conclusion));
            std::string var = step.conclusion.var();
            Formula a = step.conclusion.body().left();
            Formula want_succ = subst_formula(a, var, Term::succ(Term::var(var)));
            if (step.conclusion.body().right() != want_succ)
                throw ProofError("induction step consequent is " +
                                 print(step.conclusion.body().right()) + ", expected " +
                                 print(want_succ));
            CheckResult base = check_rec(env, p.kid(0));
            Formula want_base = subst_formula(a, var, Term::zero());
            if (base.conclusion != want_base)
                throw ProofError("induction base concludes " + print(base.conclusion) +
                                 ", expected " + print(want_base));
            merge_into(base.open, step.open);
            return {Formula::forall(var, a), std::move(base.open)};
        }
        case RuleKind::Post: {
            validate_formula(env, p.formula());
            std::vector<Formula> prems;
            Assumptions open;
            for (const ProofNode& q : p.kids()) {
                CheckResult r = check_rec(env, q);
                prems.push_back(r.conclusion);
                merge_into(open, r.open);
            }
            validate_post(env, p.rule_id(), prems, p.formula());
            return {p.formula(), std::move(open)};
        }
        case RuleKind::AtomicAxiom: {
            validate_formula(env, p.formula());
            validate_atomic_axiom(env, p.formula());
            return {p.formula(), {}};
        }
        case RuleKind::EM1:
            return {em1_statement(env, p.pred()), {}};
        case RuleKind::ChiAxiom: {
            for (const Term& t : p.terms()) validate_lterm(env, t);
            Formula a = chi_axiom_formula(env, p.pred(), p.terms());
            validate_formula(env, a);
            return {a, {}};
        }
        case RuleKind::PhiAxiom: {
            for (const Term& t : p.terms()) validate_lterm(env, t);
            Formula a = phi_axiom_formula(env, p.pred(), p.terms());
            validate_formula(env, a);
            return {a, {}};
        }
    }
    throw InternalError("check: unhandled rule kind");
}

}  // namespace

Judgement check(const DefEnv& env, const ProofNode& p) {
    CheckResult r = check_rec(env, p);
    std::set<std::string> fv = r.conclusion.free_vars();
    for (const auto& [l, f] : r.open) {
        (void)l;
        f.free_vars(fv);
    }
    return Judgement{std::move(r.open), std::move(r.conclusion),
                     std::vector<std::string>(fv.begin(), fv.end())};
}

namespace {

Term extract_rec(const DefEnv& env, const ProofNode& p) {
    switch (p.kind()) {
        case RuleKind::Assume:
            return Term::var(p.label());
        case RuleKind::AndI:
            return Term::pair(extract_rec(env, p.kid(0)), extract_rec(env, p.kid(1)));
        case RuleKind::AndE0:
            return Term::proj0(extract_rec(env, p.kid(0)));
        case RuleKind::AndE1:
            return Term::proj1(extract_rec(env, p.kid(0)));
        case RuleKind::ImpI:
            return Term::lam(p.label(), realizer_type(p.formula()), extract_rec(env, p.kid(0)));
        case RuleKind::ImpE:
            return Term::app(extract_rec(env, p.kid(0)), extract_rec(env, p.kid(1)));
        case RuleKind::OrI0:
            return Term::pair(Term::true_(),
                              Term::pair(extract_rec(env, p.kid(0)),
                                         dummy_term(realizer_type(p.formula()))));
        case RuleKind::OrI1:
            return Term::pair(Term::false_(),
                              Term::pair(dummy_term(realizer_type(p.formula())),
                                         extract_rec(env, p.kid(0))));
        case RuleKind::OrE: {
            Formula disj = check_rec(env, p.kid(0)).conclusion;
            Term u = extract_rec(env, p.kid(0));
            Term w1 = extract_rec(env, p.kid(1));
            Term w2 = extract_rec(env, p.kid(2));
            Term left = Term::app(Term::lam(p.label(), realizer_type(disj.left()), w1),
                                  Term::proj0(Term::proj1(u)));
            Term right = Term::app(Term::lam(p.label2(), realizer_type(disj.right()), w2),
                                   Term::proj1(Term::proj1(u)));
            return Term::if_(Term::proj0(u), left, right);
        }
        case RuleKind::ForallI:
            return Term::lam(p.var(), TypeExpr::nat(), extract_rec(env, p.kid(0)));
        case RuleKind::ForallE:
            return Term::app(extract_rec(env, p.kid(0)), p.terms()[0]);
        case RuleKind::ExistsI:
            return Term::pair(p.terms()[0], extract_rec(env, p.kid(0)));
        case RuleKind::ExistsE: {
            Formula ex = check_rec(env, p.kid(0)).conclusion;
            Formula hyp = subst_formula(ex.body(), ex.var(), Term::var(p.var()));
            Term u = extract_rec(env, p.kid(0));
            Term t = extract_rec(env, p.kid(1));
            Term fn = Term::lam(p.var(), TypeExpr::nat(),
                                Term::lam(p.label2(), realizer_type(hyp), t));
            return Term::app(Term::app(fn, Term::proj0(u)), Term::proj1(u));
        }
        case RuleKind::Induction: {
            Term base = extract_rec(env, p.kid(0));
            Term step = extract_rec(env, p.kid(1));
            std::set<std::string> avoid = base.free_vars();
            step.free_vars(avoid);
            std::string var = check_rec(env, p.kid(1)).conclusion.var();
            std::string alpha = fresh_name(var, avoid);
            return Term::lam(alpha, TypeExpr::nat(),
                             Term::rec(base, step, Term::var(alpha)));
        }
        case RuleKind::Post: {
            if (p.kids().empty()) return Term::state_const(kEmptyState);
            Term t = extract_rec(env, p.kid(0));
            for (std::size_t i = 1; i < p.kids().size(); ++i)
                t = Term::join(std::move(t), extract_rec(env, p.kid(i)));
            return t;
        }
        case RuleKind::AtomicAxiom:
        case RuleKind::PhiAxiom:
            return Term::state_const(kEmptyState);
        case RuleKind::EM1:
            return em1_term(env, p.pred());
        case RuleKind::ChiAxiom:
            return Term::apps(Term::add_class(p.pred()), p.terms());
    }
    throw InternalError("extract: unhandled rule kind");
}

}  // namespace

Term extract(const DefEnv& env, const ProofNode& p) {
    check(env, p);  // extraction is only defined on checkable proofs
    return extract_rec(env, p);
}

}  // namespace ilr
