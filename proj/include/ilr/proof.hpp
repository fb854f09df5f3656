#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ilr/formula.hpp"
#include "ilr/term.hpp"

namespace ilr {

enum class RuleKind {
    Assume,       // label, formula
    AndI,         // p, q
    AndE0,        // p
    AndE1,        // p
    ImpI,         // label, formula (antecedent), p
    ImpE,         // p (A->B), q (A)
    OrI0,         // p (A), formula B
    OrI1,         // formula A, p (B)
    OrE,          // p (A∨B), label1, q1, label2, q2
    ForallI,      // var, p
    ForallE,      // p, term
    ExistsI,      // term, formula (the full existential), p
    ExistsE,      // p (∃x A), var, label, q
    Induction,    // p_base, p_step
    Post,         // rule_id, premises..., conclusion formula
    AtomicAxiom,  // formula
    EM1,          // pred
    ChiAxiom,     // pred, args terms, witness term
    PhiAxiom,     // pred, args terms
};

/// Natural-deduction proof tree. Conclusions are recomputed by check();
/// stored formulas are rule inputs, never trusted outputs.
class ProofNode {
public:
    ProofNode() : ProofNode(atomic_axiom(falsum())) {}

    static ProofNode assume(std::string label, Formula a);
    static ProofNode and_i(ProofNode p, ProofNode q);
    static ProofNode and_e0(ProofNode p);
    static ProofNode and_e1(ProofNode p);
    static ProofNode imp_i(std::string label, Formula a, ProofNode p);
    static ProofNode imp_e(ProofNode p, ProofNode q);
    static ProofNode or_i0(ProofNode p, Formula b);
    static ProofNode or_i1(Formula a, ProofNode p);
    static ProofNode or_e(ProofNode p, std::string l1, ProofNode q1,
                          std::string l2, ProofNode q2);
    static ProofNode forall_i(std::string var, ProofNode p);
    static ProofNode forall_e(ProofNode p, Term t);
    static ProofNode exists_i(Term t, Formula ex, ProofNode p);
    static ProofNode exists_e(ProofNode p, std::string var, std::string label, ProofNode q);
    static ProofNode induction(ProofNode base, ProofNode step);
    static ProofNode post(std::string rule_id, std::vector<ProofNode> premises, Formula conclusion);
    static ProofNode atomic_axiom(Formula a);
    static ProofNode em1(PredName pred);
    static ProofNode chi_axiom(PredName pred, std::vector<Term> args, Term t);
    static ProofNode phi_axiom(PredName pred, std::vector<Term> args);

    RuleKind kind() const { return node_->kind; }
    const std::string& label() const { return node_->label; }
    const std::string& label2() const { return node_->label2; }
    const std::string& var() const { return node_->label; }
    const std::string& rule_id() const { return node_->label; }
    const PredName& pred() const { return node_->label; }
    const Formula& formula() const { return node_->formula; }
    const std::vector<Term>& terms() const { return node_->terms; }
    const std::vector<ProofNode>& kids() const { return node_->kids; }
    const ProofNode& kid(std::size_t i) const { return node_->kids[i]; }

    friend bool operator==(const ProofNode& a, const ProofNode& b);
    friend bool operator!=(const ProofNode& a, const ProofNode& b) { return !(a == b); }

private:
    struct Node {
        RuleKind kind;
        std::string label;   // assumption label / var / rule_id / pred
        std::string label2;  // second label (OrE, ExistsE)
        Formula formula;
        std::vector<Term> terms;
        std::vector<ProofNode> kids;
    };
    explicit ProofNode(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static ProofNode make(Node n);
    std::shared_ptr<const Node> node_;
};

struct Judgement {
    std::vector<std::pair<std::string, Formula>> assumptions;  // open, by first use
    Formula conclusion;
    std::vector<std::string> free_vars;
};

/// Checks the proof: recomputes every conclusion, enforces the
/// eigenvariable side conditions and validates Post/axiom leaves.
/// Throws ProofError.
Judgement check(const DefEnv& env, const ProofNode& p);

/// Realizer extraction. Open assumptions become free variables named by
/// their label (typed by the realizer type of the assumption); free
/// formula variables stay free at type N. Requires check() to succeed.
Term extract(const DefEnv& env, const ProofNode& p);

/// Canonical inhabitant of a type: 0, False, the empty state, constant
/// functions and pairs thereof.
Term dummy_term(const TypeExpr& ty);

/// Realizer of the restricted excluded middle instance for pred:
/// λx⃗.⟨X_p x⃗, ⟨Phi_p x⃗, ∅⟩, λn. Add_p x⃗ n⟩. Requires arity ≥ 2.
Term em1_term(const DefEnv& env, const PredName& pred);

/// The statement it realizes: ∀x⃗. (∃y p(x⃗,y)) ∨ (∀y !p(x⃗,y)).
Formula em1_statement(const DefEnv& env, const PredName& pred);

/// Propositional consequence over Boolean terms: maximal Boolean subterms
/// (closed pure subterms normalized first) become propositional variables;
/// every assignment satisfying all premises must satisfy the conclusion.
/// Throws VariableBudgetError above 20 distinct atoms.
bool taut_consequence(const DefEnv& env, const std::vector<Term>& premises,
                      const Term& conclusion);

}  // namespace ilr
