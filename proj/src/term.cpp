#include "ilr/term.hpp"

namespace ilr {

Term Term::make(TermKind k, std::string name, TypeExpr ann, StateId st, std::vector<Term> kids) {
    return Term(std::make_shared<const Node>(
        Node{k, std::move(name), std::move(ann), st, std::move(kids)}));
}

Term Term::var(std::string name) { return make(TermKind::Var, std::move(name), {}, {}, {}); }
Term Term::lam(std::string name, TypeExpr ann, Term body) {
    return make(TermKind::Lam, std::move(name), std::move(ann), {}, {std::move(body)});
}
Term Term::app(Term fn, Term arg) {
    return make(TermKind::App, {}, {}, {}, {std::move(fn), std::move(arg)});
}
Term Term::pair(Term l, Term r) {
    return make(TermKind::Pair, {}, {}, {}, {std::move(l), std::move(r)});
}
Term Term::proj0(Term t) { return make(TermKind::Proj0, {}, {}, {}, {std::move(t)}); }
Term Term::proj1(Term t) { return make(TermKind::Proj1, {}, {}, {}, {std::move(t)}); }
Term Term::zero() {
    static const Term z = make(TermKind::Zero, {}, {}, {}, {});
    return z;
}
Term Term::succ(Term t) { return make(TermKind::Succ, {}, {}, {}, {std::move(t)}); }
Term Term::true_() {
    static const Term t = make(TermKind::True, {}, {}, {}, {});
    return t;
}
Term Term::false_() {
    static const Term f = make(TermKind::False, {}, {}, {}, {});
    return f;
}
Term Term::if_(Term cond, Term then_t, Term else_t) {
    return make(TermKind::If, {}, {}, {}, {std::move(cond), std::move(then_t), std::move(else_t)});
}
Term Term::rec(Term base, Term step, Term n) {
    return make(TermKind::Rec, {}, {}, {}, {std::move(base), std::move(step), std::move(n)});
}
Term Term::state_const(StateId s) { return make(TermKind::StateConst, {}, {}, s, {}); }
Term Term::join(Term l, Term r) {
    return make(TermKind::Join, {}, {}, {}, {std::move(l), std::move(r)});
}
Term Term::oracle_x(PredName p) { return make(TermKind::OracleX, std::move(p), {}, {}, {}); }
Term Term::skolem_phi(PredName p) { return make(TermKind::SkolemPhi, std::move(p), {}, {}, {}); }
Term Term::add_class(PredName p) { return make(TermKind::AddClass, std::move(p), {}, {}, {}); }
Term Term::chi_approx(PredName p) { return make(TermKind::ChiApprox, std::move(p), {}, {}, {}); }
Term Term::phi_approx(PredName p) { return make(TermKind::PhiApprox, std::move(p), {}, {}, {}); }
Term Term::add_approx(PredName p) { return make(TermKind::AddApprox, std::move(p), {}, {}, {}); }
Term Term::def_ref(std::string name) { return make(TermKind::DefRef, std::move(name), {}, {}, {}); }

Term Term::numeral(std::uint64_t k) {
    Term t = zero();
    for (std::uint64_t i = 0; i < k; ++i) t = succ(t);
    return t;
}

Term Term::apps(Term f, const std::vector<Term>& args) {
    for (const Term& a : args) f = app(std::move(f), a);
    return f;
}

bool Term::is_numeral() const { return as_numeral().has_value(); }

std::optional<std::uint64_t> Term::as_numeral() const {
    const Node* n = node_.get();
    std::uint64_t k = 0;
    while (n->kind == TermKind::Succ) {
        ++k;
        n = n->kids[0].node_.get();
    }
    if (n->kind == TermKind::Zero) return k;
    return std::nullopt;
}

Term Term::with_kids(std::vector<Term> kids) const {
    assert(kids.size() == node_->kids.size());
    return make(node_->kind, node_->name, node_->ann, node_->state, std::move(kids));
}

void Term::free_vars(std::set<std::string>& out) const {
    switch (kind()) {
        case TermKind::Var:
            out.insert(name());
            return;
        case TermKind::Lam: {
            std::set<std::string> inner;
            kid(0).free_vars(inner);
            inner.erase(name());
            out.insert(inner.begin(), inner.end());
            return;
        }
        default:
            for (const Term& k : kids()) k.free_vars(out);
            return;
    }
}

std::set<std::string> Term::free_vars() const {
    std::set<std::string> out;
    free_vars(out);
    return out;
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.name() != b.name()) return false;
    if (a.kind() == TermKind::StateConst && a.state() != b.state()) return false;
    if (a.kind() == TermKind::Lam && a.ann() != b.ann()) return false;
    if (a.kids().size() != b.kids().size()) return false;
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (a.kid(i) != b.kid(i)) return false;
    return true;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string cand = base + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

Term subst(const Term& t, const std::string& x, const Term& v) {
    switch (t.kind()) {
        case TermKind::Var:
            return t.name() == x ? v : t;
        case TermKind::Lam: {
            if (t.name() == x) return t;  // shadowed
            std::set<std::string> fv = v.free_vars();
            if (fv.count(t.name())) {
                // rename the binder away from the free variables of v
                std::set<std::string> avoid = fv;
                t.kid(0).free_vars(avoid);
                avoid.insert(x);
                std::string y = fresh_name(t.name(), avoid);
                Term body = subst(t.kid(0), t.name(), Term::var(y));
                return Term::lam(y, t.ann(), subst(body, x, v));
            }
            return Term::lam(t.name(), t.ann(), subst(t.kid(0), x, v));
        }
        default: {
            if (t.kids().empty()) return t;
            std::vector<Term> kids;
            kids.reserve(t.kids().size());
            for (const Term& k : t.kids()) kids.push_back(subst(k, x, v));
            return t.with_kids(std::move(kids));
        }
    }
}

}  // namespace ilr
