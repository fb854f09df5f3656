#include "ilr/parse.hpp"

#include <cctype>
#include <sstream>

#include "ilr/error.hpp"

namespace ilr {

std::string to_string(const Diagnostic& d) {
    std::ostringstream os;
    os << (d.severity == Severity::Error ? "error" : "warning") << " at " << d.line << ":"
       << d.column << ": " << d.message;
    return os.str();
}

ParseError::ParseError(std::vector<Diagnostic> ds)
    : Error(ds.empty() ? "parse error" : to_string(ds.front())), diagnostics(std::move(ds)) {}

std::optional<SourceKind> kind_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = path.substr(dot + 1);
    if (ext == "term") return SourceKind::Term;
    if (ext == "form") return SourceKind::Formula;
    if (ext == "proof") return SourceKind::Proof;
    if (ext == "state") return SourceKind::State;
    if (ext == "defs") return SourceKind::Defs;
    return std::nullopt;
}

namespace {

enum class Tok {
    Ident, Number, Lambda, Colon, Dot, LParen, RParen, Comma, LBracket, RBracket,
    LBrace, RBrace, Equal, Arrow, Star, And, Or, Bang, End,
};

struct Token {
    Tok tok;
    std::string text;
    int line = 1, col = 1;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& s) : src(s) {}

    [[noreturn]] void fail(int l, int c, const std::string& msg) {
        throw ParseError({Diagnostic{Severity::Error, l, c, msg}});
    }

    void advance(char c) {
        ++pos;
        if (c == '\n') { ++line; col = 1; } else { ++col; }
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {  // comment to end of line
                while (pos < src.size() && src[pos] != '\n') advance(src[pos]);
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) { advance(c); continue; }
            int l = line, co = col;
            auto push = [&](Tok t, std::string text) {
                out.push_back(Token{t, std::move(text), l, co});
            };
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos < src.size() &&
                       (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                    id += src[pos];
                    advance(src[pos]);
                }
                push(Tok::Ident, std::move(id));
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                    num += src[pos];
                    advance(src[pos]);
                }
                push(Tok::Number, std::move(num));
                continue;
            }
            switch (c) {
                case '\\':
                    advance(c);
                    if (pos < src.size() && src[pos] == '/') { advance('/'); push(Tok::Or, "\\/"); }
                    else push(Tok::Lambda, "\\");
                    continue;
                case '/':
                    advance(c);
                    if (pos < src.size() && src[pos] == '\\') { advance('\\'); push(Tok::And, "/\\"); }
                    else fail(l, co, "stray '/'");
                    continue;
                case '-':
                    advance(c);
                    if (pos < src.size() && src[pos] == '>') { advance('>'); push(Tok::Arrow, "->"); }
                    else fail(l, co, "stray '-'");
                    continue;
                case ':': advance(c); push(Tok::Colon, ":"); continue;
                case '.': advance(c); push(Tok::Dot, "."); continue;
                case '(': advance(c); push(Tok::LParen, "("); continue;
                case ')': advance(c); push(Tok::RParen, ")"); continue;
                case ',': advance(c); push(Tok::Comma, ","); continue;
                case '[': advance(c); push(Tok::LBracket, "["); continue;
                case ']': advance(c); push(Tok::RBracket, "]"); continue;
                case '{': advance(c); push(Tok::LBrace, "{"); continue;
                case '}': advance(c); push(Tok::RBrace, "}"); continue;
                case '=': advance(c); push(Tok::Equal, "="); continue;
                case '*': advance(c); push(Tok::Star, "*"); continue;
                case '!': advance(c); push(Tok::Bang, "!"); continue;
                default:
                    fail(l, co, std::string("unexpected character '") + c + "'");
            }
        }
        out.push_back(Token{Tok::End, "", line, col});
        return out;
    }
};

// Keywords that never act as variable or definition names in term position.
bool is_term_keyword(const std::string& id) {
    return id == "if" || id == "then" || id == "else" || id == "rec" || id == "true" ||
           id == "false" || id == "empty" || id == "state" || id == "join" || id == "fst" ||
           id == "snd" || id == "S" || id == "X" || id == "Phi" || id == "Add" || id == "chi" ||
           id == "phi" || id == "add" || id == "forall" || id == "exists";
}

struct Parser {
    std::vector<Token> toks;
    std::size_t at = 0;
    const DefEnv* env;
    std::optional<StateId> ambient;
    std::vector<std::string> bound;  // innermost last
    bool free_idents_are_vars = false;

    Parser(const std::string& text, const DefEnv* env, std::optional<StateId> ambient)
        : toks(Lexer(text).run()), env(env), ambient(ambient) {}

    const Token& peek() const { return toks[at]; }
    Token next() { return toks[at++]; }

    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = peek();
        throw ParseError({Diagnostic{Severity::Error, t.line, t.col,
                                     msg + (t.tok == Tok::End ? " (at end of input)"
                                                              : " (at `" + t.text + "`)")}});
    }

    Token expect(Tok tok, const std::string& what) {
        if (peek().tok != tok) fail("expected " + what);
        return next();
    }

    bool accept(Tok tok) {
        if (peek().tok == tok) { ++at; return true; }
        return false;
    }

    bool accept_ident(const std::string& id) {
        if (peek().tok == Tok::Ident && peek().text == id) { ++at; return true; }
        return false;
    }

    std::string expect_name(const std::string& what) {
        if (peek().tok != Tok::Ident || is_term_keyword(peek().text))
            fail("expected " + what);
        return next().text;
    }

    bool is_bound(const std::string& name) const {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it)
            if (*it == name) return true;
        return false;
    }

    // ---- types --------------------------------------------------------

    TypeExpr parse_type() {
        TypeExpr l = parse_type_prod();
        if (accept(Tok::Arrow)) return TypeExpr::arrow(l, parse_type());
        return l;
    }

    TypeExpr parse_type_prod() {
        TypeExpr l = parse_type_atom();
        if (accept(Tok::Star)) return TypeExpr::prod(l, parse_type_prod());
        return l;
    }

    TypeExpr parse_type_atom() {
        if (accept(Tok::LParen)) {
            TypeExpr t = parse_type();
            expect(Tok::RParen, "')'");
            return t;
        }
        if (peek().tok == Tok::Ident) {
            std::string id = next().text;
            if (id == "N") return TypeExpr::nat();
            if (id == "Bool") return TypeExpr::boolean();
            if (id == "S") return TypeExpr::state();
            fail("unknown type `" + id + "`");
        }
        fail("expected a type");
    }

    // ---- terms --------------------------------------------------------

    Term parse_term() {
        if (peek().tok == Tok::Lambda) {
            next();
            std::string x = expect_name("a variable name after '\\'");
            expect(Tok::Colon, "':' after the bound variable");
            TypeExpr ty = parse_type();
            expect(Tok::Dot, "'.' after the binder");
            bound.push_back(x);
            Term body = parse_term();
            bound.pop_back();
            return Term::lam(std::move(x), std::move(ty), std::move(body));
        }
        if (peek().tok == Tok::Ident && peek().text == "if") {
            next();
            Term c = parse_term();
            if (!accept_ident("then")) fail("expected 'then'");
            Term a = parse_term();
            if (!accept_ident("else")) fail("expected 'else'");
            Term b = parse_term();
            return Term::if_(std::move(c), std::move(a), std::move(b));
        }
        return parse_app();
    }

    bool starts_atom() const {
        switch (peek().tok) {
            case Tok::LParen:
            case Tok::Number:
                return true;
            case Tok::Ident:
                return peek().text != "then" && peek().text != "else" && peek().text != "if";
            default:
                return false;
        }
    }

    Term parse_app() {
        Term t = parse_atom();
        while (starts_atom()) t = Term::app(std::move(t), parse_atom());
        return t;
    }

    PredName parse_bracket_pred() {
        expect(Tok::LBracket, "'['");
        std::string p = expect_name("a predicate name");
        expect(Tok::RBracket, "']'");
        return p;
    }

    Term parse_atom() {
        const Token& t = peek();
        if (t.tok == Tok::LParen) {
            next();
            Term a = parse_term();
            if (accept(Tok::Comma)) {
                Term b = parse_term();
                expect(Tok::RParen, "')'");
                return Term::pair(std::move(a), std::move(b));
            }
            expect(Tok::RParen, "')'");
            return a;
        }
        if (t.tok == Tok::Number) {
            std::uint64_t k = std::stoull(next().text);
            return Term::numeral(k);
        }
        if (t.tok != Tok::Ident) fail("expected a term");
        std::string id = next().text;
        if (id == "S") return Term::succ(parse_atom());
        if (id == "fst") return Term::proj0(parse_atom());
        if (id == "snd") return Term::proj1(parse_atom());
        if (id == "true") return Term::true_();
        if (id == "false") return Term::false_();
        if (id == "empty") return Term::state_const(kEmptyState);
        if (id == "rec") {
            expect(Tok::LParen, "'(' after rec");
            Term base = parse_term();
            expect(Tok::Comma, "','");
            Term step = parse_term();
            expect(Tok::Comma, "','");
            Term n = parse_term();
            expect(Tok::RParen, "')'");
            return Term::rec(std::move(base), std::move(step), std::move(n));
        }
        if (id == "join") {
            expect(Tok::LParen, "'(' after join");
            Term a = parse_term();
            expect(Tok::Comma, "','");
            Term b = parse_term();
            expect(Tok::RParen, "')'");
            return Term::join(std::move(a), std::move(b));
        }
        if (id == "state") return Term::state_const(parse_state_literal());
        if (id == "X") return Term::oracle_x(parse_bracket_pred());
        if (id == "Phi") return Term::skolem_phi(parse_bracket_pred());
        if (id == "Add") return Term::add_class(parse_bracket_pred());
        if (id == "chi") return Term::chi_approx(parse_bracket_pred());
        if (id == "phi") return Term::phi_approx(parse_bracket_pred());
        if (id == "add") return Term::add_approx(parse_bracket_pred());
        if (is_bound(id)) return Term::var(id);
        if (id == "s") {
            if (ambient) return Term::state_const(*ambient);
            if (!(env && env->bound(id)))
                fail("the state keyword `s` needs an ambient state (--state)");
        }
        if (free_idents_are_vars && !(env && env->bound(id))) return Term::var(id);
        return Term::def_ref(id);
    }

    // parenthesized single term (delimiter form used by proofs)
    Term parse_term_paren() {
        expect(Tok::LParen, "'('");
        Term t = parse_term();
        expect(Tok::RParen, "')'");
        return t;
    }

    std::vector<Term> parse_term_list_paren() {
        expect(Tok::LParen, "'('");
        std::vector<Term> ts;
        if (peek().tok != Tok::RParen) {
            ts.push_back(parse_term());
            while (accept(Tok::Comma)) ts.push_back(parse_term());
        }
        expect(Tok::RParen, "')'");
        return ts;
    }

    // ---- states -------------------------------------------------------

    // after the 'state' keyword: '{' P(args)=m, ... '}'
    StateId parse_state_literal() {
        expect(Tok::LBrace, "'{' after state");
        std::vector<Atom> atoms;
        if (peek().tok != Tok::RBrace) {
            do {
                const Token& pt = peek();
                std::string p = expect_name("a predicate name");
                std::vector<std::uint64_t> args;
                expect(Tok::LParen, "'('");
                if (peek().tok != Tok::RParen) {
                    args.push_back(std::stoull(expect(Tok::Number, "a numeral").text));
                    while (accept(Tok::Comma))
                        args.push_back(std::stoull(expect(Tok::Number, "a numeral").text));
                }
                expect(Tok::RParen, "')'");
                expect(Tok::Equal, "'='");
                std::uint64_t m = std::stoull(expect(Tok::Number, "a witness numeral").text);
                if (!env)
                    throw ParseError({Diagnostic{Severity::Error, pt.line, pt.col,
                                                 "state literals need a definition environment"}});
                try {
                    atoms.push_back(mk_atom(*env, p, args, m));
                } catch (const AtomError& e) {
                    throw ParseError(
                        {Diagnostic{Severity::Error, pt.line, pt.col, e.what()}});
                }
            } while (accept(Tok::Comma));
        }
        const Token& bt = peek();
        expect(Tok::RBrace, "'}'");
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j)
                if (!atoms_consistent(atoms[i], atoms[j]))
                    throw ParseError({Diagnostic{
                        Severity::Error, bt.line, bt.col,
                        "inconsistent atoms " + to_string(atoms[i]) + " and " +
                            to_string(atoms[j])}});
        return StateStore::instance().intern(std::move(atoms));
    }

    // ---- formulas -----------------------------------------------------

    Formula parse_formula() {
        if (accept_ident("forall")) {
            std::string x = expect_name("a variable after forall");
            expect(Tok::Dot, "'.'");
            bound.push_back(x);
            Formula body = parse_formula();
            bound.pop_back();
            return Formula::forall(std::move(x), std::move(body));
        }
        if (accept_ident("exists")) {
            std::string x = expect_name("a variable after exists");
            expect(Tok::Dot, "'.'");
            bound.push_back(x);
            Formula body = parse_formula();
            bound.pop_back();
            return Formula::exists(std::move(x), std::move(body));
        }
        Formula l = parse_formula_or();
        if (accept(Tok::Arrow)) return Formula::imp(std::move(l), parse_formula());
        return l;
    }

    Formula parse_formula_or() {
        Formula l = parse_formula_and();
        while (peek().tok == Tok::Or) {
            next();
            l = Formula::disj(std::move(l), parse_formula_and());
        }
        return l;
    }

    Formula parse_formula_and() {
        Formula l = parse_formula_atom();
        while (peek().tok == Tok::And) {
            next();
            l = Formula::conj(std::move(l), parse_formula_atom());
        }
        return l;
    }

    Formula parse_formula_atom() {
        if (accept(Tok::LParen)) {
            Formula f = parse_formula();
            expect(Tok::RParen, "')'");
            return f;
        }
        bool negated = accept(Tok::Bang);
        if (peek().tok != Tok::Ident) fail("expected a formula");
        if (!negated) {
            if (peek().text == "false") { next(); return falsum(); }
            if (peek().text == "true") { next(); return Formula::atomic(Term::true_(), {}); }
            if (peek().text == "forall" || peek().text == "exists") {
                // quantifier in atom position (after a connective)
                return parse_formula();
            }
        }
        std::string p = expect_name("a predicate name");
        bool saved = free_idents_are_vars;
        free_idents_are_vars = true;
        std::vector<Term> args = parse_term_list_paren();
        free_idents_are_vars = saved;
        std::size_t arity = args.size();
        if (negated) return negated_atom(p, arity, std::move(args));
        return Formula::atomic(Term::def_ref(p), std::move(args));
    }

    // ---- proofs -------------------------------------------------------

    ProofNode parse_sub() {
        expect(Tok::LBrace, "'{' opening a subproof");
        ProofNode p = parse_proof_rule();
        expect(Tok::RBrace, "'}' closing a subproof");
        return p;
    }

    Formula parse_formula_arg() {
        expect(Tok::LBracket, "'[' opening a formula");
        bool saved = free_idents_are_vars;
        free_idents_are_vars = true;
        Formula f = parse_formula();
        free_idents_are_vars = saved;
        expect(Tok::RBracket, "']' closing a formula");
        return f;
    }

    Term parse_proof_term() {
        bool saved = free_idents_are_vars;
        free_idents_are_vars = true;
        Term t = parse_term_paren();
        free_idents_are_vars = saved;
        return t;
    }

    ProofNode parse_proof_rule() {
        std::string kw = expect_name("a proof rule");
        if (kw == "assume") {
            std::string label = expect_name("an assumption label");
            return ProofNode::assume(std::move(label), parse_formula_arg());
        }
        if (kw == "and_i") {
            ProofNode p = parse_sub();
            return ProofNode::and_i(std::move(p), parse_sub());
        }
        if (kw == "and_e0") return ProofNode::and_e0(parse_sub());
        if (kw == "and_e1") return ProofNode::and_e1(parse_sub());
        if (kw == "imp_i") {
            std::string label = expect_name("an assumption label");
            Formula a = parse_formula_arg();
            return ProofNode::imp_i(std::move(label), std::move(a), parse_sub());
        }
        if (kw == "imp_e") {
            ProofNode p = parse_sub();
            return ProofNode::imp_e(std::move(p), parse_sub());
        }
        if (kw == "or_i0") {
            ProofNode p = parse_sub();
            return ProofNode::or_i0(std::move(p), parse_formula_arg());
        }
        if (kw == "or_i1") {
            Formula a = parse_formula_arg();
            return ProofNode::or_i1(std::move(a), parse_sub());
        }
        if (kw == "or_e") {
            ProofNode p = parse_sub();
            std::string l1 = expect_name("a label for the left case");
            ProofNode q1 = parse_sub();
            std::string l2 = expect_name("a label for the right case");
            ProofNode q2 = parse_sub();
            return ProofNode::or_e(std::move(p), std::move(l1), std::move(q1), std::move(l2),
                                   std::move(q2));
        }
        if (kw == "forall_i") {
            std::string var = expect_name("a variable");
            return ProofNode::forall_i(std::move(var), parse_sub());
        }
        if (kw == "forall_e") {
            ProofNode p = parse_sub();
            return ProofNode::forall_e(std::move(p), parse_proof_term());
        }
        if (kw == "exists_i") {
            Term t = parse_proof_term();
            Formula f = parse_formula_arg();
            return ProofNode::exists_i(std::move(t), std::move(f), parse_sub());
        }
        if (kw == "exists_e") {
            ProofNode p = parse_sub();
            std::string var = expect_name("an eigenvariable");
            std::string label = expect_name("an assumption label");
            return ProofNode::exists_e(std::move(p), std::move(var), std::move(label),
                                       parse_sub());
        }
        if (kw == "ind") {
            ProofNode base = parse_sub();
            return ProofNode::induction(std::move(base), parse_sub());
        }
        if (kw == "post") {
            std::string rule = expect_name("a rule name");
            Formula c = parse_formula_arg();
            std::vector<ProofNode> premises;
            while (peek().tok == Tok::LBrace) premises.push_back(parse_sub());
            return ProofNode::post(std::move(rule), std::move(premises), std::move(c));
        }
        if (kw == "axiom") return ProofNode::atomic_axiom(parse_formula_arg());
        if (kw == "em1") return ProofNode::em1(expect_name("a predicate name"));
        if (kw == "chi_ax") {
            std::string p = expect_name("a predicate name");
            bool saved = free_idents_are_vars;
            free_idents_are_vars = true;
            std::vector<Term> args = parse_term_list_paren();
            Term t = parse_term_paren();
            free_idents_are_vars = saved;
            return ProofNode::chi_axiom(std::move(p), std::move(args), std::move(t));
        }
        if (kw == "phi_ax") {
            std::string p = expect_name("a predicate name");
            bool saved = free_idents_are_vars;
            free_idents_are_vars = true;
            std::vector<Term> args = parse_term_list_paren();
            free_idents_are_vars = saved;
            return ProofNode::phi_axiom(std::move(p), std::move(args));
        }
        fail("unknown proof rule `" + kw + "`");
    }

    void expect_end() {
        if (peek().tok != Tok::End) fail("trailing input");
    }
};

}  // namespace

Term parse_term(const DefEnv& env, const std::string& text, std::optional<StateId> ambient) {
    Parser p(text, &env, ambient);
    Term t = p.parse_term();
    p.expect_end();
    return t;
}

Formula parse_formula(const DefEnv& env, const std::string& text,
                      std::optional<StateId> ambient) {
    Parser p(text, &env, ambient);
    p.free_idents_are_vars = true;
    Formula f = p.parse_formula();
    p.expect_end();
    return f;
}

ProofNode parse_proof(const DefEnv& env, const std::string& text,
                      std::optional<StateId> ambient) {
    Parser p(text, &env, ambient);
    ProofNode pr = p.parse_proof_rule();
    p.expect_end();
    return pr;
}

StateId parse_state(const DefEnv& env, const std::string& text) {
    Parser p(text, &env, std::nullopt);
    if (p.accept_ident("empty")) {
        p.expect_end();
        return kEmptyState;
    }
    if (!p.accept_ident("state")) p.fail("expected `empty` or `state{...}`");
    StateId s = p.parse_state_literal();
    p.expect_end();
    return s;
}

void parse_defs(DefEnv& env, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped.resize(hash);
        bool blank = true;
        for (char c : stripped)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) continue;

        try {
            Parser p(stripped, &env, std::nullopt);
            std::string name = p.expect_name("a definition name");
            p.expect(Tok::Colon, "':' after the definition name");
            TypeExpr ty = p.parse_type();
            p.expect(Tok::Equal, "'=' before the definition body");
            Term body = p.parse_term();
            p.expect_end();
            env.define(name, ty, body);
        } catch (const TypeError& e) {
            throw ParseError({Diagnostic{Severity::Error, lineno, 1, e.what()}});
        } catch (ParseError& e) {
            for (Diagnostic& d : e.diagnostics) d.line = lineno;
            throw ParseError(e.diagnostics);
        }
    }
}

}  // namespace ilr
