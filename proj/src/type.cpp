#include "ilr/type.hpp"

namespace ilr {

TypeExpr TypeExpr::nat() {
    static const auto n = std::make_shared<const Node>(Node{TypeKind::Nat, nullptr, nullptr});
    return TypeExpr(n);
}

TypeExpr TypeExpr::boolean() {
    static const auto n = std::make_shared<const Node>(Node{TypeKind::Bool, nullptr, nullptr});
    return TypeExpr(n);
}

TypeExpr TypeExpr::state() {
    static const auto n = std::make_shared<const Node>(Node{TypeKind::State, nullptr, nullptr});
    return TypeExpr(n);
}

TypeExpr TypeExpr::prod(const TypeExpr& l, const TypeExpr& r) {
    return TypeExpr(std::make_shared<const Node>(Node{TypeKind::Prod, l.node_, r.node_}));
}

TypeExpr TypeExpr::arrow(const TypeExpr& dom, const TypeExpr& cod) {
    return TypeExpr(std::make_shared<const Node>(Node{TypeKind::Arrow, dom.node_, cod.node_}));
}

namespace {

// Precedence: atoms(2) > products(1) > arrows(0); both binary forms
// associate to the right.
void render(const TypeExpr& t, int min_prec, std::string& out) {
    switch (t.kind()) {
        case TypeKind::Nat: out += "N"; return;
        case TypeKind::Bool: out += "Bool"; return;
        case TypeKind::State: out += "S"; return;
        case TypeKind::Prod: {
            bool paren = min_prec > 1;
            if (paren) out += "(";
            render(t.left(), 2, out);
            out += " * ";
            render(t.right(), 1, out);
            if (paren) out += ")";
            return;
        }
        case TypeKind::Arrow: {
            bool paren = min_prec > 0;
            if (paren) out += "(";
            render(t.left(), 1, out);
            out += " -> ";
            render(t.right(), 0, out);
            if (paren) out += ")";
            return;
        }
    }
}

}  // namespace

std::string to_string(const TypeExpr& t) {
    std::string out;
    render(t, 0, out);
    return out;
}

}  // namespace ilr
