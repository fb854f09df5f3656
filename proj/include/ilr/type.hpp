#pragma once

#include <cassert>
#include <memory>
#include <string>

namespace ilr {

enum class TypeKind { Nat, Bool, State, Prod, Arrow };

/// Simple type of the calculus: N, Bool, S, products and arrows.
/// Immutable, value-semantic; structural equality throughout.
class TypeExpr {
public:
    TypeExpr() : TypeExpr(nat()) {}

    static TypeExpr nat();
    static TypeExpr boolean();
    static TypeExpr state();
    static TypeExpr prod(const TypeExpr& l, const TypeExpr& r);
    static TypeExpr arrow(const TypeExpr& dom, const TypeExpr& cod);

    TypeKind kind() const { return node_->kind; }
    bool is_atomic() const {
        return kind() == TypeKind::Nat || kind() == TypeKind::Bool || kind() == TypeKind::State;
    }

    // Prod: left/right component. Arrow: left = domain, right = codomain.
    TypeExpr left() const { assert(node_->l); return TypeExpr(node_->l); }
    TypeExpr right() const { assert(node_->r); return TypeExpr(node_->r); }

    friend bool operator==(const TypeExpr& a, const TypeExpr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        if (a.kind() == TypeKind::Prod || a.kind() == TypeKind::Arrow)
            return a.left() == b.left() && a.right() == b.right();
        return true;
    }
    friend bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }

private:
    struct Node {
        TypeKind kind;
        std::shared_ptr<const Node> l, r;
    };
    explicit TypeExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const TypeExpr& t);

}  // namespace ilr
