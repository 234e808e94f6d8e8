#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnmodes/config.hpp"

namespace bnmodes {

// Immutable Boolean expression tree over automaton variables. Children are
// shared, so copies are cheap and values can be handed across threads.
class Expr {
public:
    enum class Kind { Const, Var, Not, And, Or };

    static Expr constant(bool value);
    // 1-based automaton index.
    static Expr variable(unsigned index);
    static Expr negation(Expr child);
    static Expr conjunction(Expr lhs, Expr rhs);
    static Expr disjunction(Expr lhs, Expr rhs);

    Kind kind() const noexcept { return node_->kind; }
    bool value() const noexcept { return node_->value; }
    unsigned index() const noexcept { return node_->index; }
    const Expr& child() const { return *node_->lhs; }
    const Expr& lhs() const { return *node_->lhs; }
    const Expr& rhs() const { return *node_->rhs; }

    // Largest variable index referenced, 0 when none.
    unsigned max_index() const;
    std::size_t depth() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node {
        Kind kind = Kind::Const;
        bool value = false;
        unsigned index = 0;
        std::shared_ptr<const Expr> lhs;
        std::shared_ptr<const Expr> rhs;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

bool eval(const Expr& expr, Configuration x);
// Fast path on raw codes; the caller guarantees indices fit in n.
bool eval(const Expr& expr, Code x, unsigned n);

// Prints with the fewest parentheses that reparse to the same tree:
// '!' over '&' over '|', both binary operators left-associative.
std::string to_string(const Expr& expr, std::span<const std::string> names);

struct ParsedModel {
    std::vector<std::string> names;
    std::vector<Expr> functions;

    unsigned dimension() const noexcept { return static_cast<unsigned>(names.size()); }
};

// One "name: expression" declaration per line; '#' starts a comment.
ParsedModel parse_model(std::string_view text);
// Parses a single expression against a fixed list of names.
Expr parse_expression(std::string_view text, std::span<const std::string> names);

std::string to_string(const ParsedModel& model);

} // namespace bnmodes
