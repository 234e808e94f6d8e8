#include "bnmodes/expr.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "bnmodes/error.hpp"

namespace bnmodes {

Expr Expr::constant(bool value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable(unsigned index) {
    if (index == 0) throw InvalidArgument("variable indices are 1-based");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->index = index;
    return Expr(std::move(n));
}

Expr Expr::negation(Expr child) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->lhs = std::make_shared<const Expr>(std::move(child));
    return Expr(std::move(n));
}

Expr Expr::conjunction(Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->lhs = std::make_shared<const Expr>(std::move(lhs));
    n->rhs = std::make_shared<const Expr>(std::move(rhs));
    return Expr(std::move(n));
}

Expr Expr::disjunction(Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->lhs = std::make_shared<const Expr>(std::move(lhs));
    n->rhs = std::make_shared<const Expr>(std::move(rhs));
    return Expr(std::move(n));
}

unsigned Expr::max_index() const {
    switch (kind()) {
    case Kind::Const: return 0;
    case Kind::Var: return index();
    case Kind::Not: return child().max_index();
    default: return std::max(lhs().max_index(), rhs().max_index());
    }
}

std::size_t Expr::depth() const {
    switch (kind()) {
    case Kind::Const:
    case Kind::Var: return 1;
    case Kind::Not: return 1 + child().depth();
    default: return 1 + std::max(lhs().depth(), rhs().depth());
    }
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Expr::Kind::Const: return a.value() == b.value();
    case Expr::Kind::Var: return a.index() == b.index();
    case Expr::Kind::Not: return a.child() == b.child();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

bool eval(const Expr& expr, Code x, unsigned n) {
    switch (expr.kind()) {
    case Expr::Kind::Const: return expr.value();
    case Expr::Kind::Var: return (x & automaton_bit(n, expr.index())) != 0;
    case Expr::Kind::Not: return !eval(expr.child(), x, n);
    case Expr::Kind::And: return eval(expr.lhs(), x, n) && eval(expr.rhs(), x, n);
    case Expr::Kind::Or: return eval(expr.lhs(), x, n) || eval(expr.rhs(), x, n);
    }
    return false;
}

bool eval(const Expr& expr, Configuration x) {
    if (expr.max_index() > x.dimension()) {
        throw DimensionError("expression references automaton " +
                             std::to_string(expr.max_index()) + " beyond dimension " +
                             std::to_string(x.dimension()));
    }
    return eval(expr, x.code(), x.dimension());
}

namespace {

// Binding strength: Or=1, And=2, Not/atoms=3.
int precedence(const Expr& e) {
    switch (e.kind()) {
    case Expr::Kind::Or: return 1;
    case Expr::Kind::And: return 2;
    default: return 3;
    }
}

void print(const Expr& e, std::span<const std::string> names, std::string& out) {
    auto operand = [&](const Expr& sub, bool parenthesize) {
        if (parenthesize) out += '(';
        print(sub, names, out);
        if (parenthesize) out += ')';
    };
    switch (e.kind()) {
    case Expr::Kind::Const: out += e.value() ? '1' : '0'; break;
    case Expr::Kind::Var:
        if (e.index() <= names.size()) {
            out += names[e.index() - 1];
        } else {
            out += "x" + std::to_string(e.index());
        }
        break;
    case Expr::Kind::Not:
        out += '!';
        operand(e.child(), precedence(e.child()) < 3);
        break;
    case Expr::Kind::And:
    case Expr::Kind::Or: {
        const int p = precedence(e);
        // Left-associative: an equal-precedence left operand needs no parentheses.
        operand(e.lhs(), precedence(e.lhs()) < p);
        out += e.kind() == Expr::Kind::And ? " & " : " | ";
        operand(e.rhs(), precedence(e.rhs()) <= p);
        break;
    }
    }
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Recursive-descent parser for the body of one declaration. All names are
// collected before any body is parsed, so forward references resolve.
class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no, std::size_t offset,
               const std::unordered_map<std::string, unsigned>& index_of)
        : line_(line), line_no_(line_no), pos_(offset), index_of_(index_of) {}

    Expr parse_full() {
        Expr e = disjunction();
        skip_space();
        if (pos_ < line_.size()) fail("unexpected '" + std::string(1, line_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("syntax error: " + what, line_no_, pos_ + 1);
    }

    void skip_space() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < line_.size() && line_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr disjunction() {
        Expr e = conjunction();
        while (accept('|')) e = Expr::disjunction(std::move(e), conjunction());
        return e;
    }

    Expr conjunction() {
        Expr e = unary();
        while (accept('&')) e = Expr::conjunction(std::move(e), unary());
        return e;
    }

    Expr unary() {
        if (accept('!')) return Expr::negation(unary());
        return atom();
    }

    Expr atom() {
        skip_space();
        if (pos_ >= line_.size()) fail("expected an expression");
        const char c = line_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = disjunction();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            if (pos_ + 1 < line_.size() && is_ident_char(line_[pos_ + 1])) fail("malformed constant");
            ++pos_;
            return Expr::constant(c == '1');
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < line_.size() && is_ident_char(line_[pos_])) ++pos_;
            std::string name(line_.substr(start, pos_ - start));
            auto it = index_of_.find(name);
            if (it == index_of_.end()) {
                throw ParseError("reference to undeclared name '" + name + "'", line_no_, start + 1);
            }
            return Expr::variable(it->second);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_;
    const std::unordered_map<std::string, unsigned>& index_of_;
};

struct PendingDecl {
    std::size_t line_no;
    std::size_t body_offset;
    std::string line;
};

} // namespace

std::string to_string(const Expr& expr, std::span<const std::string> names) {
    std::string out;
    print(expr, names, out);
    return out;
}

ParsedModel parse_model(std::string_view text) {
    ParsedModel model;
    std::unordered_map<std::string, unsigned> index_of;
    std::vector<PendingDecl> pending;

    // First pass: declarations and their order.
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::size_t pos = 0;
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos < line.size()) {
            if (!is_ident_start(line[pos])) {
                throw ParseError("syntax error: expected an automaton name", line_no, pos + 1);
            }
            const std::size_t name_start = pos;
            while (pos < line.size() && is_ident_char(line[pos])) ++pos;
            std::string name = line.substr(name_start, pos - name_start);
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
            if (pos >= line.size() || line[pos] != ':') {
                throw ParseError("syntax error: expected ':' after '" + name + "'", line_no, pos + 1);
            }
            if (index_of.contains(name)) {
                throw ParseError("duplicate automaton name '" + name + "'", line_no, name_start + 1);
            }
            model.names.push_back(name);
            index_of.emplace(name, static_cast<unsigned>(model.names.size()));
            pending.push_back({line_no, pos + 1, std::move(line)});
        }
        if (end == text.size()) break;
        start = end + 1;
    }

    if (model.names.empty()) throw ParseError("empty model: no automaton declared", 0, 0);

    // Second pass: bodies, with every name now known.
    for (const PendingDecl& decl : pending) {
        LineParser parser(decl.line, decl.line_no, decl.body_offset, index_of);
        model.functions.push_back(parser.parse_full());
    }
    return model;
}

Expr parse_expression(std::string_view text, std::span<const std::string> names) {
    std::unordered_map<std::string, unsigned> index_of;
    for (std::size_t k = 0; k < names.size(); ++k) {
        index_of.emplace(names[k], static_cast<unsigned>(k + 1));
    }
    LineParser parser(text, 0, 0, index_of);
    return parser.parse_full();
}

std::string to_string(const ParsedModel& model) {
    std::string out;
    for (std::size_t k = 0; k < model.names.size(); ++k) {
        out += model.names[k] + ": " + to_string(model.functions[k], model.names) + "\n";
    }
    return out;
}

} // namespace bnmodes
