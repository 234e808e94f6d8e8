#include "bnmodes/network.hpp"

#include <algorithm>
#include <optional>

#include "bnmodes/error.hpp"

namespace bnmodes {

namespace {

using Column = std::vector<Code>;  // bit x holds the value on configuration x

std::size_t column_words(unsigned n) { return std::max<std::size_t>(1, (std::size_t{1} << n) / 64); }

Code universe_word_mask(unsigned n) {
    return n >= 6 ? ~Code{0} : (Code{1} << (Code{1} << n)) - 1;
}

Column variable_column(unsigned n, unsigned i) {
    Column col(column_words(n), 0);
    const Code bit = automaton_bit(n, i);
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t x = 0; x < count; ++x) {
        if (x & bit) col[x >> 6] |= Code{1} << (x & 63);
    }
    return col;
}

// Evaluates an expression on all 2^n configurations at once, one machine
// word per 64 configurations.
Column compile(const Expr& e, unsigned n, const std::vector<Column>& vars) {
    const Code valid = universe_word_mask(n);
    switch (e.kind()) {
    case Expr::Kind::Const: return Column(column_words(n), e.value() ? valid : Code{0});
    case Expr::Kind::Var: return vars[e.index() - 1];
    case Expr::Kind::Not: {
        Column c = compile(e.child(), n, vars);
        for (Code& w : c) w = ~w & valid;
        return c;
    }
    case Expr::Kind::And:
    case Expr::Kind::Or: {
        Column a = compile(e.lhs(), n, vars);
        const Column b = compile(e.rhs(), n, vars);
        const bool is_and = e.kind() == Expr::Kind::And;
        for (std::size_t w = 0; w < a.size(); ++w) a[w] = is_and ? (a[w] & b[w]) : (a[w] | b[w]);
        return a;
    }
    }
    return {};
}

void validate(const ParsedModel& model) {
    if (model.names.empty()) throw InvalidArgument("a Boolean network needs at least one automaton");
    if (model.names.size() != model.functions.size()) {
        throw InvalidArgument("model has " + std::to_string(model.names.size()) + " names but " +
                              std::to_string(model.functions.size()) + " functions");
    }
    if (model.names.size() > kMaxConfigurationDimension) {
        throw DimensionError("networks are limited to " +
                             std::to_string(kMaxConfigurationDimension) + " automata");
    }
    std::vector<std::string> sorted = model.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("automaton names must be unique");
    }
    for (const Expr& f : model.functions) {
        if (f.max_index() > model.names.size()) {
            throw InvalidArgument("local function references automaton " +
                                  std::to_string(f.max_index()) + " beyond dimension");
        }
    }
}

} // namespace

BooleanNetwork::BooleanNetwork(ParsedModel model, unsigned table_cap)
    : n_(model.dimension()), model_(std::move(model)) {
    validate(model_);
    if (n_ > table_cap || n_ > kMaxSetDimension) return;

    std::vector<Column> vars;
    vars.reserve(n_);
    for (unsigned i = 1; i <= n_; ++i) vars.push_back(variable_column(n_, i));

    const std::size_t count = std::size_t{1} << n_;
    images_.assign(count, 0);
    for (unsigned i = 1; i <= n_; ++i) {
        const Column col = compile(model_.functions[i - 1], n_, vars);
        const Code bit = automaton_bit(n_, i);
        for (std::size_t x = 0; x < count; ++x) {
            if ((col[x >> 6] >> (x & 63)) & 1u) images_[x] |= bit;
        }
    }
}

BooleanNetwork BooleanNetwork::parse(std::string_view text, unsigned table_cap) {
    return BooleanNetwork(parse_model(text), table_cap);
}

BooleanNetwork BooleanNetwork::from_images(unsigned n, std::span<const Code> images,
                                           std::vector<std::string> names) {
    if (n == 0 || n > kMaxSetDimension) throw DimensionError("unsupported dimension");
    if (images.size() != (std::size_t{1} << n)) {
        throw DimensionError("expected " + std::to_string(std::size_t{1} << n) + " images");
    }
    if (names.empty()) {
        for (unsigned i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    if (names.size() != n) throw DimensionError("name count does not match dimension");

    ParsedModel model;
    model.names = std::move(names);
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Code> ones;
        for (Code x = 0; x < images.size(); ++x) {
            if ((images[x] & ~full_mask(n)) != 0) throw DimensionError("image out of range");
            if (images[x] & automaton_bit(n, i)) ones.push_back(x);
        }
        if (ones.empty() || ones.size() == images.size()) {
            model.functions.push_back(Expr::constant(!ones.empty()));
            continue;
        }
        std::optional<Expr> dnf;
        for (Code x : ones) {
            std::optional<Expr> term;
            for (unsigned j = 1; j <= n; ++j) {
                Expr lit = Expr::variable(j);
                if (!(x & automaton_bit(n, j))) lit = Expr::negation(std::move(lit));
                term = term ? Expr::conjunction(std::move(*term), std::move(lit)) : std::move(lit);
            }
            dnf = dnf ? Expr::disjunction(std::move(*dnf), std::move(*term)) : std::move(*term);
        }
        model.functions.push_back(std::move(*dnf));
    }
    BooleanNetwork net(std::move(model), n);
    return net;
}

const Expr& BooleanNetwork::function(unsigned i) const {
    if (i < 1 || i > n_) throw InvalidArgument("automaton index " + std::to_string(i) + " out of range");
    return model_.functions[i - 1];
}

Code BooleanNetwork::evaluate(Code x) const noexcept {
    Code y = 0;
    for (unsigned i = 1; i <= n_; ++i) {
        if (eval(model_.functions[i - 1], x, n_)) y |= automaton_bit(n_, i);
    }
    return y;
}

Configuration BooleanNetwork::apply(Configuration x) const {
    if (x.dimension() != n_) {
        throw DimensionError("configuration of dimension " + std::to_string(x.dimension()) +
                             " applied to a network of dimension " + std::to_string(n_));
    }
    return Configuration(n_, image(x.code()));
}

bool BooleanNetwork::local(unsigned i, Configuration x) const {
    if (i < 1 || i > n_) throw InvalidArgument("automaton index " + std::to_string(i) + " out of range");
    if (x.dimension() != n_) throw DimensionError("configuration dimension mismatch");
    return local_value(i, x.code());
}

unsigned BooleanNetwork::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < model_.names.size(); ++k) {
        if (model_.names[k] == name) return static_cast<unsigned>(k + 1);
    }
    throw InvalidArgument("unknown automaton '" + std::string(name) + "'");
}

} // namespace bnmodes
