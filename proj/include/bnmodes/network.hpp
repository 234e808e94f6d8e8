#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnmodes/config.hpp"
#include "bnmodes/expr.hpp"

namespace bnmodes {

// Caps for operations that materialize all 2^n configurations.
struct Limits {
    unsigned whole_space = 20;  // graph construction, interval, exhaustive analyses
    unsigned most_permissive = 12;  // 2^n subsets W per singleton on top of 2^n states
    unsigned truth_table = 20;  // compiled global map
};

// A Boolean network f: B^n -> B^n with named automata. Immutable once built;
// f is compiled into a table of 2^n images whenever n is within the
// truth-table cap, otherwise evaluated from the expressions.
class BooleanNetwork {
public:
    explicit BooleanNetwork(ParsedModel model, unsigned table_cap = Limits{}.truth_table);

    static BooleanNetwork parse(std::string_view text, unsigned table_cap = Limits{}.truth_table);
    // Network given by the image of every configuration; local functions are
    // rebuilt as disjunctions of minterms. Names default to x1..xn.
    static BooleanNetwork from_images(unsigned n, std::span<const Code> images,
                                      std::vector<std::string> names = {});

    unsigned dimension() const noexcept { return n_; }
    const std::vector<std::string>& names() const noexcept { return model_.names; }
    const ParsedModel& model() const noexcept { return model_; }
    const Expr& function(unsigned i) const;
    bool has_table() const noexcept { return !images_.empty(); }

    // f(x) on a raw code; no validation.
    Code image(Code x) const noexcept {
        return has_table() ? images_[x] : evaluate(x);
    }
    // f_i(x) on a raw code; no validation.
    bool local_value(unsigned i, Code x) const noexcept {
        return (image(x) & automaton_bit(n_, i)) != 0;
    }

    Configuration apply(Configuration x) const;
    bool local(unsigned i, Configuration x) const;

    // 1-based index of a name; throws on unknown names.
    unsigned index_of(std::string_view name) const;

private:
    Code evaluate(Code x) const noexcept;

    unsigned n_ = 0;
    ParsedModel model_;
    std::vector<Code> images_;
};

} // namespace bnmodes
