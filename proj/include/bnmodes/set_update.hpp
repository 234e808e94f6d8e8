#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "bnmodes/config.hpp"
#include "bnmodes/deterministic.hpp"
#include "bnmodes/error.hpp"
#include "bnmodes/network.hpp"

namespace bnmodes {

// A set update Phi: 2^(B^n) -> 2^(B^n), given by its value on singletons.
// Applying it to a set is the union over members, so Phi(X) is the union of
// Phi({x}) for x in X by construction.
class SetUpdate {
public:
    // Adds every element of Phi({x}) to `out`. Must be pure.
    using Kernel = std::function<void(Code x, ConfigSet& out)>;

    SetUpdate(unsigned n, Kernel kernel) : n_(n), kernel_(std::move(kernel)) {}

    unsigned dimension() const noexcept { return n_; }

    ConfigSet operator()(const ConfigSet& x) const;
    ConfigSet on(Configuration x) const;
    void successors(Code x, ConfigSet& out) const { kernel_(x, out); }

private:
    unsigned n_;
    Kernel kernel_;
};

// The factories below keep a reference to `net`, which must outlive them.

// Phi_e: all phi_W(x) for non-empty W.
SetUpdate elementary_update(const BooleanNetwork& net);
// Phi_fa: phi_i(x) for single automata i.
SetUpdate fully_async_update(const BooleanNetwork& net);
// {x} -> {step(x)} for a deterministic schedule.
SetUpdate deterministic_update(const BooleanNetwork& net, const Schedule& sched);

ConfigSet phi_e_set(const BooleanNetwork& net, const ConfigSet& x);
ConfigSet phi_fa_set(const BooleanNetwork& net, const ConfigSet& x);

// Pointwise union; the transition relation is the union of both.
SetUpdate superpose(SetUpdate first, SetUpdate second);

template <class Op>
concept SetOperator = std::invocable<const Op&, const ConfigSet&> &&
    std::convertible_to<std::invoke_result_t<const Op&, const ConfigSet&>, ConfigSet>;

template <SetOperator Op>
ConfigSet iterate_k(const Op& op, ConfigSet x, std::size_t k) {
    for (std::size_t step = 0; step < k; ++step) x = op(x);
    return x;
}

// Least fixed point above x of an inflationary operator. Each step checks
// X ⊆ U(X); the chain strictly grows, so it stops within 2^n steps.
template <SetOperator Op>
ConfigSet iterate_omega(const Op& op, ConfigSet x) {
    for (;;) {
        ConfigSet next = op(x);
        if (!x.is_subset_of(next)) {
            throw InflationError("iterate_omega: operator is not inflationary on " + x.to_text());
        }
        if (next == x) return x;
        x = std::move(next);
    }
}

// A transition relation over B^n: sorted successor lists per source code.
class TransitionRelation {
public:
    TransitionRelation() = default;
    TransitionRelation(unsigned n, std::vector<std::vector<Code>> successors);

    unsigned dimension() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return successors_.size(); }
    std::size_t edge_count() const noexcept;
    const std::vector<Code>& successors(Code x) const { return successors_[x]; }
    bool contains(Code x, Code y) const;
    bool is_subset_of(const TransitionRelation& other) const;

    TransitionRelation without_loops() const;
    // (source, target) pairs in lexicographic order.
    std::vector<std::pair<Code, Code>> edges() const;

    friend bool operator==(const TransitionRelation&, const TransitionRelation&) = default;

private:
    unsigned n_ = 0;
    std::vector<std::vector<Code>> successors_;
};

// delta(U) = {(x, y) | y in U({x})}. Sources are processed independently,
// split across `threads` workers (0 = hardware concurrency).
TransitionRelation delta(const SetUpdate& update, unsigned cap = Limits{}.whole_space,
                         unsigned threads = 0);

// Same relation built from an explicit edge list.
TransitionRelation relation_from_edges(unsigned n, const std::vector<std::pair<Code, Code>>& edges);

// Forward closure of x under Phi_e, i.e. {y | x ->*_e y}.
ConfigSet elementary_reachable(const BooleanNetwork& net, Code x);

} // namespace bnmodes
