#pragma once

#include <unordered_map>

#include "bnmodes/config.hpp"
#include "bnmodes/network.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

// Interval dynamics. A pending change of automaton i is registered ("held")
// while the other automata keep updating against the old value of i; the
// change is committed once the held-set evaluation reaches its fixed point.
//
//   psi(L, X)       = X ∪ { commit(L, i, x) | x ∈ X, i ∉ L, f_i(x) ≠ x_i }
//   commit(L, i, x) = { flip_i(y) | y ∈ psi(L ∪ {i}, ·)^ω({x}) }
//
// The guard f_i(x) ≠ x_i is evaluated at the configuration where holding
// begins. The interval update itself is psi(∅, ·).
//
// Results are memoized per (L, x) and (L, i, x); an engine is not thread-safe,
// use one per thread.
class IntervalEngine {
public:
    explicit IntervalEngine(const BooleanNetwork& net);

    ConfigSet psi(const AutomatonSet& held, const ConfigSet& x);
    ConfigSet commit(const AutomatonSet& held, unsigned i, Configuration x);
    ConfigSet interval_set(const ConfigSet& x) { return psi(AutomatonSet::none(net_.dimension()), x); }

    // Deepest held set seen so far; never exceeds n.
    unsigned max_depth() const noexcept { return max_depth_; }

private:
    const ConfigSet& psi_single(Code held, Code x);
    const ConfigSet& commit_raw(Code held, unsigned i, Code x);
    ConfigSet psi_raw(Code held, const ConfigSet& x);

    struct Key {
        Code held;
        Code x;
        unsigned i;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<Code>{}(k.held * 0x9E3779B97F4A7C15ull ^ (k.x << 7) ^ k.i);
        }
    };

    const BooleanNetwork& net_;
    std::unordered_map<Key, ConfigSet, KeyHash> psi_memo_;
    std::unordered_map<Key, ConfigSet, KeyHash> commit_memo_;
    unsigned max_depth_ = 0;
};

ConfigSet psi(const BooleanNetwork& net, const AutomatonSet& held, const ConfigSet& x);
ConfigSet interval_commit(const BooleanNetwork& net, const AutomatonSet& held, unsigned i,
                          Configuration x);
ConfigSet interval_set(const BooleanNetwork& net, const ConfigSet& x);

// Phi_I as a set update (a fresh engine per singleton).
SetUpdate interval_update(const BooleanNetwork& net);

} // namespace bnmodes
