#pragma once

#include "bnmodes/config.hpp"
#include "bnmodes/network.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

// Smallest hypercube (sub-cube of B^n) containing a non-empty set.
ConfigSet hypercube_closure(const ConfigSet& x);

// ∇(X ∪ {phi_i(x) | x ∈ X, i ∈ W}); X must be non-empty.
ConfigSet widen(const BooleanNetwork& net, const AutomatonSet& w, const ConfigSet& x);

// {x ∈ X | ∀ i ∈ W, ∃ y ∈ X: x_i = f_i(y)}
ConfigSet narrow(const BooleanNetwork& net, const AutomatonSet& w, const ConfigSet& x);

// widen(W, ·)^ω({x}): the smallest hypercube around x closed under updates of W.
ConfigSet widening_fixpoint(const BooleanNetwork& net, const AutomatonSet& w, Configuration x);

// Union over all W ⊆ 1..n of narrow(W, widen(W, ·)^ω(X)), computed per
// singleton of X and unioned.
ConfigSet mp_set(const BooleanNetwork& net, const ConfigSet& x,
                 unsigned cap = Limits{}.most_permissive);

// The same formula applied to X as a whole, without splitting it into
// singletons. Only used to look for divergences from mp_set.
ConfigSet mp_set_whole(const BooleanNetwork& net, const ConfigSet& x,
                       unsigned cap = Limits{}.most_permissive);

SetUpdate mp_update(const BooleanNetwork& net, unsigned cap = Limits{}.most_permissive);

} // namespace bnmodes
