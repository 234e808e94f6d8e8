#include "bnmodes/most_permissive.hpp"

#include "bnmodes/deterministic.hpp"
#include "bnmodes/error.hpp"

namespace bnmodes {

namespace {

// Hypercube with fixed coordinates taken from `base` and the `free` ones
// ranging over both values.
void insert_cube(Code base, Code free, ConfigSet& out) {
    base &= ~free;
    for (Code sub = free;; sub = (sub - 1) & free) {
        out.insert(base | sub);
        if (sub == 0) break;
    }
}

void require_cap(unsigned n, unsigned cap) {
    if (n > cap) {
        throw CapExceeded("dimension " + std::to_string(n) + " exceeds the most-permissive cap " +
                          std::to_string(cap));
    }
}

ConfigSet closure_raw(unsigned n, const ConfigSet& x) {
    Code all_and = full_mask(n);
    Code any_or = 0;
    x.for_each([&](Code c) {
        all_and &= c;
        any_or |= c;
    });
    ConfigSet out(n);
    insert_cube(all_and, all_and ^ any_or, out);
    return out;
}

ConfigSet widen_raw(const BooleanNetwork& net, Code w, const ConfigSet& x) {
    const unsigned n = net.dimension();
    ConfigSet grown = x;
    x.for_each([&](Code c) {
        for (unsigned i = 1; i <= n; ++i) {
            const Code bit = automaton_bit(n, i);
            if (w & bit) grown.insert(phi(net, bit, c));
        }
    });
    return closure_raw(n, grown);
}

ConfigSet narrow_raw(const BooleanNetwork& net, Code w, const ConfigSet& x) {
    const unsigned n = net.dimension();
    // Bit i of can_be_one: some y in X has f_i(y) = 1; of must_be_one: all do.
    Code can_be_one = 0;
    Code must_be_one = full_mask(n);
    x.for_each([&](Code y) {
        const Code fy = net.image(y);
        can_be_one |= fy;
        must_be_one &= fy;
    });
    ConfigSet out(n);
    x.for_each([&](Code c) {
        const bool ones_ok = (c & w & ~can_be_one) == 0;
        const bool zeros_ok = (~c & w & must_be_one) == 0;
        if (ones_ok && zeros_ok) out.insert(c);
    });
    return out;
}

ConfigSet mp_from(const BooleanNetwork& net, const ConfigSet& start) {
    const unsigned n = net.dimension();
    ConfigSet out(n);
    const Code all = full_mask(n);
    for (Code w = 0;; ++w) {
        const ConfigSet widened =
            iterate_omega([&](const ConfigSet& s) { return widen_raw(net, w, s); }, start);
        out |= narrow_raw(net, w, widened);
        if (w == all) break;
    }
    return out;
}

} // namespace

ConfigSet hypercube_closure(const ConfigSet& x) {
    if (x.empty()) throw InvalidArgument("hypercube closure of an empty set");
    return closure_raw(x.dimension(), x);
}

ConfigSet widen(const BooleanNetwork& net, const AutomatonSet& w, const ConfigSet& x) {
    if (w.dimension() != net.dimension() || x.dimension() != net.dimension()) {
        throw DimensionError("widen: dimension mismatch");
    }
    if (x.empty()) throw InvalidArgument("widen of an empty set");
    return widen_raw(net, w.mask(), x);
}

ConfigSet narrow(const BooleanNetwork& net, const AutomatonSet& w, const ConfigSet& x) {
    if (w.dimension() != net.dimension() || x.dimension() != net.dimension()) {
        throw DimensionError("narrow: dimension mismatch");
    }
    return narrow_raw(net, w.mask(), x);
}

ConfigSet widening_fixpoint(const BooleanNetwork& net, const AutomatonSet& w, Configuration x) {
    if (w.dimension() != net.dimension() || x.dimension() != net.dimension()) {
        throw DimensionError("widening: dimension mismatch");
    }
    return iterate_omega([&](const ConfigSet& s) { return widen_raw(net, w.mask(), s); },
                         ConfigSet::singleton(x));
}

ConfigSet mp_set(const BooleanNetwork& net, const ConfigSet& x, unsigned cap) {
    return mp_update(net, cap)(x);
}

ConfigSet mp_set_whole(const BooleanNetwork& net, const ConfigSet& x, unsigned cap) {
    require_cap(net.dimension(), cap);
    if (x.dimension() != net.dimension()) throw DimensionError("mp: dimension mismatch");
    if (x.empty()) return x;
    return mp_from(net, x);
}

SetUpdate mp_update(const BooleanNetwork& net, unsigned cap) {
    require_cap(net.dimension(), cap);
    return SetUpdate(net.dimension(), [&net](Code x, ConfigSet& out) {
        ConfigSet start(net.dimension());
        start.insert(x);
        out |= mp_from(net, start);
    });
}

} // namespace bnmodes
