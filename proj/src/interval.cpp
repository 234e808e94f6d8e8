#include "bnmodes/interval.hpp"

#include <bit>
#include <stdexcept>

#include "bnmodes/error.hpp"

namespace bnmodes {

IntervalEngine::IntervalEngine(const BooleanNetwork& net) : net_(net) {
    if (net.dimension() > kMaxSetDimension) throw CapExceeded("network too large for interval mode");
}

const ConfigSet& IntervalEngine::psi_single(Code held, Code x) {
    const Key key{held, x, 0};
    if (auto it = psi_memo_.find(key); it != psi_memo_.end()) return it->second;

    const unsigned n = net_.dimension();
    ConfigSet out(n);
    out.insert(x);
    const Code changing = (x ^ net_.image(x)) & ~held & full_mask(n);
    for (unsigned i = 1; i <= n; ++i) {
        if (changing & automaton_bit(n, i)) out |= commit_raw(held, i, x);
    }
    return psi_memo_.emplace(key, std::move(out)).first->second;
}

ConfigSet IntervalEngine::psi_raw(Code held, const ConfigSet& x) {
    ConfigSet out = x;
    x.for_each([&](Code c) { out |= psi_single(held, c); });
    return out;
}

const ConfigSet& IntervalEngine::commit_raw(Code held, unsigned i, Code x) {
    const Key key{held, x, i};
    if (auto it = commit_memo_.find(key); it != commit_memo_.end()) return it->second;

    const unsigned n = net_.dimension();
    const Code bit = automaton_bit(n, i);
    const Code inner = held | bit;
    const auto depth = static_cast<unsigned>(std::popcount(inner));
    if (depth > n) throw std::logic_error("interval recursion deeper than the network dimension");
    max_depth_ = std::max(max_depth_, depth);

    ConfigSet start(n);
    start.insert(x);
    const ConfigSet held_closure =
        iterate_omega([&](const ConfigSet& s) { return psi_raw(inner, s); }, std::move(start));

    ConfigSet out(n);
    held_closure.for_each([&](Code y) { out.insert(y ^ bit); });
    return commit_memo_.emplace(key, std::move(out)).first->second;
}

ConfigSet IntervalEngine::psi(const AutomatonSet& held, const ConfigSet& x) {
    if (held.dimension() != net_.dimension() || x.dimension() != net_.dimension()) {
        throw DimensionError("interval psi: dimension mismatch");
    }
    return psi_raw(held.mask(), x);
}

ConfigSet IntervalEngine::commit(const AutomatonSet& held, unsigned i, Configuration x) {
    const unsigned n = net_.dimension();
    if (held.dimension() != n || x.dimension() != n) throw DimensionError("interval commit: dimension mismatch");
    if (held.contains(i)) {
        throw InvalidArgument("interval commit: automaton " + std::to_string(i) + " is already held");
    }
    if (net_.local_value(i, x.code()) == x[i]) {
        throw InvalidArgument("interval commit: automaton " + std::to_string(i) +
                              " cannot change in " + x.to_text());
    }
    return commit_raw(held.mask(), i, x.code());
}

ConfigSet psi(const BooleanNetwork& net, const AutomatonSet& held, const ConfigSet& x) {
    return IntervalEngine(net).psi(held, x);
}

ConfigSet interval_commit(const BooleanNetwork& net, const AutomatonSet& held, unsigned i,
                          Configuration x) {
    return IntervalEngine(net).commit(held, i, x);
}

ConfigSet interval_set(const BooleanNetwork& net, const ConfigSet& x) {
    return IntervalEngine(net).interval_set(x);
}

SetUpdate interval_update(const BooleanNetwork& net) {
    return SetUpdate(net.dimension(), [&net](Code x, ConfigSet& out) {
        IntervalEngine engine(net);
        out |= engine.interval_set(ConfigSet::singleton(Configuration(net.dimension(), x)));
    });
}

} // namespace bnmodes
