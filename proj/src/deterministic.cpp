#include "bnmodes/deterministic.hpp"

#include <functional>

#include "bnmodes/error.hpp"

namespace bnmodes {

namespace {

void require_dimension(const BooleanNetwork& net, unsigned n, const char* what) {
    if (n != net.dimension()) {
        throw DimensionError(std::string(what) + " of dimension " + std::to_string(n) +
                             " used with a network of dimension " +
                             std::to_string(net.dimension()));
    }
}

} // namespace

Configuration phi(const BooleanNetwork& net, const AutomatonSet& w, Configuration x) {
    require_dimension(net, w.dimension(), "automaton set");
    require_dimension(net, x.dimension(), "configuration");
    return Configuration(x.dimension(), phi(net, w.mask(), x.code()));
}

Schedule::Schedule(std::vector<AutomatonSet> blocks, bool requires_partition)
    : blocks_(std::move(blocks)), requires_partition_(requires_partition) {
    if (blocks_.empty()) throw InvalidArgument("a schedule needs at least one block");
    n_ = blocks_.front().dimension();
    Code seen = 0;
    for (const AutomatonSet& b : blocks_) {
        if (b.dimension() != n_) throw DimensionError("schedule blocks have differing dimensions");
        if (b.empty()) throw InvalidArgument("schedule blocks must be non-empty");
        if (requires_partition_ && (seen & b.mask()) != 0) {
            throw InvalidArgument("blocks of a block-sequential schedule must be disjoint");
        }
        seen |= b.mask();
    }
    if (requires_partition_ && seen != full_mask(n_)) {
        throw InvalidArgument("blocks of a block-sequential schedule must cover every automaton");
    }
}

Schedule Schedule::parallel(unsigned n) { return Schedule({AutomatonSet::all(n)}, true); }

Schedule Schedule::sequential(unsigned n, std::span<const unsigned> order) {
    std::vector<AutomatonSet> blocks;
    for (unsigned i : order) blocks.push_back(AutomatonSet(n, {i}));
    if (blocks.size() != n) throw InvalidArgument("a sequential order must list every automaton once");
    return Schedule(std::move(blocks), true);
}

Schedule Schedule::block_sequential(std::vector<AutomatonSet> blocks) {
    return Schedule(std::move(blocks), true);
}

Schedule Schedule::periodic(std::vector<AutomatonSet> blocks) {
    return Schedule(std::move(blocks), false);
}

Code schedule_step(const BooleanNetwork& net, const Schedule& sched, Code x) noexcept {
    for (const AutomatonSet& b : sched.blocks()) x = phi(net, b.mask(), x);
    return x;
}

Configuration schedule_step(const BooleanNetwork& net, const Schedule& sched, Configuration x) {
    require_dimension(net, sched.dimension(), "schedule");
    require_dimension(net, x.dimension(), "configuration");
    return Configuration(x.dimension(), schedule_step(net, sched, x.code()));
}

std::vector<Configuration> trajectory(const BooleanNetwork& net, const Schedule& sched,
                                      Configuration x, std::size_t steps) {
    std::vector<Configuration> out{x};
    out.reserve(steps + 1);
    for (std::size_t k = 0; k < steps; ++k) out.push_back(schedule_step(net, sched, out.back()));
    return out;
}

std::vector<Schedule> all_block_sequential_schedules(unsigned n) {
    std::vector<Schedule> out;
    std::vector<AutomatonSet> prefix;
    const Code all = full_mask(n);
    std::function<void(Code)> extend = [&](Code remaining) {
        if (remaining == 0) {
            out.push_back(Schedule::block_sequential(prefix));
            return;
        }
        // Every non-empty subset of the remaining automata as the next block.
        for (Code sub = remaining; sub != 0; sub = (sub - 1) & remaining) {
            prefix.push_back(AutomatonSet::from_mask(n, sub));
            extend(remaining & ~sub);
            prefix.pop_back();
        }
    };
    extend(all);
    return out;
}

} // namespace bnmodes
