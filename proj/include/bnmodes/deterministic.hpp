#pragma once

#include <span>
#include <vector>

#include "bnmodes/config.hpp"
#include "bnmodes/network.hpp"

namespace bnmodes {

// phi_W on raw codes: automata of W take f_i(x), the others keep x_i.
inline Code phi(const BooleanNetwork& net, Code mask, Code x) noexcept {
    return (x & ~mask) | (net.image(x) & mask);
}

Configuration phi(const BooleanNetwork& net, const AutomatonSet& w, Configuration x);

// An ordered list of non-empty blocks W_1..W_p applied as
// phi_{W_p} o ... o phi_{W_1}. Partition schedules (block-sequential) also
// require the blocks to be disjoint and to cover 1..n.
class Schedule {
public:
    static Schedule parallel(unsigned n);
    // Permutation of 1..n, one automaton per block.
    static Schedule sequential(unsigned n, std::span<const unsigned> order);
    static Schedule block_sequential(std::vector<AutomatonSet> blocks);
    // Arbitrary non-empty blocks, repeated periodically.
    static Schedule periodic(std::vector<AutomatonSet> blocks);

    unsigned dimension() const noexcept { return n_; }
    const std::vector<AutomatonSet>& blocks() const noexcept { return blocks_; }
    bool requires_partition() const noexcept { return requires_partition_; }

private:
    Schedule(std::vector<AutomatonSet> blocks, bool requires_partition);

    unsigned n_ = 0;
    std::vector<AutomatonSet> blocks_;
    bool requires_partition_ = false;
};

Code schedule_step(const BooleanNetwork& net, const Schedule& sched, Code x) noexcept;
Configuration schedule_step(const BooleanNetwork& net, const Schedule& sched, Configuration x);

// x, step(x), ..., step^steps(x).
std::vector<Configuration> trajectory(const BooleanNetwork& net, const Schedule& sched,
                                      Configuration x, std::size_t steps);

// All ordered partitions of 1..n (Fubini-many), for exhaustive checks.
std::vector<Schedule> all_block_sequential_schedules(unsigned n);

} // namespace bnmodes
