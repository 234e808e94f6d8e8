#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bnmodes/config.hpp"
#include "bnmodes/mode.hpp"
#include "bnmodes/network.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

struct TransitionGraph {
    TransitionRelation edges;
    ModeSpec mode;

    unsigned dimension() const noexcept { return edges.dimension(); }
};

TransitionGraph build_graph(const BooleanNetwork& net, const ModeSpec& mode, const Limits& limits = {});

// {x | f(x) = x}
ConfigSet fixed_points(const BooleanNetwork& net, unsigned cap = Limits{}.whole_space);

struct LimitSet {
    enum class Kind { FixedPoint, LimitCycle };

    ConfigSet members;
    Kind kind = Kind::FixedPoint;
    // Some transient configuration has a path into the set.
    bool attractor = false;
    // Transient configurations reaching every member; set when attractor.
    std::optional<ConfigSet> basin;
};

// Terminal strongly connected components, ordered by smallest member.
struct LimitStructure {
    std::vector<LimitSet> sets;

    ConfigSet limit_configurations(unsigned n) const;
};

LimitStructure limit_sets(const TransitionGraph& g);
LimitStructure attractors(const TransitionGraph& g);
// Throws InvalidArgument unless `attractor` is one of the attractors of g.
ConfigSet basin(const TransitionGraph& g, const ConfigSet& attractor);

// Strongly connected components in the order Tarjan's algorithm emits them.
std::vector<std::vector<Code>> strongly_connected_components(const TransitionRelation& r);

struct Reachability {
    bool reachable = false;
    // Shortest path x ... y (BFS, ties to the lowest code); just {x} when x = y.
    std::vector<Configuration> witness;
};

Reachability reachable(const TransitionGraph& g, Configuration from, Configuration to);
// {y | x ->* y}
ConfigSet forward_closure(const TransitionRelation& r, Code x);

struct Comparison {
    enum class Relation { Equal, FirstSubset, SecondSubset, Incomparable };

    Relation relation = Relation::Equal;
    std::vector<std::pair<Code, Code>> only_first;
    std::vector<std::pair<Code, Code>> only_second;
};

Comparison compare(const TransitionGraph& first, const TransitionGraph& second, bool ignore_loops = false);

const char* to_string(Comparison::Relation r);
const char* to_string(LimitSet::Kind k);

} // namespace bnmodes
