#include "bnmodes/dynamics.hpp"

#include <algorithm>
#include <deque>

#include "bnmodes/error.hpp"

namespace bnmodes {

TransitionGraph build_graph(const BooleanNetwork& net, const ModeSpec& mode, const Limits& limits) {
    if (net.dimension() > limits.whole_space) {
        throw CapExceeded("dimension " + std::to_string(net.dimension()) +
                          " exceeds the whole-space cap " + std::to_string(limits.whole_space));
    }
    const SetUpdate update = make_set_update(net, mode, limits);
    return TransitionGraph{delta(update, limits.whole_space), mode};
}

ConfigSet fixed_points(const BooleanNetwork& net, unsigned cap) {
    const unsigned n = net.dimension();
    if (n > cap) throw CapExceeded("dimension " + std::to_string(n) + " exceeds the whole-space cap");
    ConfigSet out(n);
    const std::size_t count = std::size_t{1} << n;
    for (Code x = 0; x < count; ++x) {
        if (net.image(x) == x) out.insert(x);
    }
    return out;
}

ConfigSet LimitStructure::limit_configurations(unsigned n) const {
    ConfigSet out(n);
    for (const LimitSet& s : sets) out |= s.members;
    return out;
}

std::vector<std::vector<Code>> strongly_connected_components(const TransitionRelation& r) {
    // Tarjan with an explicit call stack.
    const std::size_t count = r.vertex_count();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(count, kUnvisited);
    std::vector<std::size_t> low(count, 0);
    std::vector<bool> on_stack(count, false);
    std::vector<Code> stack;
    std::vector<std::vector<Code>> components;
    std::size_t next_index = 0;

    struct Frame {
        Code vertex;
        std::size_t edge;
    };
    std::vector<Frame> call;

    for (Code root = 0; root < count; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& top = call.back();
            const auto& succ = r.successors(top.vertex);
            if (top.edge < succ.size()) {
                const Code w = succ[top.edge++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[top.vertex] = std::min(low[top.vertex], index[w]);
                }
                continue;
            }
            const Code v = top.vertex;
            call.pop_back();
            if (!call.empty()) low[call.back().vertex] = std::min(low[call.back().vertex], low[v]);
            if (low[v] == index[v]) {
                std::vector<Code> component;
                Code w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    return components;
}

namespace {

// Backward closure of `targets` inside the relation.
ConfigSet backward_closure(const TransitionRelation& r, const ConfigSet& targets) {
    std::vector<std::vector<Code>> preds(r.vertex_count());
    for (Code x = 0; x < r.vertex_count(); ++x) {
        for (Code y : r.successors(x)) preds[y].push_back(x);
    }
    ConfigSet seen = targets;
    std::vector<Code> work = targets.codes();
    while (!work.empty()) {
        const Code y = work.back();
        work.pop_back();
        for (Code x : preds[y]) {
            if (!seen.contains(x)) {
                seen.insert(x);
                work.push_back(x);
            }
        }
    }
    return seen;
}

} // namespace

LimitStructure limit_sets(const TransitionGraph& g) {
    const TransitionRelation& r = g.edges;
    const unsigned n = r.dimension();
    std::vector<std::vector<Code>> components = strongly_connected_components(r);

    std::vector<std::size_t> component_of(r.vertex_count());
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (Code v : components[c]) component_of[v] = c;
    }

    LimitStructure out;
    for (std::size_t c = 0; c < components.size(); ++c) {
        bool terminal = true;
        for (Code v : components[c]) {
            for (Code w : r.successors(v)) {
                if (component_of[w] != c) terminal = false;
            }
        }
        if (!terminal) continue;
        LimitSet s;
        s.members = ConfigSet::from_codes(n, components[c]);
        s.kind = components[c].size() == 1 ? LimitSet::Kind::FixedPoint : LimitSet::Kind::LimitCycle;
        out.sets.push_back(std::move(s));
    }
    std::sort(out.sets.begin(), out.sets.end(),
              [](const LimitSet& a, const LimitSet& b) { return a.members.first() < b.members.first(); });

    const ConfigSet limit = out.limit_configurations(n);
    for (LimitSet& s : out.sets) {
        // A limit set is an SCC: reaching one member reaches all of them.
        ConfigSet reaching = backward_closure(r, s.members) - limit;
        if (!reaching.empty()) {
            s.attractor = true;
            s.basin = std::move(reaching);
        }
    }
    return out;
}

LimitStructure attractors(const TransitionGraph& g) {
    LimitStructure all = limit_sets(g);
    std::erase_if(all.sets, [](const LimitSet& s) { return !s.attractor; });
    return all;
}

ConfigSet basin(const TransitionGraph& g, const ConfigSet& attractor) {
    for (LimitSet& s : limit_sets(g).sets) {
        if (s.members == attractor) {
            if (!s.attractor) {
                throw InvalidArgument("{" + attractor.to_text() + "} is a limit set but not an attractor");
            }
            return *s.basin;
        }
    }
    throw InvalidArgument("{" + attractor.to_text() + "} is not a limit set of the graph");
}

Reachability reachable(const TransitionGraph& g, Configuration from, Configuration to) {
    const TransitionRelation& r = g.edges;
    const unsigned n = r.dimension();
    if (from.dimension() != n || to.dimension() != n) throw DimensionError("reachable: dimension mismatch");

    Reachability out;
    if (from == to) {
        out.reachable = true;
        out.witness = {from};
        return out;
    }
    constexpr Code kNone = ~Code{0};
    std::vector<Code> parent(r.vertex_count(), kNone);
    parent[from.code()] = from.code();
    std::deque<Code> queue{from.code()};
    while (!queue.empty()) {
        const Code x = queue.front();
        queue.pop_front();
        // Successor lists are sorted, so ties resolve to the smaller code.
        for (Code y : r.successors(x)) {
            if (parent[y] != kNone) continue;
            parent[y] = x;
            if (y == to.code()) {
                std::vector<Configuration> path;
                for (Code v = y; v != from.code(); v = parent[v]) path.emplace_back(n, v);
                path.push_back(from);
                std::reverse(path.begin(), path.end());
                out.reachable = true;
                out.witness = std::move(path);
                return out;
            }
            queue.push_back(y);
        }
    }
    return out;
}

ConfigSet forward_closure(const TransitionRelation& r, Code x) {
    ConfigSet seen(r.dimension());
    seen.insert(x);
    std::vector<Code> work{x};
    while (!work.empty()) {
        const Code v = work.back();
        work.pop_back();
        for (Code w : r.successors(v)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                work.push_back(w);
            }
        }
    }
    return seen;
}

Comparison compare(const TransitionGraph& first, const TransitionGraph& second, bool ignore_loops) {
    if (first.dimension() != second.dimension()) throw DimensionError("compare: graphs of different dimensions");
    const TransitionRelation a = ignore_loops ? first.edges.without_loops() : first.edges;
    const TransitionRelation b = ignore_loops ? second.edges.without_loops() : second.edges;
    const auto ea = a.edges();
    const auto eb = b.edges();
    Comparison out;
    std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(out.only_first));
    std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(out.only_second));
    if (out.only_first.empty() && out.only_second.empty()) {
        out.relation = Comparison::Relation::Equal;
    } else if (out.only_first.empty()) {
        out.relation = Comparison::Relation::FirstSubset;
    } else if (out.only_second.empty()) {
        out.relation = Comparison::Relation::SecondSubset;
    } else {
        out.relation = Comparison::Relation::Incomparable;
    }
    return out;
}

const char* to_string(Comparison::Relation r) {
    switch (r) {
    case Comparison::Relation::Equal: return "equal";
    case Comparison::Relation::FirstSubset: return "subset";
    case Comparison::Relation::SecondSubset: return "superset";
    case Comparison::Relation::Incomparable: return "incomparable";
    }
    return "";
}

const char* to_string(LimitSet::Kind k) {
    return k == LimitSet::Kind::FixedPoint ? "fixed point" : "limit cycle";
}

} // namespace bnmodes
