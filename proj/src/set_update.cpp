#include "bnmodes/set_update.hpp"

#include <algorithm>
#include <thread>

namespace bnmodes {

ConfigSet SetUpdate::operator()(const ConfigSet& x) const {
    if (x.dimension() != n_) throw DimensionError("set update applied to a set of another dimension");
    ConfigSet out(n_);
    x.for_each([&](Code c) { kernel_(c, out); });
    return out;
}

ConfigSet SetUpdate::on(Configuration x) const { return (*this)(ConfigSet::singleton(x)); }

SetUpdate elementary_update(const BooleanNetwork& net) {
    return SetUpdate(net.dimension(), [&net](Code x, ConfigSet& out) {
        const unsigned n = net.dimension();
        const Code changed = (x ^ net.image(x)) & full_mask(n);
        // phi_W(x) = x ^ (W ∩ changed). Every non-empty subset of changed is
        // reached by W = subset; x itself needs a non-empty W disjoint from
        // changed, which exists unless every automaton changes.
        for (Code sub = changed;; sub = (sub - 1) & changed) {
            if (sub != 0 || changed != full_mask(n)) out.insert(x ^ sub);
            if (sub == 0) break;
        }
    });
}

SetUpdate fully_async_update(const BooleanNetwork& net) {
    return SetUpdate(net.dimension(), [&net](Code x, ConfigSet& out) {
        const unsigned n = net.dimension();
        for (unsigned i = 1; i <= n; ++i) out.insert(phi(net, automaton_bit(n, i), x));
    });
}

SetUpdate deterministic_update(const BooleanNetwork& net, const Schedule& sched) {
    if (sched.dimension() != net.dimension()) throw DimensionError("schedule dimension mismatch");
    return SetUpdate(net.dimension(),
                     [&net, sched](Code x, ConfigSet& out) { out.insert(schedule_step(net, sched, x)); });
}

ConfigSet phi_e_set(const BooleanNetwork& net, const ConfigSet& x) { return elementary_update(net)(x); }

ConfigSet phi_fa_set(const BooleanNetwork& net, const ConfigSet& x) { return fully_async_update(net)(x); }

SetUpdate superpose(SetUpdate first, SetUpdate second) {
    if (first.dimension() != second.dimension()) {
        throw DimensionError("superposed set updates must share a dimension");
    }
    const unsigned n = first.dimension();
    return SetUpdate(n, [a = std::move(first), b = std::move(second)](Code x, ConfigSet& out) {
        a.successors(x, out);
        b.successors(x, out);
    });
}

// ---------------------------------------------------------------------------

TransitionRelation::TransitionRelation(unsigned n, std::vector<std::vector<Code>> successors)
    : n_(n), successors_(std::move(successors)) {
    if (successors_.size() != (std::size_t{1} << n)) {
        throw DimensionError("transition relation needs one successor list per configuration");
    }
    for (auto& list : successors_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (!list.empty() && list.back() > full_mask(n)) throw DimensionError("edge target out of range");
    }
}

std::size_t TransitionRelation::edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& list : successors_) total += list.size();
    return total;
}

bool TransitionRelation::contains(Code x, Code y) const {
    const auto& list = successors_.at(x);
    return std::binary_search(list.begin(), list.end(), y);
}

bool TransitionRelation::is_subset_of(const TransitionRelation& other) const {
    if (other.n_ != n_) throw DimensionError("transition relations of different dimensions");
    for (std::size_t x = 0; x < successors_.size(); ++x) {
        if (!std::includes(other.successors_[x].begin(), other.successors_[x].end(),
                           successors_[x].begin(), successors_[x].end())) {
            return false;
        }
    }
    return true;
}

TransitionRelation TransitionRelation::without_loops() const {
    TransitionRelation out = *this;
    for (std::size_t x = 0; x < out.successors_.size(); ++x) {
        auto& list = out.successors_[x];
        list.erase(std::remove(list.begin(), list.end(), static_cast<Code>(x)), list.end());
    }
    return out;
}

std::vector<std::pair<Code, Code>> TransitionRelation::edges() const {
    std::vector<std::pair<Code, Code>> out;
    out.reserve(edge_count());
    for (std::size_t x = 0; x < successors_.size(); ++x) {
        for (Code y : successors_[x]) out.emplace_back(static_cast<Code>(x), y);
    }
    return out;
}

TransitionRelation delta(const SetUpdate& update, unsigned cap, unsigned threads) {
    const unsigned n = update.dimension();
    if (n > cap) {
        throw CapExceeded("dimension " + std::to_string(n) + " exceeds the whole-space cap " +
                          std::to_string(cap));
    }
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::vector<Code>> successors(count);

    auto work = [&](std::size_t begin, std::size_t end) {
        ConfigSet scratch(n);
        for (std::size_t x = begin; x < end; ++x) {
            scratch.clear();
            update.successors(static_cast<Code>(x), scratch);
            successors[x] = scratch.codes();
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads == 1 || count < 1024) {
        work(0, count);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (count + threads - 1) / threads;
        for (std::size_t begin = 0; begin < count; begin += chunk) {
            pool.emplace_back(work, begin, std::min(count, begin + chunk));
        }
    }
    return TransitionRelation(n, std::move(successors));
}

TransitionRelation relation_from_edges(unsigned n, const std::vector<std::pair<Code, Code>>& edges) {
    std::vector<std::vector<Code>> successors(std::size_t{1} << n);
    for (auto [x, y] : edges) successors.at(x).push_back(y);
    return TransitionRelation(n, std::move(successors));
}

ConfigSet elementary_reachable(const BooleanNetwork& net, Code x) {
    const SetUpdate step = elementary_update(net);
    ConfigSet start(net.dimension());
    start.insert(x);
    return iterate_omega([&](const ConfigSet& s) { return s | step(s); }, std::move(start));
}

} // namespace bnmodes
