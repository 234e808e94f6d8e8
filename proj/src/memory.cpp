#include "bnmodes/memory.hpp"

#include "bnmodes/error.hpp"

namespace bnmodes {

MemoryVector::MemoryVector(std::vector<unsigned> maxima) : maxima_(std::move(maxima)) {
    if (maxima_.empty()) throw InvalidArgument("memory vector must not be empty");
    for (std::size_t k = 0; k < maxima_.size(); ++k) {
        if (maxima_[k] < 1) {
            throw InvalidArgument("memory of automaton " + std::to_string(k + 1) + " must be >= 1");
        }
    }
}

MemoryVector MemoryVector::canonical(const AutomatonSet& memory_set) {
    std::vector<unsigned> maxima(memory_set.dimension(), 1);
    for (unsigned i : memory_set.indices()) maxima[i - 1] = 2;
    return MemoryVector(std::move(maxima));
}

AutomatonSet MemoryVector::memory_set() const {
    std::vector<unsigned> members;
    for (unsigned i = 1; i <= dimension(); ++i) {
        if ((*this)[i] >= 2) members.push_back(i);
    }
    return AutomatonSet(dimension(), members);
}

bool MemoryConfiguration::valid_for(const MemoryVector& m) const noexcept {
    if (delays.size() != m.dimension()) return false;
    for (unsigned i = 1; i <= m.dimension(); ++i) {
        if (delays[i - 1] > m[i]) return false;
    }
    return true;
}

std::string MemoryConfiguration::to_text() const {
    std::string out = "(";
    for (std::size_t k = 0; k < delays.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(delays[k]);
    }
    return out + ")";
}

Configuration beta(const MemoryConfiguration& d) {
    const unsigned n = d.dimension();
    Code code = 0;
    for (unsigned i = 1; i <= n; ++i) {
        if (d.delays[i - 1] >= 1) code |= automaton_bit(n, i);
    }
    return Configuration(n, code);
}

std::vector<MemoryConfiguration> alpha(Configuration x, const MemoryVector& m) {
    const unsigned n = x.dimension();
    if (m.dimension() != n) throw DimensionError("memory vector dimension mismatch");
    std::size_t total = 1;
    for (unsigned i = 1; i <= n; ++i) {
        if (x[i]) {
            total *= m[i];
            if (total > kMaxMemoryPreimages) {
                throw CapExceeded("too many memory configurations for " + x.to_text());
            }
        }
    }
    std::vector<MemoryConfiguration> out;
    out.reserve(total);
    MemoryConfiguration d{std::vector<unsigned>(n, 0)};
    for (unsigned i = 1; i <= n; ++i) {
        if (x[i]) d.delays[i - 1] = 1;
    }
    // Odometer over the active automata, each running 1..M_i.
    for (;;) {
        out.push_back(d);
        unsigned i = n;
        for (; i >= 1; --i) {
            if (!x[i]) continue;
            if (d.delays[i - 1] < m[i]) {
                ++d.delays[i - 1];
                break;
            }
            d.delays[i - 1] = 1;
        }
        if (i == 0) break;
    }
    return out;
}

MemoryConfiguration phi_star(const BooleanNetwork& net, const MemoryVector& m,
                             const MemoryConfiguration& d) {
    const unsigned n = net.dimension();
    if (m.dimension() != n) throw DimensionError("memory vector dimension mismatch");
    if (!d.valid_for(m)) throw InvalidArgument("memory configuration " + d.to_text() + " is invalid");
    const Code fx = net.image(beta(d).code());
    MemoryConfiguration next{d.delays};
    for (unsigned i = 1; i <= n; ++i) {
        unsigned& di = next.delays[i - 1];
        if (fx & automaton_bit(n, i)) {
            di = m[i];
        } else if (di >= 1) {
            --di;
        }
    }
    return next;
}

std::pair<Configuration, MemoryConfiguration> mbn_step(const BooleanNetwork& net,
                                                       const MemoryVector& m,
                                                       const MemoryConfiguration& d) {
    MemoryConfiguration next = phi_star(net, m, d);
    Configuration y = beta(next);
    return {y, std::move(next)};
}

namespace {

void memory_kernel(const BooleanNetwork& net, const MemoryVector& m, Code x, ConfigSet& out) {
    const unsigned n = net.dimension();
    for (const MemoryConfiguration& d : alpha(Configuration(n, x), m)) {
        out.insert(beta(phi_star(net, m, d)).code());
    }
}

void mb_kernel(const BooleanNetwork& net, Code memory_mask, Code x, ConfigSet& out) {
    const unsigned n = net.dimension();
    const Code fx = net.image(x);
    const Code mandatory = (~memory_mask | fx) & full_mask(n);
    // Only optional automata that would actually change make a difference.
    const Code optional = ~mandatory & (x ^ fx) & full_mask(n);
    for (Code sub = optional;; sub = (sub - 1) & optional) {
        out.insert(phi(net, mandatory | sub, x));
        if (sub == 0) break;
    }
}

} // namespace

ConfigSet phi_memory_set(const BooleanNetwork& net, const MemoryVector& m, const ConfigSet& x) {
    return memory_update(net, m)(x);
}

ConfigSet phi_mb_set(const BooleanNetwork& net, const AutomatonSet& memory_set, const ConfigSet& x) {
    return memory_set_update(net, memory_set)(x);
}

SetUpdate memory_update(const BooleanNetwork& net, MemoryVector m) {
    if (m.dimension() != net.dimension()) throw DimensionError("memory vector dimension mismatch");
    return SetUpdate(net.dimension(),
                     [&net, m = std::move(m)](Code x, ConfigSet& out) { memory_kernel(net, m, x, out); });
}

SetUpdate memory_set_update(const BooleanNetwork& net, AutomatonSet memory_set) {
    if (memory_set.dimension() != net.dimension()) throw DimensionError("memory set dimension mismatch");
    const Code mask = memory_set.mask();
    return SetUpdate(net.dimension(), [&net, mask](Code x, ConfigSet& out) { mb_kernel(net, mask, x, out); });
}

} // namespace bnmodes
