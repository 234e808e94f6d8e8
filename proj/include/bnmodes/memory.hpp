#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bnmodes/config.hpp"
#include "bnmodes/network.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

// Per-automaton memory maxima M_1..M_n, each at least 1.
class MemoryVector {
public:
    explicit MemoryVector(std::vector<unsigned> maxima);
    // M_i = 2 inside the memory set, 1 outside.
    static MemoryVector canonical(const AutomatonSet& memory_set);

    unsigned dimension() const noexcept { return static_cast<unsigned>(maxima_.size()); }
    unsigned operator[](unsigned i) const { return maxima_.at(i - 1); }
    const std::vector<unsigned>& values() const noexcept { return maxima_; }

    // {i | M_i >= 2}
    AutomatonSet memory_set() const;

    friend bool operator==(const MemoryVector&, const MemoryVector&) = default;

private:
    std::vector<unsigned> maxima_;
};

// Delays d_1..d_n. The coupled configuration (x, d) of a memory network is
// stored as d alone, since x = beta(d).
struct MemoryConfiguration {
    std::vector<unsigned> delays;

    unsigned dimension() const noexcept { return static_cast<unsigned>(delays.size()); }
    bool valid_for(const MemoryVector& m) const noexcept;
    std::string to_text() const;  // "(2,0,1)"

    friend bool operator==(const MemoryConfiguration&, const MemoryConfiguration&) = default;
    friend auto operator<=>(const MemoryConfiguration&, const MemoryConfiguration&) = default;
};

inline constexpr std::size_t kMaxMemoryPreimages = std::size_t{1} << 20;

Configuration beta(const MemoryConfiguration& d);
// Every d with beta(d) = x and d_i <= M_i; there are prod_{x_i=1} M_i of them.
std::vector<MemoryConfiguration> alpha(Configuration x, const MemoryVector& m);

MemoryConfiguration phi_star(const BooleanNetwork& net, const MemoryVector& m,
                             const MemoryConfiguration& d);
// One parallel step of the memory network: (beta(d'), d') with d' = phi_star(d).
std::pair<Configuration, MemoryConfiguration> mbn_step(const BooleanNetwork& net,
                                                       const MemoryVector& m,
                                                       const MemoryConfiguration& d);

// B o Phi*_M o A, through explicit delay configurations.
ConfigSet phi_memory_set(const BooleanNetwork& net, const MemoryVector& m, const ConfigSet& x);
// All phi_W(x) with W ⊇ {i | i ∉ Mb or f_i(x) = 1}.
ConfigSet phi_mb_set(const BooleanNetwork& net, const AutomatonSet& memory_set, const ConfigSet& x);

SetUpdate memory_update(const BooleanNetwork& net, MemoryVector m);
SetUpdate memory_set_update(const BooleanNetwork& net, AutomatonSet memory_set);

} // namespace bnmodes
