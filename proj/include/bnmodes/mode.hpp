#pragma once

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "bnmodes/deterministic.hpp"
#include "bnmodes/network.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

// Updating modes. Automaton indices are 1-based and validated against a
// network dimension only when the mode is bound to a network.
namespace mode {
struct Parallel {};
struct Sequential { std::vector<unsigned> order; };
struct BlockSequential { std::vector<std::vector<unsigned>> blocks; };
struct Periodic { std::vector<std::vector<unsigned>> blocks; };
struct FullyAsync {};
struct Async {};
struct Memory { std::vector<unsigned> memory_set; };
struct MemoryVector { std::vector<unsigned> maxima; };
struct Interval {};
struct MostPermissive {};

inline bool operator==(const Parallel&, const Parallel&) { return true; }
inline bool operator==(const Sequential& a, const Sequential& b) { return a.order == b.order; }
inline bool operator==(const BlockSequential& a, const BlockSequential& b) { return a.blocks == b.blocks; }
inline bool operator==(const Periodic& a, const Periodic& b) { return a.blocks == b.blocks; }
inline bool operator==(const FullyAsync&, const FullyAsync&) { return true; }
inline bool operator==(const Async&, const Async&) { return true; }
inline bool operator==(const Memory& a, const Memory& b) { return a.memory_set == b.memory_set; }
inline bool operator==(const MemoryVector& a, const MemoryVector& b) { return a.maxima == b.maxima; }
inline bool operator==(const Interval&, const Interval&) { return true; }
inline bool operator==(const MostPermissive&, const MostPermissive&) { return true; }
} // namespace mode

class ModeSpec {
public:
    using Variant = std::variant<mode::Parallel, mode::Sequential, mode::BlockSequential,
                                 mode::Periodic, mode::FullyAsync, mode::Async, mode::Memory,
                                 mode::MemoryVector, mode::Interval, mode::MostPermissive>;

    ModeSpec() = default;
    // Validates the parameters that do not depend on n (permutation,
    // partition shape, non-empty blocks, positive memories).
    ModeSpec(Variant v);
    template <class M>
        requires std::is_constructible_v<Variant, M> && (!std::is_same_v<std::decay_t<M>, Variant>) &&
                 (!std::is_same_v<std::decay_t<M>, ModeSpec>)
    ModeSpec(M m) : ModeSpec(Variant(std::move(m))) {}

    const Variant& value() const noexcept { return value_; }
    bool is_deterministic() const noexcept;

    // Throws unless every index fits in 1..n and partition/permutation
    // modes cover exactly 1..n.
    void validate(unsigned n) const;

    // Canonical text; parse_mode(to_string()) gives back an equal spec.
    std::string to_string() const;

    friend bool operator==(const ModeSpec&, const ModeSpec&) = default;

private:
    Variant value_ = mode::Parallel{};
};

// "parallel" | "fully-async" | "async" | "seq:i1,i2,..." | "bs:{a,b};{c};..." |
// "periodic:{a};{b,c};..." | "memory:{i,j}" | "memory-vector:m1,m2,..." |
// "interval" | "mp". Whitespace is ignored.
ModeSpec parse_mode(std::string_view text);

// Deterministic schedule of a parallel/sequential/bs/periodic mode.
Schedule schedule_of(const ModeSpec& spec, unsigned n);

// The set update generating the mode's transitions on `net`.
SetUpdate make_set_update(const BooleanNetwork& net, const ModeSpec& spec,
                          const Limits& limits = {});

} // namespace bnmodes
