#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bnmodes {

// Canonical integer code of a configuration: sum of x_i * 2^(n-i), so the
// text form read as a binary numeral (automaton 1 leftmost) is the code.
using Code = std::uint64_t;

inline constexpr unsigned kMaxConfigurationDimension = 63;
// Dense sets hold one bit per configuration of B^n.
inline constexpr unsigned kMaxSetDimension = 30;

// Bit carrying automaton i (1-based) in a code of dimension n.
constexpr Code automaton_bit(unsigned n, unsigned i) noexcept { return Code{1} << (n - i); }

constexpr Code full_mask(unsigned n) noexcept {
    return n == 0 ? Code{0} : (~Code{0} >> (64 - n));
}

class Configuration {
public:
    Configuration() = default;
    Configuration(unsigned n, Code code);

    static Configuration from_text(std::string_view text, unsigned n);
    static Configuration from_text(std::string_view text) {
        return from_text(text, static_cast<unsigned>(text.size()));
    }

    unsigned dimension() const noexcept { return n_; }
    Code code() const noexcept { return code_; }

    // State of automaton i, 1-based.
    bool operator[](unsigned i) const;
    Configuration flipped(unsigned i) const;

    std::string to_text() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;

private:
    unsigned n_ = 0;
    Code code_ = 0;
};

std::string to_text(Code code, unsigned n);
std::ostream& operator<<(std::ostream& os, const Configuration& x);

// A subset W of the automata 1..n, stored as a mask in code layout so that
// phi_W(x) = (x & ~mask) | (f(x) & mask).
class AutomatonSet {
public:
    AutomatonSet() = default;
    AutomatonSet(unsigned n, std::span<const unsigned> indices);
    AutomatonSet(unsigned n, std::initializer_list<unsigned> indices)
        : AutomatonSet(n, std::span<const unsigned>(indices.begin(), indices.size())) {}

    static AutomatonSet from_mask(unsigned n, Code mask);
    static AutomatonSet none(unsigned n) { return from_mask(n, 0); }
    static AutomatonSet all(unsigned n) { return from_mask(n, full_mask(n)); }

    unsigned dimension() const noexcept { return n_; }
    Code mask() const noexcept { return mask_; }
    bool contains(unsigned i) const;
    bool empty() const noexcept { return mask_ == 0; }
    unsigned size() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }
    std::vector<unsigned> indices() const;

    AutomatonSet with(unsigned i) const;
    AutomatonSet complement() const { return from_mask(n_, ~mask_ & full_mask(n_)); }

    // "{2,3}"
    std::string to_text() const;

    friend bool operator==(const AutomatonSet&, const AutomatonSet&) = default;

private:
    unsigned n_ = 0;
    Code mask_ = 0;
};

// Dense bit-per-code subset of B^n.
class ConfigSet {
public:
    ConfigSet() = default;
    explicit ConfigSet(unsigned n);

    static ConfigSet universe(unsigned n);
    static ConfigSet singleton(Configuration x);
    static ConfigSet from_codes(unsigned n, std::span<const Code> codes);
    // Whitespace- or comma-separated configuration texts, e.g. "000 101".
    static ConfigSet parse(std::string_view texts, unsigned n);

    unsigned dimension() const noexcept { return n_; }
    std::size_t universe_size() const noexcept { return std::size_t{1} << n_; }

    bool contains(Code x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
    bool contains(Configuration x) const;
    void insert(Code x) noexcept { words_[x >> 6] |= Code{1} << (x & 63); }
    void insert(Configuration x);
    void erase(Code x) noexcept { words_[x >> 6] &= ~(Code{1} << (x & 63)); }

    std::size_t size() const noexcept;
    bool empty() const noexcept;
    void clear() noexcept;

    ConfigSet& operator|=(const ConfigSet& other);
    ConfigSet& operator&=(const ConfigSet& other);
    ConfigSet& operator-=(const ConfigSet& other);
    friend ConfigSet operator|(ConfigSet a, const ConfigSet& b) { return a |= b; }
    friend ConfigSet operator&(ConfigSet a, const ConfigSet& b) { return a &= b; }
    friend ConfigSet operator-(ConfigSet a, const ConfigSet& b) { return a -= b; }

    bool is_subset_of(const ConfigSet& other) const;
    bool intersects(const ConfigSet& other) const;

    // Visits members in ascending code order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Code bits = words_[w];
            while (bits != 0) {
                const int b = std::countr_zero(bits);
                f(static_cast<Code>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Code> codes() const;
    Code first() const;

    // Members as space-separated texts in ascending code order.
    std::string to_text() const;

    friend bool operator==(const ConfigSet&, const ConfigSet&) = default;

private:
    void require_same_dimension(const ConfigSet& other) const;

    unsigned n_ = 0;
    std::vector<Code> words_;
};

std::ostream& operator<<(std::ostream& os, const ConfigSet& set);

} // namespace bnmodes
