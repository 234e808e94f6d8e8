#include "bnmodes/config.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "bnmodes/error.hpp"

namespace bnmodes {

namespace {

void require_automaton(unsigned n, unsigned i) {
    if (i < 1 || i > n) {
        throw InvalidArgument("automaton index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(n));
    }
}

} // namespace

Configuration::Configuration(unsigned n, Code code) : n_(n), code_(code) {
    if (n > kMaxConfigurationDimension) {
        throw DimensionError("configuration dimension " + std::to_string(n) + " exceeds " +
                             std::to_string(kMaxConfigurationDimension));
    }
    if ((code & ~full_mask(n)) != 0) {
        throw DimensionError("configuration code " + std::to_string(code) +
                             " out of range for dimension " + std::to_string(n));
    }
}

Configuration Configuration::from_text(std::string_view text, unsigned n) {
    if (text.size() != n) {
        throw ParseError("configuration '" + std::string(text) + "' has length " +
                             std::to_string(text.size()) + ", expected " + std::to_string(n),
                         0, 0);
    }
    Code code = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c != '0' && c != '1') {
            throw ParseError("illegal character '" + std::string(1, c) + "' in configuration '" +
                                 std::string(text) + "'",
                             0, k + 1);
        }
        code = (code << 1) | static_cast<Code>(c == '1');
    }
    return Configuration(n, code);
}

bool Configuration::operator[](unsigned i) const {
    require_automaton(n_, i);
    return (code_ & automaton_bit(n_, i)) != 0;
}

Configuration Configuration::flipped(unsigned i) const {
    require_automaton(n_, i);
    return Configuration(n_, code_ ^ automaton_bit(n_, i));
}

std::string Configuration::to_text() const { return bnmodes::to_text(code_, n_); }

std::string to_text(Code code, unsigned n) {
    std::string out(n, '0');
    for (unsigned i = 1; i <= n; ++i) {
        if (code & automaton_bit(n, i)) out[i - 1] = '1';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Configuration& x) { return os << x.to_text(); }

// ---------------------------------------------------------------------------

AutomatonSet::AutomatonSet(unsigned n, std::span<const unsigned> indices) : n_(n) {
    for (unsigned i : indices) {
        require_automaton(n, i);
        mask_ |= automaton_bit(n, i);
    }
}

AutomatonSet AutomatonSet::from_mask(unsigned n, Code mask) {
    if ((mask & ~full_mask(n)) != 0) throw DimensionError("automaton mask out of range");
    AutomatonSet s;
    s.n_ = n;
    s.mask_ = mask;
    return s;
}

bool AutomatonSet::contains(unsigned i) const {
    require_automaton(n_, i);
    return (mask_ & automaton_bit(n_, i)) != 0;
}

std::vector<unsigned> AutomatonSet::indices() const {
    std::vector<unsigned> out;
    for (unsigned i = 1; i <= n_; ++i) {
        if (mask_ & automaton_bit(n_, i)) out.push_back(i);
    }
    return out;
}

AutomatonSet AutomatonSet::with(unsigned i) const {
    require_automaton(n_, i);
    return from_mask(n_, mask_ | automaton_bit(n_, i));
}

std::string AutomatonSet::to_text() const {
    std::string out = "{";
    bool first = true;
    for (unsigned i : indices()) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

ConfigSet::ConfigSet(unsigned n) : n_(n) {
    if (n > kMaxSetDimension) {
        throw CapExceeded("configuration sets are limited to dimension " +
                          std::to_string(kMaxSetDimension));
    }
    words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
}

ConfigSet ConfigSet::universe(unsigned n) {
    ConfigSet s(n);
    if (n >= 6) {
        std::fill(s.words_.begin(), s.words_.end(), ~Code{0});
    } else {
        s.words_[0] = (Code{1} << (Code{1} << n)) - 1;
    }
    return s;
}

ConfigSet ConfigSet::singleton(Configuration x) {
    ConfigSet s(x.dimension());
    s.insert(x.code());
    return s;
}

ConfigSet ConfigSet::from_codes(unsigned n, std::span<const Code> codes) {
    ConfigSet s(n);
    for (Code c : codes) s.insert(Configuration(n, c));
    return s;
}

ConfigSet ConfigSet::parse(std::string_view texts, unsigned n) {
    ConfigSet s(n);
    std::size_t pos = 0;
    auto is_sep = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}';
    };
    while (pos < texts.size()) {
        while (pos < texts.size() && is_sep(texts[pos])) ++pos;
        std::size_t end = pos;
        while (end < texts.size() && !is_sep(texts[end])) ++end;
        if (end > pos) s.insert(Configuration::from_text(texts.substr(pos, end - pos), n).code());
        pos = end;
    }
    return s;
}

bool ConfigSet::contains(Configuration x) const {
    if (x.dimension() != n_) throw DimensionError("configuration dimension mismatch");
    return contains(x.code());
}

void ConfigSet::insert(Configuration x) {
    if (x.dimension() != n_) throw DimensionError("configuration dimension mismatch");
    insert(x.code());
}

std::size_t ConfigSet::size() const noexcept {
    std::size_t total = 0;
    for (Code w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool ConfigSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Code w) { return w == 0; });
}

void ConfigSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void ConfigSet::require_same_dimension(const ConfigSet& other) const {
    if (other.n_ != n_) {
        throw DimensionError("configuration set dimensions differ (" + std::to_string(n_) +
                             " vs " + std::to_string(other.n_) + ")");
    }
}

ConfigSet& ConfigSet::operator|=(const ConfigSet& other) {
    require_same_dimension(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

ConfigSet& ConfigSet::operator&=(const ConfigSet& other) {
    require_same_dimension(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

ConfigSet& ConfigSet::operator-=(const ConfigSet& other) {
    require_same_dimension(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool ConfigSet::is_subset_of(const ConfigSet& other) const {
    require_same_dimension(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool ConfigSet::intersects(const ConfigSet& other) const {
    require_same_dimension(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

std::vector<Code> ConfigSet::codes() const {
    std::vector<Code> out;
    out.reserve(size());
    for_each([&](Code c) { out.push_back(c); });
    return out;
}

Code ConfigSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * 64 + static_cast<Code>(std::countr_zero(words_[w]));
    }
    throw InvalidArgument("first() on an empty configuration set");
}

std::string ConfigSet::to_text() const {
    std::string out;
    for_each([&](Code c) {
        if (!out.empty()) out += ' ';
        out += bnmodes::to_text(c, n_);
    });
    return out;
}

std::ostream& operator<<(std::ostream& os, const ConfigSet& set) {
    return os << '{' << set.to_text() << '}';
}

} // namespace bnmodes
