#include "bnmodes/mode.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bnmodes/error.hpp"
#include "bnmodes/interval.hpp"
#include "bnmodes/memory.hpp"
#include "bnmodes/most_permissive.hpp"

namespace bnmodes {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { throw ParseError("mode: " + what, 0, 0); }

bool has_duplicates(std::vector<unsigned> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

// True when the values are exactly 1..k for k = their count.
bool is_contiguous_from_one(std::vector<unsigned> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] != k + 1) return false;
    }
    return true;
}

std::vector<unsigned> flatten(const std::vector<std::vector<unsigned>>& blocks) {
    std::vector<unsigned> all;
    for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    return all;
}

void check_blocks(std::vector<std::vector<unsigned>>& blocks, const char* kind) {
    if (blocks.empty()) malformed(std::string(kind) + " needs at least one block");
    for (auto& b : blocks) {
        if (b.empty()) malformed(std::string(kind) + " blocks must be non-empty");
        for (unsigned i : b) {
            if (i == 0) malformed("automaton indices are 1-based");
        }
        if (has_duplicates(b)) malformed(std::string(kind) + " block lists an automaton twice");
        std::sort(b.begin(), b.end());
    }
}

unsigned parse_index(std::string_view token, const char* what) {
    unsigned value = 0;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
        malformed(std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

std::vector<unsigned> parse_list(std::string_view text, const char* what) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_index(text.substr(start, comma - start), what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<unsigned> parse_braced(std::string_view text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        malformed("expected a braced index set like {1,2}, got '" + std::string(text) + "'");
    }
    return parse_list(text.substr(1, text.size() - 2), "an automaton index");
}

std::vector<std::vector<unsigned>> parse_blocks(std::string_view text) {
    std::vector<std::vector<unsigned>> blocks;
    std::size_t start = 0;
    for (;;) {
        const std::size_t semi = text.find(';', start);
        blocks.push_back(parse_braced(text.substr(start, semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return blocks;
}

std::string join(const std::vector<unsigned>& v, char sep) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(v[k]);
    }
    return out;
}

std::string braced_blocks(const std::vector<std::vector<unsigned>>& blocks) {
    std::string out;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (k) out += ';';
        out += '{' + join(blocks[k], ',') + '}';
    }
    return out;
}

void require_within(const std::vector<unsigned>& indices, unsigned n) {
    for (unsigned i : indices) {
        if (i < 1 || i > n) {
            throw InvalidArgument("mode references automaton " + std::to_string(i) +
                                  " but the network has " + std::to_string(n));
        }
    }
}

std::vector<AutomatonSet> to_sets(const std::vector<std::vector<unsigned>>& blocks, unsigned n) {
    std::vector<AutomatonSet> out;
    for (const auto& b : blocks) out.emplace_back(n, b);
    return out;
}

} // namespace

ModeSpec::ModeSpec(Variant v) : value_(std::move(v)) {
    std::visit(overloaded{
                   [](mode::Sequential& m) {
                       if (m.order.empty() || !is_contiguous_from_one(m.order)) {
                           malformed("seq order is not a permutation");
                       }
                   },
                   [](mode::BlockSequential& m) {
                       check_blocks(m.blocks, "bs");
                       if (!is_contiguous_from_one(flatten(m.blocks))) {
                           malformed("bs blocks are not a partition");
                       }
                   },
                   [](mode::Periodic& m) { check_blocks(m.blocks, "periodic"); },
                   [](mode::Memory& m) {
                       for (unsigned i : m.memory_set) {
                           if (i == 0) malformed("automaton indices are 1-based");
                       }
                       if (has_duplicates(m.memory_set)) malformed("memory set lists an automaton twice");
                       std::sort(m.memory_set.begin(), m.memory_set.end());
                   },
                   [](mode::MemoryVector& m) {
                       if (m.maxima.empty()) malformed("memory vector must not be empty");
                       for (unsigned v : m.maxima) {
                           if (v < 1) malformed("memory values must be >= 1");
                       }
                   },
                   [](auto&) {},
               },
               value_);
}

bool ModeSpec::is_deterministic() const noexcept {
    return std::holds_alternative<mode::Parallel>(value_) ||
           std::holds_alternative<mode::Sequential>(value_) ||
           std::holds_alternative<mode::BlockSequential>(value_) ||
           std::holds_alternative<mode::Periodic>(value_);
}

void ModeSpec::validate(unsigned n) const {
    std::visit(overloaded{
                   [n](const mode::Sequential& m) {
                       if (m.order.size() != n) {
                           throw InvalidArgument("seq must list all " + std::to_string(n) + " automata");
                       }
                   },
                   [n](const mode::BlockSequential& m) {
                       if (flatten(m.blocks).size() != n) {
                           throw InvalidArgument("bs blocks must partition all " + std::to_string(n) +
                                                 " automata");
                       }
                   },
                   [n](const mode::Periodic& m) { require_within(flatten(m.blocks), n); },
                   [n](const mode::Memory& m) { require_within(m.memory_set, n); },
                   [n](const mode::MemoryVector& m) {
                       if (m.maxima.size() != n) {
                           throw InvalidArgument("memory vector must have " + std::to_string(n) + " entries");
                       }
                   },
                   [](const auto&) {},
               },
               value_);
}

std::string ModeSpec::to_string() const {
    return std::visit(overloaded{
                          [](const mode::Parallel&) -> std::string { return "parallel"; },
                          [](const mode::Sequential& m) { return "seq:" + join(m.order, ','); },
                          [](const mode::BlockSequential& m) { return "bs:" + braced_blocks(m.blocks); },
                          [](const mode::Periodic& m) { return "periodic:" + braced_blocks(m.blocks); },
                          [](const mode::FullyAsync&) -> std::string { return "fully-async"; },
                          [](const mode::Async&) -> std::string { return "async"; },
                          [](const mode::Memory& m) { return "memory:{" + join(m.memory_set, ',') + "}"; },
                          [](const mode::MemoryVector& m) { return "memory-vector:" + join(m.maxima, ','); },
                          [](const mode::Interval&) -> std::string { return "interval"; },
                          [](const mode::MostPermissive&) -> std::string { return "mp"; },
                      },
                      value_);
}

ModeSpec parse_mode(std::string_view raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
    const std::size_t colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    const bool has_args = colon != std::string::npos;

    auto no_args = [&](ModeSpec spec) {
        if (has_args) malformed("'" + kind + "' takes no parameters");
        return spec;
    };
    if (kind == "parallel") return no_args(mode::Parallel{});
    if (kind == "fully-async") return no_args(mode::FullyAsync{});
    if (kind == "async") return no_args(mode::Async{});
    if (kind == "interval") return no_args(mode::Interval{});
    if (kind == "mp") return no_args(mode::MostPermissive{});

    if (!has_args) {
        if (kind == "seq" || kind == "bs" || kind == "periodic" || kind == "memory" ||
            kind == "memory-vector") {
            malformed("'" + kind + "' needs parameters after ':'");
        }
        malformed("unknown mode '" + kind + "'");
    }
    if (kind == "seq") return mode::Sequential{parse_list(args, "an automaton index")};
    if (kind == "bs") return mode::BlockSequential{parse_blocks(args)};
    if (kind == "periodic") return mode::Periodic{parse_blocks(args)};
    if (kind == "memory") return mode::Memory{parse_braced(args)};
    if (kind == "memory-vector") {
        if (args.empty()) malformed("memory vector must not be empty");
        return mode::MemoryVector{parse_list(args, "a memory value")};
    }
    malformed("unknown mode '" + kind + "'");
}

Schedule schedule_of(const ModeSpec& spec, unsigned n) {
    spec.validate(n);
    return std::visit(overloaded{
                          [n](const mode::Parallel&) { return Schedule::parallel(n); },
                          [n](const mode::Sequential& m) { return Schedule::sequential(n, m.order); },
                          [n](const mode::BlockSequential& m) {
                              return Schedule::block_sequential(to_sets(m.blocks, n));
                          },
                          [n](const mode::Periodic& m) { return Schedule::periodic(to_sets(m.blocks, n)); },
                          [&spec](const auto&) -> Schedule {
                              throw InvalidArgument("mode '" + spec.to_string() + "' is not deterministic");
                          },
                      },
                      spec.value());
}

SetUpdate make_set_update(const BooleanNetwork& net, const ModeSpec& spec, const Limits& limits) {
    const unsigned n = net.dimension();
    spec.validate(n);
    if (spec.is_deterministic()) return deterministic_update(net, schedule_of(spec, n));
    return std::visit(overloaded{
                          [&](const mode::FullyAsync&) { return fully_async_update(net); },
                          [&](const mode::Async&) { return elementary_update(net); },
                          [&](const mode::Memory& m) {
                              return memory_set_update(net, AutomatonSet(n, m.memory_set));
                          },
                          [&](const mode::MemoryVector& m) {
                              return memory_update(net, bnmodes::MemoryVector(m.maxima));
                          },
                          [&](const mode::Interval&) {
                              if (n > limits.whole_space) {
                                  throw CapExceeded("dimension " + std::to_string(n) +
                                                    " exceeds the whole-space cap");
                              }
                              return interval_update(net);
                          },
                          [&](const mode::MostPermissive&) { return mp_update(net, limits.most_permissive); },
                          [&](const auto&) -> SetUpdate { throw std::logic_error("unreachable mode"); },
                      },
                      spec.value());
}

} // namespace bnmodes
