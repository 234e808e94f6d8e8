#pragma once

#include <bnmodes/config.hpp>
#include <bnmodes/dynamics.hpp>
#include <bnmodes/expr.hpp>
#include <bnmodes/network.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using namespace bnmodes;

inline constexpr const char* kExample1 = "x1: !x3\nx2: !x1 & x3\nx3: !x1\n";
inline constexpr const char* kFfl = "a: 1\nb: a\nc: !a & b\n";

inline BooleanNetwork example1() { return BooleanNetwork::parse(kExample1); }
inline BooleanNetwork ffl() { return BooleanNetwork::parse(kFfl); }

inline Code code(const std::string& text) { return Configuration::from_text(text).code(); }

inline ConfigSet set_of(const std::string& texts, unsigned n) { return ConfigSet::parse(texts, n); }

// "000->101 001->011" or "000->{000,001}" style edge lists.
inline std::set<std::pair<Code, Code>> edge_set(const std::string& text) {
    std::set<std::pair<Code, Code>> out;
    std::istringstream in(text);
    for (std::string item; in >> item;) {
        const auto arrow = item.find("->");
        const Code src = code(item.substr(0, arrow));
        std::string rest = item.substr(arrow + 2);
        if (!rest.empty() && rest.front() == '{') rest = rest.substr(1, rest.size() - 2);
        std::istringstream targets(rest);
        for (std::string t; std::getline(targets, t, ',');) out.emplace(src, code(t));
    }
    return out;
}

inline std::set<std::pair<Code, Code>> edge_set(const TransitionRelation& r, bool loops = true) {
    std::set<std::pair<Code, Code>> out;
    for (const auto& e : r.edges()) {
        if (loops || e.first != e.second) out.insert(e);
    }
    return out;
}

inline std::string describe(const std::set<std::pair<Code, Code>>& edges, unsigned n) {
    std::string s;
    for (const auto& [x, y] : edges) s += to_text(x, n) + "->" + to_text(y, n) + " ";
    return s;
}

inline BooleanNetwork random_network(unsigned n, std::mt19937_64& rng) {
    std::vector<Code> images(std::size_t{1} << n);
    std::uniform_int_distribution<Code> pick(0, full_mask(n));
    for (auto& y : images) y = pick(rng);
    return BooleanNetwork::from_images(n, images);
}

// Network number `index` among all (2^n)^(2^n) maps, read as digits in base 2^n.
inline BooleanNetwork enumerated_network(unsigned n, std::uint64_t index) {
    std::vector<Code> images(std::size_t{1} << n);
    for (auto& y : images) {
        y = index & full_mask(n);
        index >>= n;
    }
    return BooleanNetwork::from_images(n, images);
}

inline std::uint64_t network_count(unsigned n) { return std::uint64_t{1} << (n << n); }

// ---- independent oracles: straight from the definitions, no shared code paths ----

// f(x) evaluated through the expressions rather than the compiled table.
inline Code eval_image(const BooleanNetwork& net, Code x) {
    const unsigned n = net.dimension();
    Code y = 0;
    for (unsigned i = 1; i <= n; ++i) {
        if (eval(net.function(i), Configuration(n, x))) y |= Code{1} << (n - i);
    }
    return y;
}

inline Code naive_phi(const BooleanNetwork& net, Code w, Code x) {
    const unsigned n = net.dimension();
    const Code fx = eval_image(net, x);
    Code y = 0;
    for (unsigned i = 1; i <= n; ++i) {
        const Code bit = Code{1} << (n - i);
        y |= ((w & bit) ? fx : x) & bit;
    }
    return y;
}

inline std::set<Code> naive_elementary(const BooleanNetwork& net, Code x) {
    std::set<Code> out;
    for (Code w = 1; w <= full_mask(net.dimension()); ++w) out.insert(naive_phi(net, w, x));
    return out;
}

// Interval recursion, unmemoized, on std::set.
struct NaiveInterval {
    const BooleanNetwork& net;

    std::set<Code> psi(Code held, const std::set<Code>& xs) const {
        const unsigned n = net.dimension();
        std::set<Code> out = xs;
        for (Code x : xs) {
            const Code fx = eval_image(net, x);
            for (unsigned i = 1; i <= n; ++i) {
                const Code bit = Code{1} << (n - i);
                if ((held & bit) || ((fx ^ x) & bit) == 0) continue;
                for (Code y : commit(held, i, x)) out.insert(y);
            }
        }
        return out;
    }

    std::set<Code> commit(Code held, unsigned i, Code x) const {
        const Code bit = Code{1} << (net.dimension() - i);
        std::set<Code> cur{x};
        for (;;) {
            std::set<Code> next = psi(held | bit, cur);
            if (next == cur) break;
            cur = std::move(next);
        }
        std::set<Code> out;
        for (Code y : cur) out.insert(y ^ bit);
        return out;
    }
};

// Reflexive-transitive closure by Warshall.
inline std::vector<std::vector<bool>> closure_matrix(const TransitionRelation& r) {
    const std::size_t m = r.vertex_count();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (Code x = 0; x < m; ++x) {
        reach[x][x] = true;
        for (Code y : r.successors(x)) reach[x][y] = true;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < m; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    return reach;
}

// x is a limit configuration iff every y reachable from x reaches x back.
inline std::set<Code> brute_limit_configurations(const TransitionRelation& r) {
    const auto reach = closure_matrix(r);
    std::set<Code> out;
    for (Code x = 0; x < r.vertex_count(); ++x) {
        bool limit = true;
        for (Code y = 0; y < r.vertex_count(); ++y) {
            if (reach[x][y] && !reach[y][x]) limit = false;
        }
        if (limit) out.insert(x);
    }
    return out;
}

// Smallest sub-cube containing xs, by trying all 3^n cubes.
inline std::set<Code> brute_hypercube(unsigned n, const std::set<Code>& xs) {
    std::set<Code> best;
    bool found = false;
    for (Code free = 0; free <= full_mask(n); ++free) {
        for (Code base = 0; base <= full_mask(n); ++base) {
            if (base & free) continue;
            std::set<Code> cube;
            for (Code y = 0; y <= full_mask(n); ++y) {
                if ((y & ~free) == base) cube.insert(y);
            }
            bool covers = true;
            for (Code x : xs) covers = covers && cube.count(x);
            if (covers && (!found || cube.size() < best.size())) {
                best = cube;
                found = true;
            }
        }
    }
    return best;
}

// The coupled MBN update (x, d) -> (y, d') exactly as written in the definition.
inline std::pair<Code, std::vector<unsigned>> literal_mbn_step(const BooleanNetwork& net,
                                                                  const std::vector<unsigned>& m, Code x,
                                                                  const std::vector<unsigned>& d) {
    const unsigned n = net.dimension();
    const Code fx = eval_image(net, x);
    std::vector<unsigned> next(n);
    Code y = 0;
    for (unsigned i = 1; i <= n; ++i) {
        const bool fi = (fx >> (n - i)) & 1u;
        const unsigned di = d[i - 1];
        unsigned& ni = next[i - 1];
        if (!fi && di == 0) ni = 0;
        else if (!fi) ni = di - 1;
        else ni = m[i - 1];
        const bool yi = ni >= 1 ? true : fi;
        if (yi) y |= Code{1} << (n - i);
    }
    return {y, next};
}

// All delay vectors d consistent with x under m.
inline std::vector<std::vector<unsigned>> literal_alpha(unsigned n, const std::vector<unsigned>& m, Code x) {
    std::vector<std::vector<unsigned>> out{{}};
    for (unsigned i = 1; i <= n; ++i) {
        const bool xi = (x >> (n - i)) & 1u;
        std::vector<std::vector<unsigned>> grown;
        for (const auto& prefix : out) {
            if (!xi) {
                auto d = prefix;
                d.push_back(0);
                grown.push_back(std::move(d));
                continue;
            }
            for (unsigned v = 1; v <= m[i - 1]; ++v) {
                auto d = prefix;
                d.push_back(v);
                grown.push_back(std::move(d));
            }
        }
        out = std::move(grown);
    }
    return out;
}

inline std::set<Code> to_std_set(const ConfigSet& s) {
    std::set<Code> out;
    s.for_each([&](Code c) { out.insert(c); });
    return out;
}

} // namespace testing
