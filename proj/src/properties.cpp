#include "bnmodes/properties.hpp"

#include <algorithm>
#include <random>

#include "bnmodes/deterministic.hpp"
#include "bnmodes/interval.hpp"
#include "bnmodes/memory.hpp"
#include "bnmodes/most_permissive.hpp"
#include "bnmodes/set_update.hpp"

namespace bnmodes {

namespace {

class Tally {
public:
    Tally(std::string name, bool informational = false) {
        result_.name = std::move(name);
        result_.informational = informational;
    }

    void record(bool holds, const std::string& counterexample) {
        ++result_.checked;
        if (holds) return;
        if (result_.violations++ == 0) result_.detail = counterexample;
    }

    template <class F>
    void record_lazy(bool holds, F&& describe) {
        ++result_.checked;
        if (holds) return;
        if (result_.violations++ == 0) result_.detail = describe();
    }

    PropertyResult skip(std::string why) {
        result_.checked = 0;
        result_.detail = std::move(why);
        return result_;
    }

    PropertyResult done() const { return result_; }

private:
    PropertyResult result_;
};

std::string brace(const ConfigSet& s) { return "{" + s.to_text() + "}"; }

ConfigSet random_set(unsigned n, std::mt19937_64& rng) {
    const std::size_t count = std::size_t{1} << n;
    std::uniform_int_distribution<Code> pick(0, count - 1);
    std::uniform_int_distribution<std::size_t> size(1, std::min<std::size_t>(count, 5));
    ConfigSet out(n);
    for (std::size_t k = size(rng); k > 0; --k) out.insert(pick(rng));
    return out;
}

bool single_swaps_closed(const ConfigSet& cube) {
    const unsigned n = cube.dimension();
    bool closed = true;
    cube.for_each([&](Code x) {
        cube.for_each([&](Code y) {
            for (unsigned i = 1; i <= n && closed; ++i) {
                const Code bit = automaton_bit(n, i);
                if (!cube.contains((x & ~bit) | (y & bit))) closed = false;
            }
        });
    });
    return closed;
}

std::vector<MemoryVector> sample_memory_vectors(unsigned n, std::size_t wanted, std::mt19937_64& rng) {
    std::vector<MemoryVector> out;
    std::size_t total = 1;
    for (unsigned i = 0; i < n && total <= wanted; ++i) total *= 3;
    if (total <= wanted) {
        std::vector<unsigned> m(n, 1);
        for (;;) {
            out.emplace_back(m);
            unsigned i = 0;
            while (i < n && m[i] == 3) m[i++] = 1;
            if (i == n) break;
            ++m[i];
        }
        return out;
    }
    std::uniform_int_distribution<unsigned> value(1, 3);
    for (std::size_t k = 0; k < wanted; ++k) {
        std::vector<unsigned> m(n);
        for (auto& v : m) v = value(rng);
        out.emplace_back(std::move(m));
    }
    return out;
}

std::string vector_text(const MemoryVector& m) {
    std::string s = "(";
    for (unsigned v : m.values()) s += (s.size() > 1 ? "," : "") + std::to_string(v);
    return s + ")";
}

} // namespace

std::vector<PropertyResult> check_properties(const BooleanNetwork& net, const PropertyOptions& options) {
    const unsigned n = net.dimension();
    std::vector<PropertyResult> results;
    if (n > options.limits.whole_space) {
        Tally t("whole-space properties");
        results.push_back(t.skip("dimension exceeds the whole-space cap"));
        return results;
    }
    const std::size_t count = std::size_t{1} << n;
    const bool mp_ok = n <= options.limits.most_permissive;
    std::mt19937_64 rng(options.seed);

    auto text = [n](Code x) { return to_text(x, n); };

    // Per-singleton images, shared by the checks below.
    IntervalEngine interval(net);
    const SetUpdate e_update = elementary_update(net);
    const SetUpdate fa_update = fully_async_update(net);
    const SetUpdate mp = mp_ok ? mp_update(net, options.limits.most_permissive) : SetUpdate(n, {});
    std::vector<ConfigSet> e_of, i_of, mp_of;
    for (Code x = 0; x < count; ++x) {
        e_of.push_back(e_update.on(Configuration(n, x)));
        i_of.push_back(interval.interval_set(ConfigSet::singleton(Configuration(n, x))));
        if (mp_ok) mp_of.push_back(mp.on(Configuration(n, x)));
    }
    auto union_of = [n](const std::vector<ConfigSet>& images, const ConfigSet& x) {
        ConfigSet out(n);
        x.for_each([&](Code c) { out |= images[c]; });
        return out;
    };

    {
        Tally t("interval preserves fixed points");
        for (Code x = 0; x < count; ++x) {
            const bool fixed = net.image(x) == x;
            const bool stays = i_of[x] == ConfigSet::singleton(Configuration(n, x));
            t.record_lazy(fixed == stays, [&] { return text(x) + " -> " + brace(i_of[x]); });
        }
        results.push_back(t.done());
    }
    {
        Tally t("mp preserves fixed points");
        if (!mp_ok) {
            results.push_back(t.skip("dimension exceeds the most-permissive cap"));
        } else {
            for (Code x = 0; x < count; ++x) {
                const bool fixed = net.image(x) == x;
                const bool stays = mp_of[x] == ConfigSet::singleton(Configuration(n, x));
                t.record_lazy(fixed == stays, [&] { return text(x) + " -> " + brace(mp_of[x]); });
            }
            results.push_back(t.done());
        }
    }
    {
        Tally t("elementary within interval");
        for (Code x = 0; x < count; ++x) {
            t.record_lazy(e_of[x].is_subset_of(i_of[x]), [&] {
                return text(x) + ": " + brace(e_of[x] - i_of[x]) + " missing";
            });
        }
        results.push_back(t.done());
    }
    {
        Tally t("elementary within mp");
        if (!mp_ok) {
            results.push_back(t.skip("dimension exceeds the most-permissive cap"));
        } else {
            for (Code x = 0; x < count; ++x) {
                t.record_lazy(e_of[x].is_subset_of(mp_of[x]), [&] {
                    return text(x) + ": " + brace(e_of[x] - mp_of[x]) + " missing";
                });
            }
            results.push_back(t.done());
        }
    }
    {
        Tally t("mp idempotent on singletons");
        if (!mp_ok) {
            results.push_back(t.skip("dimension exceeds the most-permissive cap"));
        } else {
            for (Code x = 0; x < count; ++x) {
                const ConfigSet twice = union_of(mp_of, mp_of[x]);
                t.record_lazy(twice == mp_of[x], [&] { return text(x) + ": " + brace(twice - mp_of[x]) + " added"; });
            }
            results.push_back(t.done());
        }
    }
    {
        Tally t("fully-async within elementary");
        for (Code x = 0; x < count; ++x) {
            const ConfigSet fa = fa_update.on(Configuration(n, x));
            t.record_lazy(fa.is_subset_of(e_of[x]), [&] { return text(x) + ": " + brace(fa - e_of[x]); });
        }
        results.push_back(t.done());
    }
    {
        Tally t("parallel within elementary");
        for (Code x = 0; x < count; ++x) {
            const Code y = net.image(x);
            t.record_lazy(e_of[x].contains(y), [&] { return text(x) + " -> " + text(y); });
        }
        results.push_back(t.done());
    }
    {
        Tally t("memory-set within elementary");
        for (Code mask = 0; mask <= full_mask(n); ++mask) {
            const AutomatonSet mb = AutomatonSet::from_mask(n, mask);
            const SetUpdate mem = memory_set_update(net, mb);
            for (Code x = 0; x < count; ++x) {
                const ConfigSet image = mem.on(Configuration(n, x));
                t.record_lazy(image.is_subset_of(e_of[x]), [&] {
                    return "Mb=" + mb.to_text() + ", " + text(x) + ": " + brace(image - e_of[x]);
                });
            }
        }
        results.push_back(t.done());
    }
    {
        Tally t("memory vector matches its memory set");
        for (const MemoryVector& m : sample_memory_vectors(n, options.memory_vectors, rng)) {
            const SetUpdate full = memory_update(net, m);
            const SetUpdate reduced = memory_set_update(net, m.memory_set());
            for (Code x = 0; x < count; ++x) {
                const ConfigSet a = full.on(Configuration(n, x));
                const ConfigSet b = reduced.on(Configuration(n, x));
                t.record_lazy(a == b, [&] {
                    return "M=" + vector_text(m) + ", " + text(x) + ": " + brace(a) + " vs " + brace(b);
                });
            }
        }
        results.push_back(t.done());
    }
    {
        Tally t("block-sequential targets are elementary-reachable");
        if (n > options.max_schedule_dimension) {
            results.push_back(t.skip("too many ordered partitions"));
        } else {
            std::vector<ConfigSet> closure;
            for (Code x = 0; x < count; ++x) closure.push_back(elementary_reachable(net, x));
            for (const Schedule& s : all_block_sequential_schedules(n)) {
                for (Code x = 0; x < count; ++x) {
                    const Code y = schedule_step(net, s, x);
                    t.record_lazy(closure[x].contains(y), [&] { return text(x) + " -> " + text(y); });
                }
            }
            results.push_back(t.done());
        }
    }
    {
        Tally extensive("hypercube closure extensive");
        Tally idempotent("hypercube closure idempotent");
        Tally monotone("hypercube closure monotone");
        Tally cube("hypercube closure is a hypercube");
        for (std::size_t k = 0; k < options.random_sets; ++k) {
            const ConfigSet x = random_set(n, rng);
            const ConfigSet y = x | random_set(n, rng);
            const ConfigSet cx = hypercube_closure(x);
            const ConfigSet cy = hypercube_closure(y);
            extensive.record_lazy(x.is_subset_of(cx), [&] { return brace(x); });
            idempotent.record_lazy(hypercube_closure(cx) == cx, [&] { return brace(x); });
            monotone.record_lazy(cx.is_subset_of(cy), [&] { return brace(x) + " within " + brace(y); });
            cube.record_lazy(single_swaps_closed(cx), [&] { return brace(cx); });
        }
        results.push_back(extensive.done());
        results.push_back(idempotent.done());
        results.push_back(monotone.done());
        results.push_back(cube.done());
    }
    {
        Tally t("set updates decompose over singletons");
        const MemoryVector canonical = MemoryVector::canonical(AutomatonSet::from_mask(n, rng() & full_mask(n)));
        for (std::size_t k = 0; k < options.random_sets; ++k) {
            const ConfigSet x = random_set(n, rng);
            auto check = [&](const char* what, const ConfigSet& whole, const std::vector<ConfigSet>& parts) {
                ConfigSet joined(n);
                for (const ConfigSet& p : parts) joined |= p;
                t.record_lazy(whole == joined, [&] { return std::string(what) + " on " + brace(x); });
            };
            auto per_member = [&](auto&& op) {
                std::vector<ConfigSet> parts;
                x.for_each([&](Code c) { parts.push_back(op(ConfigSet::singleton(Configuration(n, c)))); });
                return parts;
            };
            check("elementary", phi_e_set(net, x), per_member([&](const ConfigSet& s) { return phi_e_set(net, s); }));
            check("fully-async", phi_fa_set(net, x),
                  per_member([&](const ConfigSet& s) { return phi_fa_set(net, s); }));
            check("interval", interval_set(net, x),
                  per_member([&](const ConfigSet& s) { return interval_set(net, s); }));
            check("memory", phi_memory_set(net, canonical, x),
                  per_member([&](const ConfigSet& s) { return phi_memory_set(net, canonical, s); }));
            check("memory-set", phi_mb_set(net, canonical.memory_set(), x),
                  per_member([&](const ConfigSet& s) { return phi_mb_set(net, canonical.memory_set(), s); }));
            if (mp_ok) check("mp", mp_set(net, x), per_member([&](const ConfigSet& s) { return mp_set(net, s); }));
        }
        results.push_back(t.done());
    }

    if (!options.informational) return results;

    {
        Tally t("interval idempotent on singletons", true);
        for (Code x = 0; x < count; ++x) {
            const ConfigSet twice = union_of(i_of, i_of[x]);
            t.record_lazy(twice == i_of[x], [&] { return text(x) + ": " + brace(twice - i_of[x]) + " added"; });
        }
        results.push_back(t.done());
    }
    {
        Tally t("interval within mp", true);
        if (!mp_ok) {
            results.push_back(t.skip("dimension exceeds the most-permissive cap"));
        } else {
            for (Code x = 0; x < count; ++x) {
                t.record_lazy(i_of[x].is_subset_of(mp_of[x]),
                              [&] { return text(x) + ": " + brace(i_of[x] - mp_of[x]) + " outside mp"; });
            }
            results.push_back(t.done());
        }
    }
    {
        Tally t("mp on whole sets matches the singleton union", true);
        if (!mp_ok) {
            results.push_back(t.skip("dimension exceeds the most-permissive cap"));
        } else {
            for (std::size_t k = 0; k < options.random_sets; ++k) {
                const ConfigSet x = random_set(n, rng);
                const ConfigSet whole = mp_set_whole(net, x, options.limits.most_permissive);
                const ConfigSet joined = union_of(mp_of, x);
                t.record_lazy(whole == joined, [&] {
                    return brace(x) + ": whole " + brace(whole) + ", union " + brace(joined);
                });
            }
            results.push_back(t.done());
        }
    }
    return results;
}

bool all_ok(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.ok(); });
}

std::string to_string(const PropertyResult& r) {
    const std::string checked = std::to_string(r.checked);
    if (r.skipped()) return "SKIP " + r.name + ": " + r.detail;
    if (r.informational) {
        std::string s = "INFO " + r.name + ": " + std::to_string(r.checked - r.violations) + " of " + checked +
                        " held";
        if (r.violations > 0) s += "; first exception " + r.detail;
        return s;
    }
    if (r.violations == 0) return "PASS " + r.name + " (" + checked + " checked)";
    return "FAIL " + r.name + ": " + std::to_string(r.violations) + " of " + checked + " violated; " + r.detail;
}

} // namespace bnmodes
