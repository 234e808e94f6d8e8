#include <doctest.h>

#include <bnmodes/dynamics.hpp>
#include <bnmodes/error.hpp>

#include "support.hpp"

using namespace bnmodes;
using testing::set_of;

namespace {

TransitionGraph graph(const BooleanNetwork& net, const char* mode) { return build_graph(net, parse_mode(mode)); }

std::vector<std::string> member_texts(const LimitStructure& s) {
    std::vector<std::string> out;
    for (const auto& l : s.sets) out.push_back(l.members.to_text());
    return out;
}

TransitionGraph from_edges(unsigned n, const std::vector<std::pair<Code, Code>>& edges) {
    return TransitionGraph{relation_from_edges(n, edges), ModeSpec{}};
}

} // namespace

TEST_CASE("graphs of the example") {
    const BooleanNetwork net = testing::example1();
    CHECK(testing::edge_set(graph(net, "parallel").edges) ==
          testing::edge_set("000->101 001->011 010->101 011->011 100->100 101->000 110->100 111->000"));
    CHECK(testing::edge_set(graph(net, "fully-async").edges) ==
          testing::edge_set(delta(fully_async_update(net))));
    CHECK(testing::edge_set(graph(net, "memory:{1}").edges) ==
          testing::edge_set("000->101 001->011 010->101 011->011 100->100 101->{000,100} 110->100 111->{000,100}"));
}

TEST_CASE("deterministic modes have out-degree one") {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 20; ++k) {
        const BooleanNetwork net = testing::random_network(4, rng);
        for (const char* mode : {"parallel", "seq:4,2,1,3", "bs:{1,3};{2,4}", "periodic:{1};{1,2};{3,4}"}) {
            const TransitionGraph g = graph(net, mode);
            for (Code x = 0; x < 16; ++x) CHECK(g.edges.successors(x).size() == 1);
        }
    }
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(testing::example1()) == set_of("011 100", 3));
    CHECK(fixed_points(testing::ffl()) == set_of("110", 3));
    const BooleanNetwork constant = BooleanNetwork::parse("a: 1\nb: 0\nc: 1");
    CHECK(fixed_points(constant) == set_of("101", 3));
}

TEST_CASE("limit sets of the example") {
    const BooleanNetwork net = testing::example1();
    const LimitStructure par = limit_sets(graph(net, "parallel"));
    CHECK(member_texts(par) == std::vector<std::string>{"000 101", "011", "100"});
    CHECK(par.sets[0].kind == LimitSet::Kind::LimitCycle);
    CHECK(par.sets[1].kind == LimitSet::Kind::FixedPoint);
    CHECK(par.sets[2].kind == LimitSet::Kind::FixedPoint);
    CHECK(member_texts(attractors(graph(net, "parallel"))).size() == 3);

    const LimitStructure async = limit_sets(graph(net, "async"));
    CHECK(member_texts(async) == std::vector<std::string>{"011", "100"});
    for (const auto& s : async.sets) CHECK(s.attractor);
}

TEST_CASE("basins") {
    const BooleanNetwork net = testing::example1();
    const TransitionGraph par = graph(net, "parallel");
    CHECK(basin(par, set_of("100", 3)) == set_of("110", 3));
    CHECK(basin(par, set_of("000 101", 3)) == set_of("111 010", 3));
    CHECK_THROWS_AS(basin(par, set_of("110", 3)), InvalidArgument);
    const ConfigSet limit = limit_sets(par).limit_configurations(3);
    for (const auto& s : limit_sets(par).sets) CHECK_FALSE(s.basin->intersects(limit));
}

TEST_CASE("small graphs") {
    const LimitStructure loop = limit_sets(from_edges(1, {{0, 0}, {1, 0}}));
    REQUIRE(loop.sets.size() == 1);
    CHECK(loop.sets[0].kind == LimitSet::Kind::FixedPoint);
    CHECK(loop.sets[0].attractor);

    const TransitionGraph cycle = from_edges(2, {{0, 1}, {1, 3}, {3, 2}, {2, 0}});
    const LimitStructure c = limit_sets(cycle);
    REQUIRE(c.sets.size() == 1);
    CHECK(c.sets[0].kind == LimitSet::Kind::LimitCycle);
    CHECK_FALSE(c.sets[0].attractor);
    CHECK(attractors(cycle).sets.empty());
    CHECK_THROWS_AS(basin(cycle, ConfigSet::universe(2)), InvalidArgument);
}

TEST_CASE("limit sets match the definition") {
    std::mt19937_64 rng(103);
    for (unsigned n = 1; n <= 3; ++n) {
        for (int k = 0; k < 60; ++k) {
            const BooleanNetwork net = testing::random_network(n, rng);
            for (const char* mode : {"parallel", "async", "fully-async", "interval", "mp"}) {
                const TransitionGraph g = graph(net, mode);
                const LimitStructure s = limit_sets(g);
                CHECK(testing::to_std_set(s.limit_configurations(n)) == testing::brute_limit_configurations(g.edges));
                const auto reach = testing::closure_matrix(g.edges);
                for (const auto& l : s.sets) {
                    l.members.for_each([&](Code x) {
                        l.members.for_each([&](Code y) { CHECK(reach[x][y]); });
                    });
                    CHECK((l.kind == LimitSet::Kind::FixedPoint) == (l.members.size() == 1));
                    if (!l.attractor) continue;
                    for (Code x = 0; x <= full_mask(n); ++x) {
                        bool reaches_all = !s.limit_configurations(n).contains(x);
                        l.members.for_each([&](Code y) { reaches_all = reaches_all && reach[x][y]; });
                        CHECK(l.basin->contains(x) == reaches_all);
                    }
                }
            }
        }
    }
}

TEST_CASE("asynchronous limit sets are the minimal closed sets") {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 40; ++k) {
        const BooleanNetwork net = testing::random_network(3, rng);
        const SetUpdate e = elementary_update(net);
        std::vector<ConfigSet> closed;
        for (Code bits = 1; bits < 256; ++bits) {
            ConfigSet x(3);
            for (Code c = 0; c < 8; ++c) {
                if ((bits >> c) & 1u) x.insert(c);
            }
            if (e(x) == x) closed.push_back(x);
        }
        std::vector<std::string> minimal;
        for (const ConfigSet& x : closed) {
            bool is_min = true;
            for (const ConfigSet& y : closed) {
                if (y != x && y.is_subset_of(x)) is_min = false;
            }
            if (is_min) minimal.push_back(x.to_text());
        }
        std::sort(minimal.begin(), minimal.end());
        std::vector<std::string> found = member_texts(limit_sets(graph(net, "async")));
        std::sort(found.begin(), found.end());
        CHECK(found == minimal);
    }
}

TEST_CASE("reachability") {
    const BooleanNetwork net = testing::example1();
    const Configuration zero = Configuration::from_text("000");
    const Configuration ones = Configuration::from_text("111");
    CHECK_FALSE(reachable(graph(net, "async"), zero, ones).reachable);
    const Reachability r = reachable(graph(net, "interval"), zero, ones);
    CHECK(r.reachable);
    REQUIRE(r.witness.size() == 2);
    CHECK(r.witness.back() == ones);
    const Reachability self = reachable(graph(net, "async"), ones, ones);
    CHECK(self.reachable);
    CHECK(self.witness.size() == 1);

    const Reachability path = reachable(graph(net, "parallel"), Configuration::from_text("111"),
                                        Configuration::from_text("101"));
    REQUIRE(path.reachable);
    std::vector<std::string> steps;
    for (const auto& c : path.witness) steps.push_back(c.to_text());
    CHECK(steps == std::vector<std::string>{"111", "000", "101"});
    CHECK_THROWS_AS(reachable(graph(net, "async"), Configuration::from_text("00"), ones), DimensionError);
}

TEST_CASE("shortest witness with ties to the lowest code") {
    // 0 -> {1, 2}, 1 -> 3, 2 -> 3: both routes have length two.
    const TransitionGraph g = from_edges(2, {{0, 2}, {0, 1}, {1, 3}, {2, 3}});
    const Reachability r = reachable(g, Configuration(2, 0), Configuration(2, 3));
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness[1].code() == 1);
}

TEST_CASE("reachability agrees with the closure matrix") {
    std::mt19937_64 rng(109);
    for (int k = 0; k < 20; ++k) {
        const BooleanNetwork net = testing::random_network(3, rng);
        const TransitionGraph g = graph(net, "fully-async");
        const auto reach = testing::closure_matrix(g.edges);
        for (Code x = 0; x < 8; ++x) {
            for (Code y = 0; y < 8; ++y) {
                const Reachability r = reachable(g, Configuration(3, x), Configuration(3, y));
                CHECK(r.reachable == reach[x][y]);
                if (!r.reachable) continue;
                CHECK(r.witness.front().code() == x);
                CHECK(r.witness.back().code() == y);
                for (std::size_t s = 1; s < r.witness.size(); ++s) {
                    CHECK(g.edges.contains(r.witness[s - 1].code(), r.witness[s].code()));
                }
            }
        }
    }
}

TEST_CASE("comparing modes") {
    const BooleanNetwork net = testing::example1();
    const Comparison fa = compare(graph(net, "fully-async"), graph(net, "async"));
    CHECK(fa.relation == Comparison::Relation::FirstSubset);
    CHECK(fa.only_first.empty());
    CHECK(fa.only_second.size() == 10);
    CHECK(compare(graph(net, "async"), graph(net, "mp")).relation == Comparison::Relation::FirstSubset);
    CHECK(compare(graph(net, "mp"), graph(net, "async")).relation == Comparison::Relation::SecondSubset);
    CHECK(compare(graph(net, "mp"), graph(net, "mp")).relation == Comparison::Relation::Equal);
    CHECK(compare(graph(net, "seq:3,1,2"), graph(net, "bs:{2,3};{1}")).relation ==
          Comparison::Relation::Incomparable);
    CHECK(compare(graph(net, "interval"), graph(net, "mp"), true).relation == Comparison::Relation::FirstSubset);
    std::mt19937_64 rng(1);
    const BooleanNetwork small = testing::random_network(2, rng);
    CHECK_THROWS_AS(compare(graph(net, "async"), graph(small, "async")), DimensionError);
}

TEST_CASE("mode tower") {
    auto tower = [](const BooleanNetwork& net) {
        const TransitionRelation par = graph(net, "parallel").edges;
        const TransitionRelation fa = graph(net, "fully-async").edges;
        const TransitionRelation e = graph(net, "async").edges;
        const TransitionRelation i = graph(net, "interval").edges;
        const TransitionRelation m = graph(net, "mp").edges;
        CHECK(par.is_subset_of(e));
        CHECK(fa.is_subset_of(e));
        CHECK(e.is_subset_of(i));
        CHECK(e.is_subset_of(m));
    };
    for (std::uint64_t k = 0; k < testing::network_count(2); ++k) tower(testing::enumerated_network(2, k));
    std::mt19937_64 rng(113);
    for (int k = 0; k < 100; ++k) tower(testing::random_network(3, rng));
    for (int k = 0; k < 30; ++k) tower(testing::random_network(4, rng));
}

TEST_CASE("graph construction cap") {
    std::mt19937_64 rng(127);
    const BooleanNetwork net = testing::random_network(6, rng);
    Limits tight;
    tight.whole_space = 5;
    CHECK_THROWS_AS(build_graph(net, parse_mode("async"), tight), CapExceeded);
    CHECK_THROWS_AS(build_graph(net, parse_mode("seq:1,2,3"), Limits{}), InvalidArgument);
}
