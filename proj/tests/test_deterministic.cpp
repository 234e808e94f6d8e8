#include <doctest.h>

#include <bnmodes/deterministic.hpp>
#include <bnmodes/error.hpp>
#include <bnmodes/set_update.hpp>

#include "support.hpp"

using namespace bnmodes;

namespace {

std::vector<std::string> texts(const std::vector<Configuration>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.to_text());
    return out;
}

Configuration c(const char* t) { return Configuration::from_text(t); }

} // namespace

TEST_CASE("elementary updates on the example") {
    const BooleanNetwork net = testing::example1();
    CHECK(phi(net, AutomatonSet(3, {1}), c("000")).to_text() == "100");
    CHECK(phi(net, AutomatonSet(3, {2, 3}), c("101")).to_text() == "100");
    for (Code x = 0; x < 8; ++x) CHECK(phi(net, AutomatonSet::none(3), Configuration(3, x)).code() == x);
    CHECK(phi(net, AutomatonSet::all(3), c("010")).to_text() == "101");
}

TEST_CASE("schedules") {
    const BooleanNetwork net = testing::example1();
    const auto bs = Schedule::block_sequential({AutomatonSet(3, {2, 3}), AutomatonSet(3, {1})});
    const std::vector<unsigned> order{3, 1, 2};
    const auto seq = Schedule::sequential(3, order);
    CHECK(schedule_step(net, bs, c("000")).to_text() == "001");
    CHECK(schedule_step(net, seq, c("000")).to_text() == "011");
    CHECK(schedule_step(net, Schedule::parallel(3), c("010")).to_text() == "101");
}

TEST_CASE("trajectories") {
    const BooleanNetwork net = testing::example1();
    CHECK(texts(trajectory(net, Schedule::parallel(3), c("000"), 4)) ==
          std::vector<std::string>{"000", "101", "000", "101", "000"});
    CHECK(texts(trajectory(net, Schedule::parallel(3), c("110"), 0)) == std::vector<std::string>{"110"});
    const auto bs = Schedule::block_sequential({AutomatonSet(3, {2, 3}), AutomatonSet(3, {1})});
    CHECK(texts(trajectory(net, bs, c("001"), 2)) == std::vector<std::string>{"001", "011", "011"});
}

TEST_CASE("schedule validation") {
    CHECK_THROWS_AS(Schedule::block_sequential({AutomatonSet(3, {1, 2}), AutomatonSet(3, {2})}), InvalidArgument);
    CHECK_THROWS_AS(Schedule::block_sequential({AutomatonSet(3, {1, 2})}), InvalidArgument);
    CHECK_THROWS_AS(Schedule::periodic({AutomatonSet(3, {1}), AutomatonSet::none(3)}), InvalidArgument);
    CHECK_THROWS_AS(Schedule::block_sequential({}), InvalidArgument);
    const std::vector<unsigned> repeated{1, 1, 2};
    CHECK_THROWS_AS(Schedule::sequential(3, repeated), InvalidArgument);
    CHECK_NOTHROW(Schedule::periodic({AutomatonSet(3, {1}), AutomatonSet(3, {1, 2}), AutomatonSet(3, {1})}));
}

TEST_CASE("periodic schedules compose in order") {
    const BooleanNetwork net = testing::example1();
    const auto p = Schedule::periodic({AutomatonSet(3, {1}), AutomatonSet(3, {1})});
    for (Code x = 0; x < 8; ++x) {
        const Code once = phi(net, automaton_bit(3, 1), x);
        CHECK(schedule_step(net, p, x) == phi(net, automaton_bit(3, 1), once));
    }
}

TEST_CASE("phi leaves the complement of W untouched and changes exactly the unstable members") {
    std::mt19937_64 rng(17);
    for (unsigned n = 1; n <= 4; ++n) {
        for (int k = 0; k < 30; ++k) {
            const BooleanNetwork net = testing::random_network(n, rng);
            for (Code w = 0; w <= full_mask(n); ++w) {
                for (Code x = 0; x <= full_mask(n); ++x) {
                    const Code y = phi(net, w, x);
                    CHECK(((y ^ x) & ~w) == 0);
                    CHECK((y ^ x) == ((net.image(x) ^ x) & w));
                    CHECK(y == testing::naive_phi(net, w, x));
                }
            }
        }
    }
}

TEST_CASE("ordered partitions are counted by the Fubini numbers") {
    CHECK(all_block_sequential_schedules(1).size() == 1);
    CHECK(all_block_sequential_schedules(2).size() == 3);
    CHECK(all_block_sequential_schedules(3).size() == 13);
    CHECK(all_block_sequential_schedules(4).size() == 75);
}

TEST_CASE("block-sequential targets lie on elementary paths") {
    std::mt19937_64 rng(19);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto schedules = all_block_sequential_schedules(n);
        for (int k = 0; k < 20; ++k) {
            const BooleanNetwork net = testing::random_network(n, rng);
            for (Code x = 0; x <= full_mask(n); ++x) {
                const ConfigSet reach = elementary_reachable(net, x);
                for (const Schedule& s : schedules) CHECK(reach.contains(schedule_step(net, s, x)));
            }
        }
    }
}
