#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "scaffold/poset.hpp"
#include "scaffold/random.hpp"

using namespace scaffold;

TEST_SUITE("poset") {

TEST_CASE("canonical order is topological with name tie-breaks") {
    const Poset q = Poset::from_names({"c", "b", "a"}, {{"c", "a"}});
    CHECK(q.names() == std::vector<std::string>{"b", "c", "a"});
    CHECK(q.less(q.index("c"), q.index("a")));
    CHECK_FALSE(q.comparable(q.index("b"), q.index("a")));
}

TEST_CASE("transitive reduction drops implied edges") {
    const Poset q = Poset::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(q.hasse_edges().size() == 2);
    CHECK(q.leq(q.index("a"), q.index("c")));
    CHECK(q.covers(q.index("a")) == std::vector<ElemId>{q.index("b")});
}

TEST_CASE("cycles and unknown names are rejected") {
    CHECK_THROWS_AS(Poset::from_names({"a", "b"}, {{"a", "b"}, {"b", "a"}}), NotAPoset);
    CHECK_THROWS_AS(Poset::from_names({"a"}, {{"a", "a"}}), NotAPoset);
    CHECK_THROWS(Poset::from_names({"a"}, {{"a", "q"}}));
    CHECK_THROWS(Poset::from_names({"a", "a"}, {}));
}

TEST_CASE("seven-element poset: extrema, downsets, components") {
    const Poset q = fixtures::seven_element_poset();
    auto names = [&](const std::vector<ElemId>& v) {
        std::vector<std::string> out;
        for (auto e : v) out.push_back(q.name(e));
        return out;
    };
    CHECK(names(q.minima()) == std::vector<std::string>{"t", "u", "v", "w"});
    CHECK(names(q.maxima()) == std::vector<std::string>{"z"});
    CHECK(names(q.open_downset(q.index("z"))).size() == 6);
    const auto comps = components(q, q.open_downset(q.index("z")));
    REQUIRE(comps.size() == 2);
    CHECK(names(comps[0]) == std::vector<std::string>{"t", "u", "v", "x", "y"});
    CHECK(names(comps[1]) == std::vector<std::string>{"w"});
    CHECK(q.is_connected());
    CHECK(components(q, {}).empty());
}

TEST_CASE("closure matches a path search on random posets") {
    random::Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Poset q = random::random_poset(rng, 1 + rng() % 25, 0.15);
        const std::size_t n = q.size();
        for (ElemId a = 0; a < n; ++a) {
            std::vector<bool> seen(n, false);
            std::vector<ElemId> stack{a};
            seen[a] = true;
            while (!stack.empty()) {
                const ElemId x = stack.back();
                stack.pop_back();
                for (ElemId y : q.covers(x))
                    if (!seen[y]) seen[y] = stack.emplace_back(y), true;
            }
            for (ElemId b = 0; b < n; ++b) {
                CHECK(q.leq(a, b) == seen[b]);
                if (q.less(a, b)) CHECK(a < b);
            }
        }
        // A Hasse edge has nothing strictly between its ends.
        for (const auto& e : q.hasse_edges())
            for (ElemId c = 0; c < n; ++c) CHECK_FALSE((q.less(e.lower, c) && q.less(c, e.upper)));
    }
}

TEST_CASE("opposite reverses the order") {
    random::Rng rng(4);
    const Poset q = random::random_poset(rng, 15, 0.2);
    const Poset op = q.opposite();
    REQUIRE(op.size() == q.size());
    for (ElemId a = 0; a < q.size(); ++a)
        for (ElemId b = 0; b < q.size(); ++b)
            CHECK(q.leq(a, b) == op.leq(op.index(q.name(b)), op.index(q.name(a))));
    CHECK(op.minima().size() == q.maxima().size());
}

}
