#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "scaffold/general_scaffold.hpp"
#include "scaffold/random.hpp"

using namespace scaffold;

namespace {

std::set<std::pair<std::string, std::string>> named_relations(const PosetScaffold& s, const Poset& q) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& r : s.relations) out.emplace(q.name(s.elements[r.extremum]), q.name(s.elements[r.element]));
    return out;
}

}  // namespace

TEST_SUITE("general-scaffold") {

TEST_CASE("seven-element poset with an essential top") {
    const Poset q = fixtures::seven_element_poset();
    const PosetScaffold s = initial_scaffold(q);
    CHECK(s.elements.size() == 7);
    const auto rel = named_relations(s, q);
    CHECK(rel.size() == 6);
    for (auto r : {std::pair<std::string, std::string>{"t", "x"}, {"u", "x"}, {"u", "y"}, {"v", "y"}, {"w", "z"}})
        CHECK(rel.count(r) == 1);
    const int tops = int(rel.count({"t", "z"}) + rel.count({"u", "z"}) + rel.count({"v", "z"}));
    CHECK(tops == 1);
    std::string why;
    CHECK_MESSAGE(verify_scaffold(s, q, &why), why);
}

TEST_CASE("final scaffold of the seven-element poset") {
    const Poset q = fixtures::seven_element_poset();
    const PosetScaffold f = final_scaffold(q);
    CHECK(f.direction == Direction::Final);
    // z is the only maximum; nothing has a disconnected open upset.
    CHECK(f.elements.size() == 1);
    CHECK(f.relations.empty());
    CHECK(verify_scaffold(f, q));
}

TEST_CASE("trivial and disconnected posets") {
    const Poset one = Poset::from_names({"a"}, {});
    const PosetScaffold s1 = initial_scaffold(one);
    CHECK(s1.elements.size() == 1);
    CHECK(s1.relations.empty());
    const Poset two = Poset::from_names({"a", "b"}, {});
    CHECK(initial_scaffold(two).elements.size() == 2);
    // A chain collapses to its bottom.
    const Poset chain = Poset::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(initial_scaffold(chain).elements == std::vector<ElemId>{chain.index("a")});
    CHECK(final_scaffold(chain).elements == std::vector<ElemId>{chain.index("c")});
}

TEST_CASE("random posets: scaffolds verify and match brute force") {
    random::Rng rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const Poset q = random::random_poset(rng, 1 + rng() % 30, 0.05 + 0.3 * double(rng() % 100) / 100);
        const PosetScaffold s = initial_scaffold(q);
        std::string why;
        REQUIRE_MESSAGE(verify_scaffold(s, q, &why), why);
        CHECK(s.elements == brute_force_essential(q));
        const PosetScaffold f = final_scaffold(q);
        REQUIRE_MESSAGE(verify_scaffold(f, q, &why), why);
        CHECK(initial_scaffold(q, 4).relations == s.relations);
    }
}

TEST_CASE("verify_scaffold rejects damaged scaffolds") {
    const Poset q = fixtures::seven_element_poset();
    const PosetScaffold good = initial_scaffold(q);
    std::string why;

    PosetScaffold missing = good;
    missing.relations.pop_back();
    CHECK_FALSE(verify_scaffold(missing, q, &why));

    PosetScaffold doubled = good;
    // A second relation into z from the same component.
    const auto z = *good.find(q.index("z"));
    const auto v = *good.find(q.index("v"));
    doubled.relations.push_back({v, z});
    doubled.normalize();
    REQUIRE(doubled.relations.size() == good.relations.size() + 1);
    CHECK_FALSE(verify_scaffold(doubled, q, &why));

    const Poset chain = Poset::from_names({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    PosetScaffold chain_s = initial_scaffold(chain);
    chain_s.elements.push_back(chain.index("b"));
    chain_s.relations.push_back({0, 1});
    chain_s.normalize();
    CHECK_FALSE(verify_scaffold(chain_s, chain, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("essential set does not depend on element names") {
    random::Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Poset q = random::random_poset(rng, 20, 0.15);
        std::vector<std::string> renamed;
        for (const auto& n : q.names()) renamed.push_back("r" + std::to_string((std::hash<std::string>{}(n) % 9973)) + n);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : q.hasse_edges()) edges.emplace_back(renamed[e.lower], renamed[e.upper]);
        const Poset r = Poset::from_names(renamed, edges);
        std::set<std::string> a, b;
        for (auto e : initial_scaffold(q).elements) a.insert(renamed[e]);
        for (auto e : initial_scaffold(r).elements) b.insert(r.name(e));
        CHECK(a == b);
        CHECK(initial_scaffold(r).relations.size() == initial_scaffold(q).relations.size());
    }
}

TEST_CASE("scaffold as a poset keeps the induced order") {
    const Poset q = fixtures::seven_element_poset();
    const PosetScaffold s = initial_scaffold(q);
    const Poset p = scaffold_as_poset(s, q);
    CHECK(p.size() == 7);
    CHECK(p.leq(p.index("t"), p.index("z")));
    CHECK_FALSE(p.leq(p.index("w"), p.index("x")));
}

}
