#include <doctest.h>

#include <algorithm>

#include "scaffold/grid.hpp"
#include "scaffold/random.hpp"

using namespace scaffold;

namespace {

std::vector<GridPoint> brute_minimal(const std::vector<GridPoint>& pts) {
    std::vector<GridPoint> out;
    for (const auto& p : pts)
        if (std::none_of(pts.begin(), pts.end(), [&](const GridPoint& o) { return less(o, p); })) out.push_back(p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("point parsing and order") {
    const GridPoint p = GridPoint::parse("1,6,0");
    CHECK(p == GridPoint{1, 6, 0});
    CHECK(p.to_string() == "1,6,0");
    CHECK(p.to_string(' ') == "1 6 0");
    CHECK(GridPoint::parse("2 3", ' ') == GridPoint{2, 3});
    CHECK_THROWS(GridPoint::parse("1,x"));
    CHECK_THROWS(GridPoint::parse("1,-2"));
    CHECK(leq(GridPoint{1, 2}, GridPoint{1, 3}));
    CHECK_FALSE(leq(GridPoint{2, 0}, GridPoint{1, 3}));
    CHECK(join(GridPoint{2, 0}, GridPoint{1, 3}) == GridPoint{2, 3});
    CHECK(meet(GridPoint{2, 0}, GridPoint{1, 3}) == GridPoint{1, 0});
}

TEST_CASE("minimal and maximal elements against a quadratic scan") {
    random::Rng rng(17);
    for (std::size_t d = 1; d <= 5; ++d)
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<GridPoint> pts;
            const std::size_t n = 1 + rng() % 40;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Coord> c(d);
                for (auto& x : c) x = static_cast<Coord>(rng() % 6);
                pts.emplace_back(std::move(c));
            }
            CHECK(minimal_elements(pts) == brute_minimal(pts));
            std::vector<GridPoint> neg;
            for (auto p : pts) {
                for (std::size_t i = 0; i < d; ++i) p[i] = 10 - p[i];
                neg.push_back(p);
            }
            auto mx = maximal_elements(pts);
            std::vector<GridPoint> expect;
            for (auto p : brute_minimal(neg)) {
                for (std::size_t i = 0; i < d; ++i) p[i] = 10 - p[i];
                expect.push_back(p);
            }
            std::sort(expect.begin(), expect.end());
            CHECK(mx == expect);
        }
}

TEST_CASE("interval membership in both boundary forms") {
    const auto cog = GridInterval::with_cogenerators(2, {GridPoint{0, 2}, GridPoint{2, 0}}, {GridPoint{3, 3}, GridPoint{0, 5}, GridPoint{5, 0}});
    CHECK(cog.contains(GridPoint{2, 2}));
    CHECK_FALSE(cog.contains(GridPoint{3, 3}));
    CHECK_FALSE(cog.contains(GridPoint{1, 1}));
    CHECK(cog.is_finite());
    const auto mx = cog.maxima();
    CHECK(mx == std::vector<GridPoint>{GridPoint{2, 4}, GridPoint{4, 2}});
    const auto as_max = GridInterval::with_maxima(2, cog.minima(), mx);
    CHECK(materialize(as_max) == materialize(cog));
    CHECK(as_max.cogenerators() == cog.cogenerators());
    CHECK(cog.upper_corner() == GridPoint{4, 4});
    CHECK_FALSE(GridInterval::upset(2, {GridPoint{1, 1}}).is_finite());
}

TEST_CASE("maxima and cogenerators convert consistently on random intervals") {
    random::Rng rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        const GridInterval q = random::random_small_interval(rng, 4, 400);
        q.validate();
        const auto pts = materialize(q);
        const auto mx = q.maxima();
        CHECK(mx == maximal_elements(pts));
        CHECK(q.minima() == minimal_elements(pts));
        const auto other = q.boundary_kind() == GridInterval::Boundary::Maxima
                               ? GridInterval::with_cogenerators(q.dim(), q.minima(), q.cogenerators())
                               : GridInterval::with_maxima(q.dim(), q.minima(), mx);
        CHECK(materialize(other) == pts);
        // Reflection is an order-reversing bijection.
        const GridPoint corner = q.upper_corner();
        const auto r = q.reflected(corner);
        CHECK(materialize(r).size() == pts.size());
        for (const auto& p : pts) {
            GridPoint f = p;
            for (std::size_t i = 0; i < p.dim(); ++i) f[i] = corner[i] - p[i];
            CHECK(r.contains(f));
        }
    }
}

TEST_CASE("validation catches disconnected and inconsistent intervals") {
    // Two minima whose join lies past a cogenerator.
    const auto split = GridInterval::with_cogenerators(2, {GridPoint{0, 3}, GridPoint{3, 0}}, {GridPoint{1, 1}});
    CHECK_THROWS_AS(split.validate(), InvalidInterval);
    const auto split3 = GridInterval::with_maxima(3, {GridPoint{0, 0, 2}, GridPoint{2, 0, 0}}, {GridPoint{0, 1, 2}, GridPoint{2, 1, 0}});
    CHECK_THROWS_AS(split3.validate(), InvalidInterval);
    const auto orphan = GridInterval::with_maxima(2, {GridPoint{2, 2}}, {GridPoint{1, 5}, GridPoint{3, 3}});
    CHECK_THROWS_AS(orphan.validate(), InvalidInterval);
    CHECK_THROWS_AS(GridInterval::upset(2, {GridPoint{1, 2, 3}}), InvalidInterval);
    CHECK_NOTHROW(GridInterval::upset(3, {GridPoint{1, 0, 0}, GridPoint{0, 1, 0}}).validate());
}

TEST_CASE("materialization respects the cap and truncation") {
    const auto up = GridInterval::upset(2, {GridPoint{0, 0}});
    CHECK_THROWS(materialize(up));
    CHECK(materialize(up, GridPoint{2, 1}).size() == 6);
    CHECK_THROWS_AS(materialize(up, GridPoint{1000, 1000}, {100}), std::length_error);
    const Poset q = grid_interval_to_poset(up, GridPoint{1, 1});
    CHECK(q.size() == 4);
    CHECK(q.hasse_edges().size() == 4);
    CHECK(q.leq(q.index("0,0"), q.index("1,1")));
}

}
