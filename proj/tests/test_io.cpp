#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "scaffold/general_scaffold.hpp"
#include "scaffold/grid_scaffold.hpp"
#include "scaffold/io.hpp"
#include "scaffold/limits.hpp"
#include "scaffold/random.hpp"

using namespace scaffold;

namespace {

std::ifstream open_data(const std::string& name) {
    std::ifstream in(fixtures::data_path(name));
    REQUIRE(in.good());
    return in;
}

template <class Fn>
std::string render(Fn&& fn) {
    std::ostringstream os;
    fn(os);
    return os.str();
}

std::string parse_error(const std::string& text, std::size_t* line = nullptr) {
    std::istringstream in(text);
    try {
        io::read_poset(in);
    } catch (const io::ParseError& e) {
        if (line) *line = e.line();
        return e.what();
    }
    return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("fixture files parse") {
    auto in = open_data("seven.poset");
    const Poset q = io::read_poset(in);
    CHECK(q.size() == 7);
    CHECK(q.names() == fixtures::seven_element_poset().names());
    auto itv = open_data("staircase.itv");
    const GridInterval u = io::read_interval(itv);
    CHECK(u.minima() == fixtures::two_level_staircase().minima());
    auto cin = open_data("seven_interval.qrc");
    const auto c = io::read_poset_complex(cin, q);
    CHECK(c.rank_x() == 3);
    CHECK(c.rank_y() == 4);
    CHECK(generalized_rank(c, q).grank == 1);
    auto box = open_data("box.itv");
    const GridInterval b = io::read_interval(box);
    auto bin = open_data("box_interval.qrc");
    std::stringstream text;
    text << bin.rdbuf();
    CHECK(io::peek_complex_header(text.str()).d == 2);
    const auto bc = io::read_grid_complex(text);
    CHECK(generalized_rank(bc, b).grank == 1);
}

TEST_CASE("poset, interval and scaffold round trips") {
    random::Rng rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        const Poset q = random::random_poset(rng, 1 + rng() % 15, 0.25);
        std::stringstream s(render([&](auto& os) { io::write_poset(os, q); }));
        const Poset back = io::read_poset(s);
        CHECK(back.names() == q.names());
        CHECK(back.hasse_edges() == q.hasse_edges());

        const auto text = io::to_text(initial_scaffold(q), q);
        std::stringstream ss(render([&](auto& os) { io::write_scaffold(os, text); }));
        CHECK(io::read_scaffold(ss) == text);

        const GridInterval g = random::random_small_interval(rng, 4, 300);
        std::stringstream gs(render([&](auto& os) { io::write_interval(os, g); }));
        const GridInterval gb = io::read_interval(gs);
        CHECK(gb.minima() == g.minima());
        CHECK(gb.boundary() == g.boundary());
        CHECK(gb.boundary_kind() == g.boundary_kind());

        const auto mx = g.maxima();
        std::stringstream ps(render([&](auto& os) { io::write_points(os, mx); }));
        CHECK(io::read_points(ps) == mx);
    }
}

TEST_CASE("complex and module round trips") {
    random::Rng rng(83);
    const Poset q = fixtures::seven_element_poset();
    std::vector<ElemId> universe(q.size());
    for (ElemId e = 0; e < q.size(); ++e) universe[e] = e;
    for (int trial = 0; trial < 10; ++trial) {
        const auto c = random::random_complex<ElemId>(rng, universe, order_of(q), Field(Field::kMersenne31), 3, 4, 2);
        std::stringstream s(render([&](auto& os) { io::write_complex(os, c, q); }));
        const auto back = io::read_poset_complex(s, q);
        CHECK(back.f.entries == c.f.entries);
        CHECK(back.g.entries == c.g.entries);
        CHECK(back.f.col_grades == c.f.col_grades);
        CHECK(back.g.row_grades == c.g.row_grades);

        Carrier<ElemId> all = hasse_carrier(q);
        all.relations.clear();
        for (ElemId a = 0; a < q.size(); ++a)
            for (ElemId b = 0; b < q.size(); ++b)
                if (q.less(a, b)) all.relations.push_back({a, b});
        const ModuleRep h = homology_rep(c, all, order_of(q));
        std::stringstream ms(render([&](auto& os) { io::write_module_rep(os, h); }));
        const ModuleRep hb = io::read_module_rep(ms);
        CHECK(hb.names == h.names);
        CHECK(hb.dims == h.dims);
        CHECK(hb.relations == h.relations);
        CHECK(hb.maps == h.maps);
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h.dims[i]) CHECK(hb.basis_labels[i] == h.basis_labels[i]);

        const auto lim = limit_presections(h, make_view(h, initial_scaffold(q), q));
        std::stringstream ls(render([&](auto& os) { io::write_limit(os, lim, h); }));
        const auto lt = io::read_limit(ls);
        CHECK(lt.dim == lim.dim());
        CHECK(lt.matrix == lim.basis);
        CHECK(lt.extrema.size() == lim.extrema.size());

        const auto colim = colimit_copresentations(h, make_view(h, final_scaffold(q), q));
        std::stringstream cs(render([&](auto& os) { io::write_colimit(os, colim, h); }));
        const auto ct = io::read_limit(cs);
        CHECK(ct.colimit);
        CHECK(ct.matrix == colim.projection);

        const auto gr = generalized_rank(c, q);
        std::stringstream rs(render([&](auto& os) { io::write_grank(os, gr); }));
        const auto rb = io::read_grank(rs);
        CHECK(rb.grank == gr.grank);
        CHECK(rb.dim_lim == gr.dim_lim);
        CHECK(rb.m == gr.m);
        CHECK(rb.w == gr.w);
    }
    const GridInterval g = fixtures::two_level_staircase();
    const auto gc = random::random_complex<GridPoint>(rng, g.minima(), grid_order(), Field(5), 2, 3, 1);
    std::stringstream gs(render([&](auto& os) { io::write_complex(os, gc); }));
    const auto gb = io::read_grid_complex(gs);
    CHECK(gb.f.col_grades == gc.f.col_grades);
    CHECK(gb.f.entries == gc.f.entries);
}

TEST_CASE("module file with a zero-width map") {
    auto in = open_data("chain.rep");
    const ModuleRep m = io::read_module_rep(in);
    CHECK(validate_rep(m));
    ModuleRep z{Field(3), {"a", "b"}, {0, 2}, {{0, 1}}, {Matrix(2, 0)}, {{}, {"p", "q"}}};
    std::stringstream s(render([&](auto& os) { io::write_module_rep(os, z); }));
    const ModuleRep back = io::read_module_rep(s);
    CHECK(back.maps[0].rows() == 2);
    CHECK(back.maps[0].cols() == 0);
}

TEST_CASE("diagnostics name the offending line") {
    std::size_t line = 0;
    CHECK(parse_error("poset\nelem a\n\n# note\nedge a b\n", &line).find("undeclared") != std::string::npos);
    CHECK(line == 5);
    CHECK(parse_error("posit\n", &line).find("header") != std::string::npos);
    CHECK(line == 1);
    CHECK(parse_error("poset\nelem a\nelem b\nedge a b\nedge b a\n").find("cycle") != std::string::npos);
    std::istringstream bad_itv("interval d=2\nmin 1\n");
    CHECK_THROWS_WITH_AS(io::read_interval(bad_itv), "line 2: expected 2 coordinates", io::ParseError);
    std::istringstream mixed("interval d=1\nmin 1\ncogen 3\nmax 2\n");
    CHECK_THROWS_AS(io::read_interval(mixed), io::ParseError);
    std::istringstream bad_field("qr-complex field=4 d=2\n");
    CHECK_THROWS_AS(io::read_grid_complex(bad_field), io::ParseError);
    std::istringstream wrong_kind("qr-complex field=5 d=poset\nX 0\nY 0\nZ 0\n");
    CHECK_THROWS_AS(io::read_grid_complex(wrong_kind), io::ParseError);
    std::istringstream short_row("module-rep field=5\ndim a 1\ndim b 2\nmap a b\n1\n");
    CHECK_THROWS_AS(io::read_module_rep(short_row), io::ParseError);
}

}
