// scaffold: command-line front end for scaffolds, limits, colimits and generalized rank.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scaffold/general_scaffold.hpp"
#include "scaffold/grid_scaffold.hpp"
#include "scaffold/io.hpp"
#include "scaffold/limits.hpp"
#include "scaffold/modules.hpp"
#include "scaffold/random.hpp"

using namespace scaffold;
using Clock = std::chrono::steady_clock;

namespace {

struct RunConfig {
    std::string command;
    std::string hasse, interval, complex, rep, out;
    std::optional<std::uint32_t> field;
    std::string algo = "auto";
    unsigned threads = 1;
    bool skip_validate = false;
    bool timing = false;
    std::uint64_t seed = 1;
    // bench only
    std::string family = "random";
    std::size_t d = 3;
    std::vector<std::size_t> sizes{16, 32, 64, 128, 256, 512, 1024};
    std::size_t r = 10;
    std::size_t reps = 1;
    std::size_t cap = 20000;
};

// Failure tied to an input file; printed as "<file>: <what>".
struct InputError : std::runtime_error {
    InputError(const std::string& file, const std::string& what) : std::runtime_error(file + ": " + what) {}
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class Fn>
auto parse_file(const std::string& path, Fn&& fn) {
    std::istringstream in(slurp(path));
    try {
        return fn(in);
    } catch (const std::exception& e) {
        throw InputError(path, e.what());
    }
}

double ms_since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

// Everything a command can be asked to work on.
struct Inputs {
    std::optional<Poset> poset;
    std::optional<GridInterval> interval;
    std::optional<QrComplex<ElemId>> pcx;
    std::optional<QrComplex<GridPoint>> gcx;
    std::optional<ModuleRep> rep;
};

Inputs load(const RunConfig& cfg) {
    Inputs in;
    if (!cfg.hasse.empty() && !cfg.interval.empty()) throw std::invalid_argument("give --hasse or --interval, not both");
    if (!cfg.complex.empty() && !cfg.rep.empty()) throw std::invalid_argument("give --complex or --rep, not both");
    if (!cfg.hasse.empty()) in.poset = parse_file(cfg.hasse, io::read_poset);
    if (!cfg.interval.empty()) {
        in.interval = parse_file(cfg.interval, io::read_interval);
        if (!cfg.skip_validate) parse_file(cfg.interval, [&](std::istream&) { in.interval->validate(); return 0; });
    }
    if (!cfg.complex.empty()) {
        const std::string text = slurp(cfg.complex);
        const io::ComplexHeader h = parse_file(cfg.complex, [&](std::istream&) { return io::peek_complex_header(text); });
        if (cfg.field && *cfg.field != h.field)
            throw InputError(cfg.complex, "field " + std::to_string(h.field) + " differs from --field " + std::to_string(*cfg.field));
        std::istringstream s(text);
        if (h.poset_grades()) {
            if (!in.poset) throw std::invalid_argument("a complex graded by poset elements needs --hasse");
            in.pcx = parse_file(cfg.complex, [&](std::istream&) { return io::read_poset_complex(s, *in.poset); });
        } else {
            if (!in.interval) throw std::invalid_argument("a complex graded by grid points needs --interval");
            if (h.d != in.interval->dim())
                throw InputError(cfg.complex, "grades have dimension " + std::to_string(h.d) + " but the interval has " +
                                                  std::to_string(in.interval->dim()));
            in.gcx = parse_file(cfg.complex, [&](std::istream&) { return io::read_grid_complex(s); });
        }
    }
    if (!cfg.rep.empty()) {
        in.rep = parse_file(cfg.rep, io::read_module_rep);
        if (cfg.field && *cfg.field != in.rep->field.modulus())
            throw InputError(cfg.rep, "field " + std::to_string(in.rep->field.modulus()) + " differs from --field " +
                                          std::to_string(*cfg.field));
        std::string why;
        if (!cfg.skip_validate && !validate_rep(*in.rep, &why)) throw InputError(cfg.rep, why);
        // A bare module carries its own poset.
        if (!in.poset && !in.interval) {
            std::vector<std::pair<std::string, std::string>> edges;
            for (const auto& e : in.rep->relations)
                if (e.lower != e.upper) edges.emplace_back(in.rep->names[e.lower], in.rep->names[e.upper]);
            in.poset = parse_file(cfg.rep, [&](std::istream&) { return Poset::from_names(in.rep->names, edges); });
        }
    }
    return in;
}

GridAlgorithm grid_algo(const std::string& algo) {
    if (algo == "sweep") return GridAlgorithm::Sweep;
    if (algo == "joins") return GridAlgorithm::Joins;
    return GridAlgorithm::Auto;
}

io::ScaffoldText run_scaffold(const RunConfig& cfg, const Inputs& in, Direction dir) {
    const bool initial = dir == Direction::Initial;
    if (in.poset) {
        if (cfg.algo == "sweep" || cfg.algo == "joins")
            throw std::invalid_argument("--algo " + cfg.algo + " needs an --interval input");
        const PosetScaffold s = initial ? initial_scaffold(*in.poset, cfg.threads) : final_scaffold(*in.poset, cfg.threads);
        return io::to_text(s, *in.poset);
    }
    if (!in.interval) throw std::invalid_argument(cfg.command + " needs --hasse or --interval");
    if (cfg.algo == "general") {
        const Poset q = grid_interval_to_poset(*in.interval);
        const PosetScaffold s = initial ? initial_scaffold(q, cfg.threads) : final_scaffold(q, cfg.threads);
        return io::to_text(s, q);
    }
    const auto algo = grid_algo(cfg.algo);
    return io::to_text(initial ? initial_scaffold(*in.interval, algo) : final_scaffold(*in.interval, algo));
}

// Module over the scaffold carrier (complex input) or as given (rep input), plus the view.
struct Prepared {
    ModuleRep g;
    ScaffoldView view;
};

Prepared prepare(const RunConfig& cfg, const Inputs& in, Direction dir) {
    const bool initial = dir == Direction::Initial;
    const auto algo = grid_algo(cfg.algo);
    if (in.gcx) {
        const GridScaffold s = initial ? initial_scaffold(*in.interval, algo) : final_scaffold(*in.interval, algo);
        ModuleRep g = homology_rep(*in.gcx, carrier_of(s), grid_order());
        ScaffoldView v = make_view(g, s);
        return {std::move(g), std::move(v)};
    }
    if (in.pcx) {
        const PosetScaffold s = initial ? initial_scaffold(*in.poset, cfg.threads) : final_scaffold(*in.poset, cfg.threads);
        ModuleRep g = homology_rep(*in.pcx, carrier_of(s, *in.poset), order_of(*in.poset));
        ScaffoldView v = make_view(g, s, *in.poset);
        return {std::move(g), std::move(v)};
    }
    if (!in.rep) throw std::invalid_argument(cfg.command + " needs --complex or --rep");
    ScaffoldView v = in.interval ? make_view(*in.rep, initial ? initial_scaffold(*in.interval, algo)
                                                              : final_scaffold(*in.interval, algo))
                                 : make_view(*in.rep, initial ? initial_scaffold(*in.poset, cfg.threads)
                                                              : final_scaffold(*in.poset, cfg.threads),
                                             *in.poset);
    return {*in.rep, std::move(v)};
}

GrankReport run_grank(const RunConfig& cfg, const Inputs& in) {
    if (in.gcx) return generalized_rank(*in.gcx, *in.interval);
    if (in.pcx) return generalized_rank(*in.pcx, *in.poset);
    if (!in.rep) throw std::invalid_argument("grank needs --complex or --rep");
    if (in.poset) return generalized_rank(*in.rep, *in.poset);
    const auto algo = grid_algo(cfg.algo);
    const auto [gm, gw] = choose_extremal_pair(*in.interval);
    const auto m = in.rep->find(gm.to_string()), w = in.rep->find(gw.to_string());
    if (!m || !w) throw std::invalid_argument("module has no element " + (m ? gw : gm).to_string());
    return generalized_rank(*in.rep, make_view(*in.rep, initial_scaffold(*in.interval, algo)),
                            make_view(*in.rep, final_scaffold(*in.interval, algo)), *m, *w);
}

// ---- bench ----

GridInterval band_interval(std::size_t n, Coord shift) {
    std::vector<GridPoint> mins, maxs;
    const Coord top = static_cast<Coord>(n) - 1;
    for (Coord i = 0; i <= top; ++i) {
        mins.push_back(GridPoint{i, top - i});
        maxs.push_back(GridPoint{i + shift, top - i + shift});
    }
    return GridInterval::with_maxima(2, std::move(mins), std::move(maxs));
}

// Every point of Q as an element, tied to each minimum below it.
std::optional<GridScaffold> naive_carrier(const GridInterval& q, std::size_t cap) {
    if (!q.is_finite()) return std::nullopt;
    std::vector<GridPoint> pts;
    try {
        pts = materialize(q, std::nullopt, {cap});
    } catch (const std::length_error&) {
        return std::nullopt;
    }
    GridScaffold s;
    s.elements = std::move(pts);
    for (std::uint32_t e = 0; e < s.elements.size(); ++e)
        for (const auto& m : q.minima())
            if (less(m, s.elements[e])) s.relations.push_back({*s.find(m), e});
    return s;
}

double time_limit(const QrComplex<GridPoint>& c, const GridScaffold& s) {
    const auto t0 = Clock::now();
    const ModuleRep g = homology_rep(c, carrier_of(s), grid_order());
    (void)limit_presections(g, make_view(g, s));
    return ms_since(t0);
}

void run_bench(const RunConfig& cfg, std::ostream& out) {
    random::Rng rng(cfg.seed);
    const Field field(cfg.field.value_or(Field::kMersenne31));
    out << "id,n,d,r,scaffold_size,t_scaffold_ms,t_limit_scaffold_ms,t_limit_naive_ms\n";
    std::size_t id = 0;
    for (std::size_t size : cfg.sizes)
        for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
            const GridInterval q = [&] {
                if (cfg.family == "n4") return random::n4_family(size);
                if (cfg.family == "band") return band_interval(size, 5);
                random::IntervalShape shape;
                shape.d = cfg.d;
                shape.minima = size;
                return random::random_interval(rng, shape);
            }();
            const auto t0 = Clock::now();
            const GridScaffold s = initial_scaffold(q, grid_algo(cfg.algo));
            const double t_scaffold = ms_since(t0);

            // Random complex with generators at scaffold points.
            const std::size_t ry = std::max<std::size_t>(1, cfg.r / 2), rx = (cfg.r - ry) / 2, rz = cfg.r - ry - rx;
            const auto c = random::random_complex<GridPoint>(rng, s.elements, grid_order(), field, rx, ry, rz);
            const double t_lim = time_limit(c, s);
            const auto naive = naive_carrier(q, cfg.cap);
            const std::string t_naive = naive ? std::to_string(time_limit(c, *naive)) : "";
            out << id++ << ',' << q.minima().size() << ',' << q.dim() << ',' << cfg.r << ',' << s.elements.size() << ','
                << t_scaffold << ',' << t_lim << ',' << t_naive << '\n';
        }
}

void dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "bench") return run_bench(cfg, out);
    const Inputs in = load(cfg);
    const auto t0 = Clock::now();
    if (cfg.command == "scaffold" || cfg.command == "final-scaffold") {
        io::write_scaffold(out, run_scaffold(cfg, in, cfg.command == "scaffold" ? Direction::Initial : Direction::Final));
    } else if (cfg.command == "betti1-support") {
        if (!in.interval) throw std::invalid_argument("betti1-support needs --interval");
        io::write_points(out, koszul_betti_support(in.interval->minima()).beta1);
    } else if (cfg.command == "limit") {
        const Prepared p = prepare(cfg, in, Direction::Initial);
        io::write_limit(out, limit_presections(p.g, p.view), p.g);
    } else if (cfg.command == "colimit") {
        const Prepared p = prepare(cfg, in, Direction::Final);
        io::write_colimit(out, colimit_copresentations(p.g, p.view), p.g);
    } else if (cfg.command == "grank") {
        io::write_grank(out, run_grank(cfg, in));
    }
    if (cfg.timing) std::cerr << "time_ms " << ms_since(t0) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal scaffolds, limits, colimits and generalized rank of poset diagrams"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--hasse", cfg.hasse, "finite poset file");
        sub->add_option("--interval", cfg.interval, "grid interval file");
        sub->add_option("--out", cfg.out, "write the result here instead of stdout");
        sub->add_option("--algo", cfg.algo, "scaffold algorithm")
            ->check(CLI::IsMember({"general", "sweep", "joins", "auto"}));
        sub->add_option("--threads", cfg.threads, "worker threads for the general algorithm")->check(CLI::PositiveNumber);
        sub->add_flag("--skip-validate", cfg.skip_validate, "trust the inputs (no interval or module checks)");
        sub->add_flag("--time", cfg.timing, "report wall time on stderr");
    };
    auto module_opts = [&](CLI::App* sub) {
        sub->add_option("--complex", cfg.complex, "(Q,r)-complex file");
        sub->add_option("--rep", cfg.rep, "module representation file");
        sub->add_option_function<std::uint32_t>(
            "--field", [&](std::uint32_t p) { cfg.field = p; }, "prime modulus (must match the input files)");
    };

    for (const char* name : {"scaffold", "final-scaffold", "betti1-support"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "betti1-support" ? "first Betti support of Up(Q)"
                                                                                   : std::string(name) + " of the input poset");
        common(sub);
    }
    for (const char* name : {"limit", "colimit", "grank"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of the module");
        common(sub);
        module_opts(sub);
    }
    auto* bench = app.add_subcommand("bench", "timing table on seeded random intervals (CSV)");
    bench->add_option("--seed", cfg.seed, "generator seed");
    bench->add_option("--family", cfg.family, "instance family")->check(CLI::IsMember({"random", "band", "n4"}));
    bench->add_option("--d", cfg.d, "dimension of random intervals")->check(CLI::Range(1, 64));
    bench->add_option("--sizes", cfg.sizes, "number of minima (k for the n4 family)")->delimiter(',');
    bench->add_option("--r", cfg.r, "total rank of the random complex")->check(CLI::PositiveNumber);
    bench->add_option("--reps", cfg.reps, "instances per size")->check(CLI::PositiveNumber);
    bench->add_option("--cap", cfg.cap, "skip the naive route above this many points");
    bench->add_option("--algo", cfg.algo, "scaffold algorithm")->check(CLI::IsMember({"sweep", "joins", "auto"}));
    bench->add_option_function<std::uint32_t>("--field", [&](std::uint32_t p) { cfg.field = p; }, "prime modulus");
    bench->add_option("--out", cfg.out, "write the table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.field) (void)Field(*cfg.field);
        std::ostringstream buf;
        dispatch(cfg, buf);
        if (cfg.out.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(cfg.out);
            if (!(f << buf.str())) throw InputError(cfg.out, "cannot write file");
        }
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "scaffold: " << msg << '\n';
        return 1;
    }
    return 0;
}
