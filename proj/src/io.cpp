#include "scaffold/io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace scaffold::io {

namespace {

// Reads meaningful lines (comments and blanks dropped), tracking line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::istringstream ss(raw);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (!tokens.empty()) return true;
        }
        return false;
    }
    std::size_t line() const { return line_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

    void expect(std::vector<std::string>& tokens, const std::string& what) {
        if (!next(tokens)) throw ParseError(line_, "unexpected end of input, expected " + what);
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::uint64_t parse_uint(const LineReader& r, const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        r.fail(std::string("bad ") + what + " '" + s + "'");
    return std::stoull(s);
}

// "key=value" token.
std::string keyed(const LineReader& r, const std::string& tok, const std::string& key) {
    if (tok.rfind(key + "=", 0) != 0) r.fail("expected " + key + "=<value>, got '" + tok + "'");
    return tok.substr(key.size() + 1);
}

GridPoint parse_point(const LineReader& r, const std::vector<std::string>& t, std::size_t first, std::size_t d) {
    if (t.size() != first + d) r.fail("expected " + std::to_string(d) + " coordinates");
    std::vector<Coord> c(d);
    for (std::size_t i = 0; i < d; ++i) {
        auto v = parse_uint(r, t[first + i], "coordinate");
        if (v > 0x7fffffffu) r.fail("coordinate too large");
        c[i] = static_cast<Coord>(v);
    }
    return GridPoint(std::move(c));
}

void write_matrix_rows(std::ostream& out, const Matrix& m) {
    if (m.cols() == 0) return;
    out << to_string(m);
}

}  // namespace

Poset read_poset(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'poset'");
    if (t.size() != 1 || t[0] != "poset") r.fail("expected header 'poset'");
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, bool> known;
    while (r.next(t)) {
        if (t[0] == "elem" && t.size() == 2) {
            if (!known.emplace(t[1], true).second) r.fail("duplicate element '" + t[1] + "'");
            names.push_back(t[1]);
        } else if (t[0] == "edge" && t.size() == 3) {
            for (int k = 1; k <= 2; ++k)
                if (!known.count(t[k])) r.fail("edge refers to undeclared element '" + t[k] + "'");
            edges.emplace_back(t[1], t[2]);
        } else {
            r.fail("expected 'elem <name>' or 'edge <lower> <upper>'");
        }
    }
    try {
        return Poset::from_names(names, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(r.line(), e.what());
    }
}

void write_poset(std::ostream& out, const Poset& q) {
    out << "poset\n";
    for (const auto& n : q.names()) out << "elem " << n << '\n';
    for (const auto& e : q.hasse_edges()) out << "edge " << q.name(e.lower) << ' ' << q.name(e.upper) << '\n';
}

GridInterval read_interval(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'interval d=<d>'");
    if (t.size() != 2 || t[0] != "interval") r.fail("expected header 'interval d=<d>'");
    const auto d = parse_uint(r, keyed(r, t[1], "d"), "dimension");
    if (d == 0 || d > 64) r.fail("dimension must be between 1 and 64");
    std::vector<GridPoint> mins, cogens, maxs;
    while (r.next(t)) {
        if (t[0] == "min")
            mins.push_back(parse_point(r, t, 1, d));
        else if (t[0] == "cogen")
            cogens.push_back(parse_point(r, t, 1, d));
        else if (t[0] == "max")
            maxs.push_back(parse_point(r, t, 1, d));
        else
            r.fail("expected 'min', 'cogen' or 'max'");
        if (!cogens.empty() && !maxs.empty()) r.fail("'cogen' and 'max' lines cannot be mixed");
    }
    if (mins.empty()) r.fail("interval has no 'min' lines");
    if (!maxs.empty()) return GridInterval::with_maxima(d, std::move(mins), std::move(maxs));
    return GridInterval::with_cogenerators(d, std::move(mins), std::move(cogens));
}

void write_interval(std::ostream& out, const GridInterval& q) {
    out << "interval d=" << q.dim() << '\n';
    for (const auto& m : q.minima()) out << "min " << m.to_string(' ') << '\n';
    const char* tag = q.boundary_kind() == GridInterval::Boundary::Maxima ? "max " : "cogen ";
    for (const auto& b : q.boundary()) out << tag << b.to_string(' ') << '\n';
}

ScaffoldText to_text(const PosetScaffold& s, const Poset& q) {
    ScaffoldText t;
    t.direction = s.direction;
    for (ElemId e : s.elements) t.elements.push_back(q.name(e));
    for (const auto& r : s.relations) t.relations.emplace_back(q.name(s.elements[r.extremum]), q.name(s.elements[r.element]));
    return t;
}

ScaffoldText to_text(const GridScaffold& s) {
    ScaffoldText t;
    t.direction = s.direction;
    for (const auto& p : s.elements) t.elements.push_back(p.to_string());
    for (const auto& r : s.relations)
        t.relations.emplace_back(s.elements[r.extremum].to_string(), s.elements[r.element].to_string());
    return t;
}

ScaffoldText read_scaffold(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'scaffold <initial|final>'");
    if (t.size() != 2 || t[0] != "scaffold" || (t[1] != "initial" && t[1] != "final"))
        r.fail("expected header 'scaffold initial' or 'scaffold final'");
    ScaffoldText s;
    s.direction = t[1] == "initial" ? Direction::Initial : Direction::Final;
    while (r.next(t)) {
        if (t[0] == "elem" && t.size() == 2)
            s.elements.push_back(t[1]);
        else if (t[0] == "rel" && t.size() == 3)
            s.relations.emplace_back(t[1], t[2]);
        else
            r.fail("expected 'elem <name>' or 'rel <extremum> <element>'");
    }
    return s;
}

void write_scaffold(std::ostream& out, const ScaffoldText& s) {
    out << "scaffold " << (s.direction == Direction::Initial ? "initial" : "final") << '\n';
    for (const auto& e : s.elements) out << "elem " << e << '\n';
    for (const auto& [a, b] : s.relations) out << "rel " << a << ' ' << b << '\n';
}

ComplexHeader peek_complex_header(const std::string& text) {
    std::istringstream in(text);
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'qr-complex field=<p> d=<d|poset>'");
    if (t.size() != 3 || t[0] != "qr-complex") r.fail("expected header 'qr-complex field=<p> d=<d|poset>'");
    ComplexHeader h;
    const auto p = parse_uint(r, keyed(r, t[1], "field"), "field modulus");
    if (p >= (1ull << 31) || !Field::is_prime(static_cast<std::uint32_t>(p))) r.fail("field modulus must be a prime below 2^31");
    h.field = static_cast<std::uint32_t>(p);
    const std::string d = keyed(r, t[2], "d");
    if (d != "poset") {
        h.d = parse_uint(r, d, "dimension");
        if (h.d == 0 || h.d > 64) r.fail("dimension must be between 1 and 64");
    }
    return h;
}

namespace {

template <class Grade, class ParseGrade>
QrComplex<Grade> read_complex(std::istream& in, bool poset_grades, ParseGrade parse_grade) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "complex header");
    std::ostringstream header;
    for (std::size_t i = 0; i < t.size(); ++i) header << (i ? " " : "") << t[i];
    ComplexHeader h;
    try {
        h = peek_complex_header(header.str());
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(r.line(), msg.substr(msg.find(": ") + 2));
    }
    if (h.poset_grades() != poset_grades)
        r.fail(poset_grades ? "complex has grid grades but a poset was given" : "complex has poset grades but an interval was given");
    QrComplex<Grade> c{Field(h.field), {}, {}};

    auto read_block = [&](const char* tag) {
        r.expect(t, std::string("'") + tag + " <rank>'");
        if (t.size() != 2 || t[0] != tag) r.fail(std::string("expected '") + tag + " <rank>'");
        const auto n = parse_uint(r, t[1], "rank");
        std::vector<Grade> grades;
        for (std::uint64_t i = 0; i < n; ++i) {
            r.expect(t, std::string("a grade for ") + tag);
            grades.push_back(parse_grade(r, t, h));
        }
        return grades;
    };
    c.f.col_grades = read_block("X");
    c.f.row_grades = read_block("Y");
    c.g.col_grades = c.f.row_grades;
    c.g.row_grades = read_block("Z");
    c.f.entries = Matrix(c.f.row_grades.size(), c.f.col_grades.size());
    c.g.entries = Matrix(c.g.row_grades.size(), c.g.col_grades.size());

    Matrix* target = nullptr;
    while (r.next(t)) {
        if (t.size() == 1 && (t[0] == "f:" || t[0] == "g:")) {
            target = t[0] == "f:" ? &c.f.entries : &c.g.entries;
            continue;
        }
        if (!target) r.fail("entry before an 'f:' or 'g:' block");
        if (t.size() != 3) r.fail("expected '<row> <col> <value>'");
        const auto i = parse_uint(r, t[0], "row index"), j = parse_uint(r, t[1], "column index");
        if (i >= target->rows() || j >= target->cols()) r.fail("entry index out of range");
        std::int64_t v = 0;
        try {
            v = std::stoll(t[2]);
        } catch (const std::exception&) {
            r.fail("bad entry value '" + t[2] + "'");
        }
        (*target)(i, j) = c.field.from_signed(v);
    }
    return c;
}

}  // namespace

QrComplex<ElemId> read_poset_complex(std::istream& in, const Poset& q) {
    return read_complex<ElemId>(in, true, [&](const LineReader& r, const std::vector<std::string>& t, const ComplexHeader&) {
        if (t.size() != 1) r.fail("expected one element name");
        auto e = q.find(t[0]);
        if (!e) r.fail("unknown element '" + t[0] + "'");
        return *e;
    });
}

QrComplex<GridPoint> read_grid_complex(std::istream& in) {
    return read_complex<GridPoint>(in, false, [](const LineReader& r, const std::vector<std::string>& t, const ComplexHeader& h) {
        return parse_point(r, t, 0, h.d);
    });
}

namespace {

template <class Grade, class Name>
void write_complex_impl(std::ostream& out, const QrComplex<Grade>& c, const std::string& d, Name name) {
    out << "qr-complex field=" << c.field.modulus() << " d=" << d << '\n';
    auto block = [&](const char* tag, const std::vector<Grade>& grades) {
        out << tag << ' ' << grades.size() << '\n';
        for (const auto& g : grades) out << name(g) << '\n';
    };
    block("X", c.f.col_grades);
    block("Y", c.f.row_grades);
    block("Z", c.g.row_grades);
    auto entries = [&](const char* tag, const Matrix& m) {
        out << tag << '\n';
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m(i, j)) out << i << ' ' << j << ' ' << m(i, j) << '\n';
    };
    entries("f:", c.f.entries);
    entries("g:", c.g.entries);
}

}  // namespace

void write_complex(std::ostream& out, const QrComplex<ElemId>& c, const Poset& q) {
    write_complex_impl(out, c, "poset", [&](ElemId e) { return q.name(e); });
}

void write_complex(std::ostream& out, const QrComplex<GridPoint>& c) {
    std::size_t d = 1;
    for (const auto* v : {&c.f.col_grades, &c.f.row_grades, &c.g.row_grades})
        if (!v->empty()) d = v->front().dim();
    write_complex_impl(out, c, std::to_string(d), [](const GridPoint& p) { return p.to_string(' '); });
}

ModuleRep read_module_rep(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'module-rep field=<p>'");
    if (t.size() != 2 || t[0] != "module-rep") r.fail("expected header 'module-rep field=<p>'");
    const auto p = parse_uint(r, keyed(r, t[1], "field"), "field modulus");
    if (p >= (1ull << 31) || !Field::is_prime(static_cast<std::uint32_t>(p))) r.fail("field modulus must be a prime below 2^31");
    ModuleRep m{Field(static_cast<std::uint32_t>(p)), {}, {}, {}, {}, {}};
    std::map<std::string, ElemId> idx;
    auto look = [&](const std::string& n) {
        auto it = idx.find(n);
        if (it == idx.end()) r.fail("unknown element '" + n + "'");
        return it->second;
    };
    while (r.next(t)) {
        if (t[0] == "dim" && t.size() == 3) {
            if (!idx.emplace(t[1], static_cast<ElemId>(m.names.size())).second) r.fail("duplicate element '" + t[1] + "'");
            m.names.push_back(t[1]);
            m.dims.push_back(parse_uint(r, t[2], "dimension"));
            m.basis_labels.emplace_back();
        } else if (t[0] == "basis" && t.size() >= 2) {
            const ElemId e = look(t[1]);
            m.basis_labels[e].assign(t.begin() + 2, t.end());
            if (m.basis_labels[e].size() != m.dims[e]) r.fail("basis label count differs from the dimension");
        } else if (t[0] == "map" && t.size() == 3) {
            const ElemId a = look(t[1]), b = look(t[2]);
            Matrix g(m.dims[b], m.dims[a]);
            if (g.cols() > 0)
                for (std::size_t i = 0; i < g.rows(); ++i) {
                    r.expect(t, "a matrix row");
                    if (t.size() != g.cols()) r.fail("matrix row has " + std::to_string(t.size()) + " entries, expected " +
                                                      std::to_string(g.cols()));
                    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = m.field.reduce(parse_uint(r, t[j], "entry"));
                }
            m.relations.push_back({a, b});
            m.maps.push_back(std::move(g));
        } else {
            r.fail("expected 'dim', 'basis' or 'map'");
        }
    }
    return m;
}

void write_module_rep(std::ostream& out, const ModuleRep& m) {
    out << "module-rep field=" << m.field.modulus() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) out << "dim " << m.names[i] << ' ' << m.dims[i] << '\n';
    for (std::size_t i = 0; i < m.size() && i < m.basis_labels.size(); ++i) {
        if (m.basis_labels[i].empty()) continue;
        out << "basis " << m.names[i];
        for (const auto& l : m.basis_labels[i]) out << ' ' << l;
        out << '\n';
    }
    for (std::size_t k = 0; k < m.relations.size(); ++k) {
        out << "map " << m.names[m.relations[k].lower] << ' ' << m.names[m.relations[k].upper] << '\n';
        write_matrix_rows(out, m.maps[k]);
    }
}

void write_limit(std::ostream& out, const PresectionBasis& lim, const ModuleRep& g) {
    out << "limit dim=" << lim.dim() << " field=" << g.field.modulus() << '\n';
    for (std::size_t i = 0; i < lim.extrema.size(); ++i)
        out << "extremum " << g.names[lim.extrema[i]] << ' ' << lim.offsets[i + 1] - lim.offsets[i] << '\n';
    out << "basis\n";
    write_matrix_rows(out, lim.basis);
}

void write_colimit(std::ostream& out, const CopresentationBasis& colim, const ModuleRep& g) {
    out << "colimit dim=" << colim.dim() << " field=" << g.field.modulus() << '\n';
    for (std::size_t i = 0; i < colim.extrema.size(); ++i)
        out << "extremum " << g.names[colim.extrema[i]] << ' ' << colim.offsets[i + 1] - colim.offsets[i] << '\n';
    out << "projection\n";
    write_matrix_rows(out, colim.projection);
}

void write_grank(std::ostream& out, const GrankReport& r) {
    out << "grank " << r.grank << '\n'
        << "dim-lim " << r.dim_lim << '\n'
        << "dim-colim " << r.dim_colim << '\n'
        << "pair " << r.m << ' ' << r.w << '\n';
}

void write_points(std::ostream& out, const std::vector<GridPoint>& pts) {
    for (const auto& p : pts) out << p.to_string(' ') << '\n';
}

LimitText read_limit(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    r.expect(t, "'limit' or 'colimit' header");
    if (t.size() != 3 || (t[0] != "limit" && t[0] != "colimit")) r.fail("expected 'limit dim=<n> field=<p>'");
    LimitText out;
    out.colimit = t[0] == "colimit";
    out.dim = parse_uint(r, keyed(r, t[1], "dim"), "dimension");
    out.field = static_cast<std::uint32_t>(parse_uint(r, keyed(r, t[2], "field"), "field modulus"));
    const std::string tag = out.colimit ? "projection" : "basis";
    std::size_t total = 0;
    for (;;) {
        r.expect(t, "'extremum' or '" + tag + "'");
        if (t.size() == 1 && t[0] == tag) break;
        if (t.size() != 3 || t[0] != "extremum") r.fail("expected 'extremum <name> <dim>' or '" + tag + "'");
        out.extrema.emplace_back(t[1], parse_uint(r, t[2], "dimension"));
        total += out.extrema.back().second;
    }
    const std::size_t rows = out.colimit ? out.dim : total, cols = out.colimit ? total : out.dim;
    out.matrix = Matrix(rows, cols);
    if (cols > 0)
        for (std::size_t i = 0; i < rows; ++i) {
            r.expect(t, "a matrix row");
            if (t.size() != cols) r.fail("matrix row has the wrong length");
            for (std::size_t j = 0; j < cols; ++j) out.matrix(i, j) = static_cast<Scalar>(parse_uint(r, t[j], "entry"));
        }
    if (r.next(t)) r.fail("trailing content after the matrix");
    return out;
}

GrankReport read_grank(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    GrankReport out;
    auto field = [&](const char* key, std::size_t& dst) {
        r.expect(t, std::string("'") + key + "'");
        if (t.size() != 2 || t[0] != key) r.fail(std::string("expected '") + key + " <n>'");
        dst = parse_uint(r, t[1], key);
    };
    field("grank", out.grank);
    field("dim-lim", out.dim_lim);
    field("dim-colim", out.dim_colim);
    r.expect(t, "'pair'");
    if (t.size() != 3 || t[0] != "pair") r.fail("expected 'pair <m> <w>'");
    out.m = t[1];
    out.w = t[2];
    return out;
}

std::vector<GridPoint> read_points(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> t;
    std::vector<GridPoint> out;
    while (r.next(t)) {
        if (!out.empty() && t.size() != out.front().dim()) r.fail("points have mixed dimensions");
        out.push_back(parse_point(r, t, 0, t.size()));
    }
    return out;
}

}  // namespace scaffold::io
