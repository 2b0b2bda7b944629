#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/limits.hpp"
#include "scaffold/modules.hpp"
#include "scaffold/poset.hpp"
#include "scaffold/scaffold.hpp"

namespace scaffold::io {

/// Malformed input; what() names the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& q);

GridInterval read_interval(std::istream& in);
void write_interval(std::ostream& out, const GridInterval& q);

/// Scaffold in text form: element names and (extremum, element) name pairs.
struct ScaffoldText {
    Direction direction = Direction::Initial;
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;
    bool operator==(const ScaffoldText&) const = default;
};
ScaffoldText to_text(const PosetScaffold& s, const Poset& q);
ScaffoldText to_text(const GridScaffold& s);
ScaffoldText read_scaffold(std::istream& in);
void write_scaffold(std::ostream& out, const ScaffoldText& s);

/// Header of a complex file: grades are poset element names (d == 0) or points of N^d.
struct ComplexHeader {
    std::uint32_t field = Field::kMersenne31;
    std::size_t d = 0;
    bool poset_grades() const { return d == 0; }
};
ComplexHeader peek_complex_header(const std::string& text);
QrComplex<ElemId> read_poset_complex(std::istream& in, const Poset& q);
QrComplex<GridPoint> read_grid_complex(std::istream& in);
void write_complex(std::ostream& out, const QrComplex<ElemId>& c, const Poset& q);
void write_complex(std::ostream& out, const QrComplex<GridPoint>& c);

ModuleRep read_module_rep(std::istream& in);
void write_module_rep(std::ostream& out, const ModuleRep& m);

void write_limit(std::ostream& out, const PresectionBasis& lim, const ModuleRep& g);
void write_colimit(std::ostream& out, const CopresentationBasis& colim, const ModuleRep& g);
void write_grank(std::ostream& out, const GrankReport& r);
/// One point per line, coordinates separated by spaces.
void write_points(std::ostream& out, const std::vector<GridPoint>& pts);

/// Parsed limit or colimit output: the extremum blocks and the basis (limit) or
/// projection (colimit) matrix.
struct LimitText {
    bool colimit = false;
    std::size_t dim = 0;
    std::uint32_t field = 0;
    std::vector<std::pair<std::string, std::size_t>> extrema;
    Matrix matrix;
    bool operator==(const LimitText&) const = default;
};
LimitText read_limit(std::istream& in);
GrankReport read_grank(std::istream& in);
std::vector<GridPoint> read_points(std::istream& in);

}  // namespace scaffold::io
