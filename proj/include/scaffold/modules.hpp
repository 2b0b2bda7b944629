#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scaffold/field.hpp"
#include "scaffold/grid.hpp"
#include "scaffold/matrix.hpp"
#include "scaffold/poset.hpp"
#include "scaffold/scaffold.hpp"

namespace scaffold {

template <class Grade>
using GradeOrder = std::function<bool(const Grade&, const Grade&)>;

/// Matrix of a map between free modules; column j is a generator of grade col_grades[j]
/// in the source, row i a generator of grade row_grades[i] in the target.
template <class Grade>
struct LabeledMatrix {
    std::vector<Grade> row_grades;
    std::vector<Grade> col_grades;
    Matrix entries;

    /// True iff every nonzero entry (i, j) has row_grades[i] <= col_grades[j].
    bool respects_grades(const GradeOrder<Grade>& leq) const;
    /// The fiber matrix at p: rows and columns with grades <= p.
    Matrix restrict_to(const Grade& p, const GradeOrder<Grade>& leq) const;
};

/// Three-term complex X --f--> Y --g--> Z of free modules; the module of interest is
/// ker g / im f. f.row_grades must equal g.col_grades (the grades of Y).
template <class Grade>
struct QrComplex {
    Field field;
    LabeledMatrix<Grade> f;
    LabeledMatrix<Grade> g;

    std::size_t rank_x() const { return f.col_grades.size(); }
    std::size_t rank_y() const { return f.row_grades.size(); }
    std::size_t rank_z() const { return g.row_grades.size(); }
    /// Throws std::invalid_argument if shapes, grades, or g * f = 0 fail.
    void validate(const GradeOrder<Grade>& leq) const;
};

/// A finite subposet given by its elements and a list of (lower, upper) index pairs.
template <class Grade>
struct Carrier {
    std::vector<Grade> elements;
    std::vector<std::string> names;
    std::vector<Edge> relations;
};

/// Matrix representation of a module over a carrier: a fiber dimension per element and a
/// dims[upper] x dims[lower] matrix per stored relation.
struct ModuleRep {
    Field field;
    std::vector<std::string> names;
    std::vector<std::size_t> dims;
    std::vector<Edge> relations;
    std::vector<Matrix> maps;
    std::vector<std::vector<std::string>> basis_labels;

    std::size_t size() const { return names.size(); }
    std::optional<ElemId> find(const std::string& name) const;
    /// Stored map for (lower, upper); identity for lower == upper; nullptr if absent.
    const Matrix* map(ElemId lower, ElemId upper) const;
    /// Composite along stored relations from lower to upper, if a path exists.
    std::optional<Matrix> path_map(ElemId lower, ElemId upper) const;
};

/// Checks shapes, identity maps on identity relations, and that stored composable pairs
/// (a,b), (b,c) agree with a stored (a,c).
bool validate_rep(const ModuleRep& m, std::string* why = nullptr);

/// Restriction to the named elements, with a map for every requested (lower, upper) pair
/// composed along stored relations. Throws if a pair has no path.
ModuleRep restrict_rep(const ModuleRep& m, const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& relations);

/// Module representation of H = ker g / im f restricted to the carrier. Fiber bases are
/// canonical: they depend only on the fiber, so results on nested carriers agree.
template <class Grade>
ModuleRep homology_rep(const QrComplex<Grade>& c, const Carrier<Grade>& carrier, const GradeOrder<Grade>& leq);

/// The interval module k^Q on the carrier: dimension 1 where `member` holds, identity maps.
template <class Grade>
ModuleRep interval_module_rep(const Carrier<Grade>& carrier, const std::function<bool(const Grade&)>& member,
                              const Field& field);

/// Carrier on a scaffold's elements and relations.
Carrier<ElemId> carrier_of(const PosetScaffold& s, const Poset& q);
Carrier<GridPoint> carrier_of(const GridScaffold& s);
/// Carrier on all elements of a poset with its Hasse edges.
Carrier<ElemId> hasse_carrier(const Poset& q);

GradeOrder<ElemId> order_of(const Poset& q);
GradeOrder<GridPoint> grid_order();

}  // namespace scaffold
