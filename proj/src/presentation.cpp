#include "scaffold/presentation.hpp"

#include <algorithm>

#include "scaffold/general_scaffold.hpp"
#include "scaffold/grid_scaffold.hpp"

namespace scaffold {

namespace {

template <class Grade>
QrComplex<Grade> present(const Scaffold<Grade>& s, const std::vector<Grade>& minima, const std::vector<Grade>& killers,
                         const GradeOrder<Grade>& leq, const Field& field) {
    QrComplex<Grade> c{field, {}, {}};
    c.f.row_grades = minima;
    c.g.col_grades = minima;
    auto gen = [&](const Grade& m) {
        return static_cast<std::size_t>(std::lower_bound(minima.begin(), minima.end(), m) - minima.begin());
    };
    std::vector<std::vector<std::size_t>> cols;
    for (std::size_t e = 0; e < s.elements.size(); ++e) {
        std::vector<std::size_t> anchors;
        for (const auto& r : s.relations)
            if (r.element == e) anchors.push_back(gen(s.elements[r.extremum]));
        std::sort(anchors.begin(), anchors.end());
        for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
            c.f.col_grades.push_back(s.elements[e]);
            cols.push_back({anchors[k], anchors[k + 1]});
        }
    }
    for (const auto& kill : killers) {
        auto m = std::find_if(minima.begin(), minima.end(), [&](const Grade& g) { return leq(g, kill); });
        c.f.col_grades.push_back(kill);
        cols.push_back({static_cast<std::size_t>(m - minima.begin())});
    }
    c.f.entries = Matrix(minima.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        c.f.entries(cols[j][0], j) = 1;
        if (cols[j].size() == 2) c.f.entries(cols[j][1], j) = field.neg(1);
    }
    c.g.entries = Matrix(0, minima.size());
    return c;
}

}  // namespace

QrComplex<ElemId> interval_presentation(const Poset& q, const Field& field) {
    return present<ElemId>(initial_scaffold(q), q.minima(), {}, order_of(q), field);
}

QrComplex<GridPoint> interval_presentation(const GridInterval& q, const Field& field) {
    // Relations come from the scaffold of Up(Q), including essential points outside Q.
    const auto up = GridInterval::upset(q.dim(), q.minima());
    return present<GridPoint>(initial_scaffold(up), q.minima(), q.cogenerators(), grid_order(), field);
}

}  // namespace scaffold
