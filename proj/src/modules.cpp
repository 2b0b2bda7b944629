#include "scaffold/modules.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

namespace scaffold {

namespace {

template <class Grade>
std::vector<std::size_t> indices_below(const std::vector<Grade>& grades, const Grade& p, const GradeOrder<Grade>& leq) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < grades.size(); ++i)
        if (leq(grades[i], p)) out.push_back(i);
    return out;
}

std::size_t leading_index(const Matrix& m, std::size_t col) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, col)) return r;
    return m.rows();
}

// Canonical data of one fiber of ker g / im f.
struct Fiber {
    std::vector<std::size_t> ys;  // Y generators with grade <= p
    Matrix basis;                 // |ys| x dim, homology basis representatives
    Matrix t_inv;                 // inverse of [K B | K E_C | E_D]
    std::size_t image_rank = 0;
    std::vector<std::string> labels;
};

template <class Grade>
Fiber compute_fiber(const QrComplex<Grade>& c, const Grade& p, const GradeOrder<Grade>& leq) {
    const Field& fld = c.field;
    Fiber fb;
    const auto xs = indices_below(c.f.col_grades, p, leq);
    fb.ys = indices_below(c.f.row_grades, p, leq);
    const auto zs = indices_below(c.g.row_grades, p, leq);
    const std::size_t ny = fb.ys.size();
    const Matrix fp = c.f.entries.submatrix(fb.ys, xs);
    const Matrix gp = c.g.entries.submatrix(zs, fb.ys);

    const Matrix k = kernel_basis(gp, fld);
    const std::size_t kdim = k.cols();
    std::vector<bool> k_pivot(ny, false);
    std::vector<std::size_t> k_lead(kdim);
    for (std::size_t j = 0; j < kdim; ++j) {
        k_lead[j] = leading_index(k, j);
        k_pivot[k_lead[j]] = true;
    }
    std::vector<std::size_t> d_idx;
    for (std::size_t i = 0; i < ny; ++i)
        if (!k_pivot[i]) d_idx.push_back(i);

    // Coordinates of im f_p in the basis [K | E_D]; the E_D part vanishes iff g f = 0 here.
    Matrix s(ny, ny);
    for (std::size_t i = 0; i < ny; ++i) {
        for (std::size_t j = 0; j < kdim; ++j) s(i, j) = k(i, j);
    }
    for (std::size_t j = 0; j < d_idx.size(); ++j) s(d_idx[j], kdim + j) = 1;
    const Matrix coords = multiply(inverse(s, fld), fp, fld);
    for (std::size_t i = kdim; i < ny; ++i)
        for (std::size_t j = 0; j < coords.cols(); ++j)
            if (coords(i, j)) throw std::invalid_argument("g * f is nonzero; not a chain complex");
    const Matrix gamma = coords.row_block(0, kdim);

    std::vector<std::size_t> b_piv;
    const Matrix b = echelon_span(gamma, fld, &b_piv).transpose();  // kdim x rank
    fb.image_rank = b.cols();
    std::vector<bool> is_b_piv(kdim, false);
    for (auto i : b_piv) is_b_piv[i] = true;
    std::vector<std::size_t> c_idx;
    for (std::size_t i = 0; i < kdim; ++i)
        if (!is_b_piv[i]) c_idx.push_back(i);

    const Matrix kb = multiply(k, b, fld);
    fb.basis = k.columns(c_idx);
    Matrix t(ny, ny);
    for (std::size_t i = 0; i < ny; ++i) {
        std::size_t col = 0;
        for (std::size_t j = 0; j < kb.cols(); ++j) t(i, col++) = kb(i, j);
        for (std::size_t j = 0; j < c_idx.size(); ++j) t(i, col++) = fb.basis(i, j);
    }
    for (std::size_t j = 0; j < d_idx.size(); ++j) t(d_idx[j], kb.cols() + c_idx.size() + j) = 1;
    fb.t_inv = inverse(t, fld);
    for (std::size_t ci : c_idx) fb.labels.push_back("y" + std::to_string(fb.ys[k_lead[ci]]));
    return fb;
}

}  // namespace

template <class Grade>
bool LabeledMatrix<Grade>::respects_grades(const GradeOrder<Grade>& leq) const {
    if (entries.rows() != row_grades.size() || entries.cols() != col_grades.size()) return false;
    for (std::size_t i = 0; i < entries.rows(); ++i)
        for (std::size_t j = 0; j < entries.cols(); ++j)
            if (entries(i, j) && !leq(row_grades[i], col_grades[j])) return false;
    return true;
}

template <class Grade>
Matrix LabeledMatrix<Grade>::restrict_to(const Grade& p, const GradeOrder<Grade>& leq) const {
    return entries.submatrix(indices_below(row_grades, p, leq), indices_below(col_grades, p, leq));
}

template <class Grade>
void QrComplex<Grade>::validate(const GradeOrder<Grade>& leq) const {
    if (f.row_grades != g.col_grades) throw std::invalid_argument("f and g disagree on the grades of Y");
    if (!f.respects_grades(leq)) throw std::invalid_argument("f has an entry that violates the grading");
    if (!g.respects_grades(leq)) throw std::invalid_argument("g has an entry that violates the grading");
    for (const auto* m : {&f.entries, &g.entries})
        for (std::size_t i = 0; i < m->rows(); ++i)
            for (Scalar v : m->row(i))
                if (v >= field.modulus()) throw std::invalid_argument("matrix entry not reduced modulo p");
    if (!multiply(g.entries, f.entries, field).is_zero()) throw std::invalid_argument("g * f is nonzero; not a chain complex");
}

template <class Grade>
ModuleRep homology_rep(const QrComplex<Grade>& c, const Carrier<Grade>& carrier, const GradeOrder<Grade>& leq) {
    c.validate(leq);
    const std::size_t n = carrier.elements.size();
    // A fiber only depends on which generators lie below p; neighbouring points mostly share it.
    std::map<std::vector<std::size_t>, std::size_t> fiber_of_key;
    std::vector<Fiber> fibers;
    std::vector<std::size_t> fiber_at(n);
    for (std::size_t e = 0; e < n; ++e) {
        const auto& p = carrier.elements[e];
        std::vector<std::size_t> key = indices_below(c.f.col_grades, p, leq);
        key.push_back(SIZE_MAX);
        for (auto i : indices_below(c.f.row_grades, p, leq)) key.push_back(i);
        key.push_back(SIZE_MAX);
        for (auto i : indices_below(c.g.row_grades, p, leq)) key.push_back(i);
        auto [it, fresh] = fiber_of_key.try_emplace(std::move(key), fibers.size());
        if (fresh) fibers.push_back(compute_fiber(c, p, leq));
        fiber_at[e] = it->second;
    }

    ModuleRep rep{c.field, carrier.names, {}, carrier.relations, {}, {}};
    for (std::size_t e = 0; e < n; ++e) {
        rep.dims.push_back(fibers[fiber_at[e]].basis.cols());
        rep.basis_labels.push_back(fibers[fiber_at[e]].labels);
    }
    std::map<std::pair<std::size_t, std::size_t>, Matrix> map_cache;
    for (const auto& r : carrier.relations) {
        if (r.lower >= n || r.upper >= n) throw std::out_of_range("carrier relation index out of range");
        if (!leq(carrier.elements[r.lower], carrier.elements[r.upper]))
            throw std::invalid_argument("carrier relation " + carrier.names[r.lower] + " <= " + carrier.names[r.upper] +
                                        " does not hold");
        const auto [slot, fresh] = map_cache.try_emplace({fiber_at[r.lower], fiber_at[r.upper]});
        if (fresh) {
            const Fiber& lo = fibers[fiber_at[r.lower]];
            const Fiber& up = fibers[fiber_at[r.upper]];
            // Reindex Y_p into Y_q, then read the homology coordinates off the C_q block.
            Matrix v(up.ys.size(), lo.basis.cols());
            for (std::size_t i = 0; i < lo.ys.size(); ++i) {
                auto it = std::lower_bound(up.ys.begin(), up.ys.end(), lo.ys[i]);
                for (std::size_t j = 0; j < lo.basis.cols(); ++j) v(it - up.ys.begin(), j) = lo.basis(i, j);
            }
            const Matrix w = multiply(up.t_inv, v, c.field);
            slot->second = w.row_block(up.image_rank, up.basis.cols());
        }
        rep.maps.push_back(slot->second);
    }
    return rep;
}

template <class Grade>
ModuleRep interval_module_rep(const Carrier<Grade>& carrier, const std::function<bool(const Grade&)>& member,
                              const Field& field) {
    ModuleRep rep{field, carrier.names, {}, carrier.relations, {}, {}};
    for (const auto& p : carrier.elements) {
        const bool in = member(p);
        rep.dims.push_back(in ? 1 : 0);
        rep.basis_labels.push_back(in ? std::vector<std::string>{"1"} : std::vector<std::string>{});
    }
    for (const auto& r : carrier.relations) {
        Matrix m(rep.dims[r.upper], rep.dims[r.lower]);
        if (m.rows() && m.cols()) m(0, 0) = 1;
        rep.maps.push_back(std::move(m));
    }
    return rep;
}

template struct LabeledMatrix<ElemId>;
template struct LabeledMatrix<GridPoint>;
template struct QrComplex<ElemId>;
template struct QrComplex<GridPoint>;
template ModuleRep homology_rep(const QrComplex<ElemId>&, const Carrier<ElemId>&, const GradeOrder<ElemId>&);
template ModuleRep homology_rep(const QrComplex<GridPoint>&, const Carrier<GridPoint>&, const GradeOrder<GridPoint>&);
template ModuleRep interval_module_rep(const Carrier<ElemId>&, const std::function<bool(const ElemId&)>&, const Field&);
template ModuleRep interval_module_rep(const Carrier<GridPoint>&, const std::function<bool(const GridPoint&)>&,
                                       const Field&);

std::optional<ElemId> ModuleRep::find(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<ElemId>(it - names.begin());
}

const Matrix* ModuleRep::map(ElemId lower, ElemId upper) const {
    for (std::size_t k = 0; k < relations.size(); ++k)
        if (relations[k].lower == lower && relations[k].upper == upper) return &maps[k];
    return nullptr;
}

std::optional<Matrix> ModuleRep::path_map(ElemId lower, ElemId upper) const {
    if (lower == upper) return Matrix::identity(dims[lower]);
    std::vector<std::vector<std::size_t>> out(size());
    for (std::size_t k = 0; k < relations.size(); ++k)
        if (relations[k].lower != relations[k].upper) out[relations[k].lower].push_back(k);
    std::vector<std::size_t> via(size(), SIZE_MAX);
    std::vector<bool> seen(size(), false);
    std::queue<ElemId> todo;
    todo.push(lower);
    seen[lower] = true;
    while (!todo.empty() && !seen[upper]) {
        ElemId a = todo.front();
        todo.pop();
        for (std::size_t k : out[a]) {
            ElemId b = relations[k].upper;
            if (!seen[b]) {
                seen[b] = true;
                via[b] = k;
                todo.push(b);
            }
        }
    }
    if (!seen[upper]) return std::nullopt;
    Matrix acc = Matrix::identity(dims[upper]);
    for (ElemId b = upper; b != lower; b = relations[via[b]].lower) acc = multiply(acc, maps[via[b]], field);
    return acc;
}

bool validate_rep(const ModuleRep& m, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    const std::size_t n = m.size();
    if (m.dims.size() != n) return fail("dimension list does not match element count");
    if (m.maps.size() != m.relations.size()) return fail("map count does not match relation count");
    std::map<std::pair<ElemId, ElemId>, std::size_t> index;
    for (std::size_t k = 0; k < m.relations.size(); ++k) {
        const auto [a, b] = m.relations[k];
        if (a >= n || b >= n) return fail("relation index out of range");
        const Matrix& g = m.maps[k];
        if (g.rows() != m.dims[b] || g.cols() != m.dims[a])
            return fail("map " + m.names[a] + " -> " + m.names[b] + " has the wrong shape");
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (Scalar v : g.row(i))
                if (v >= m.field.modulus()) return fail("map entry not reduced modulo p");
        if (a == b && g != Matrix::identity(m.dims[a])) return fail("identity relation on " + m.names[a] + " is not the identity");
        index[{a, b}] = k;
    }
    for (const auto& r1 : m.relations)
        for (const auto& r2 : m.relations) {
            if (r1.upper != r2.lower || r1.lower == r1.upper || r2.lower == r2.upper) continue;
            auto it = index.find({r1.lower, r2.upper});
            if (it == index.end()) continue;
            const Matrix composite = multiply(m.maps[index[{r2.lower, r2.upper}]], m.maps[index[{r1.lower, r1.upper}]], m.field);
            if (composite != m.maps[it->second])
                return fail("maps through " + m.names[r1.upper] + " do not compose to " + m.names[r1.lower] + " -> " +
                            m.names[r2.upper]);
        }
    return true;
}

ModuleRep restrict_rep(const ModuleRep& m, const std::vector<std::string>& names,
                       const std::vector<std::pair<std::string, std::string>>& relations) {
    ModuleRep out{m.field, names, {}, {}, {}, {}};
    std::vector<ElemId> src;
    std::map<std::string, ElemId> local;
    for (const auto& nm : names) {
        auto e = m.find(nm);
        if (!e) throw std::invalid_argument("module has no element '" + nm + "'");
        local[nm] = static_cast<ElemId>(src.size());
        src.push_back(*e);
        out.dims.push_back(m.dims[*e]);
        out.basis_labels.push_back(m.basis_labels.size() == m.size() ? m.basis_labels[*e] : std::vector<std::string>{});
    }
    for (const auto& [a, b] : relations) {
        auto ia = local.find(a), ib = local.find(b);
        if (ia == local.end() || ib == local.end()) throw std::invalid_argument("relation endpoint outside the restriction");
        auto g = m.path_map(src[ia->second], src[ib->second]);
        if (!g) throw std::invalid_argument("module has no map from " + a + " to " + b);
        out.relations.push_back({ia->second, ib->second});
        out.maps.push_back(std::move(*g));
    }
    return out;
}

Carrier<ElemId> carrier_of(const PosetScaffold& s, const Poset& q) {
    Carrier<ElemId> c;
    c.elements = s.elements;
    for (ElemId e : s.elements) c.names.push_back(q.name(e));
    for (const auto& r : s.relations)
        c.relations.push_back(s.direction == Direction::Initial ? Edge{r.extremum, r.element} : Edge{r.element, r.extremum});
    return c;
}

Carrier<GridPoint> carrier_of(const GridScaffold& s) {
    Carrier<GridPoint> c;
    c.elements = s.elements;
    for (const auto& p : s.elements) c.names.push_back(p.to_string());
    for (const auto& r : s.relations)
        c.relations.push_back(s.direction == Direction::Initial ? Edge{r.extremum, r.element} : Edge{r.element, r.extremum});
    return c;
}

Carrier<ElemId> hasse_carrier(const Poset& q) {
    Carrier<ElemId> c;
    for (ElemId e = 0; e < q.size(); ++e) {
        c.elements.push_back(e);
        c.names.push_back(q.name(e));
    }
    c.relations = q.hasse_edges();
    return c;
}

GradeOrder<ElemId> order_of(const Poset& q) {
    return [&q](const ElemId& a, const ElemId& b) { return q.leq(a, b); };
}

GradeOrder<GridPoint> grid_order() {
    return [](const GridPoint& a, const GridPoint& b) { return leq(a, b); };
}

}  // namespace scaffold
