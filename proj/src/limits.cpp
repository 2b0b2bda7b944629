#include "scaffold/limits.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "scaffold/general_scaffold.hpp"
#include "scaffold/grid_scaffold.hpp"
#include "scaffold/segment_echelon.hpp"

namespace scaffold {

namespace {

class MapIndex {
public:
    explicit MapIndex(const ModuleRep& g) : g_(g) {
        for (std::size_t k = 0; k < g.relations.size(); ++k) idx_[{g.relations[k].lower, g.relations[k].upper}] = k;
    }
    const Matrix& at(ElemId lower, ElemId upper) const {
        auto it = idx_.find({lower, upper});
        if (it == idx_.end())
            throw std::invalid_argument("module has no map for " + g_.names[lower] + " <= " + g_.names[upper]);
        return g_.maps[it->second];
    }

private:
    const ModuleRep& g_;
    std::map<std::pair<ElemId, ElemId>, std::size_t> idx_;
};

std::vector<std::size_t> block_offsets(const ModuleRep& g, const std::vector<ElemId>& extrema) {
    std::vector<std::size_t> off(extrema.size() + 1, 0);
    for (std::size_t i = 0; i < extrema.size(); ++i) off[i + 1] = off[i] + g.dims.at(extrema[i]);
    return off;
}

std::vector<std::int64_t> slot_table(const ModuleRep& g, const std::vector<ElemId>& extrema) {
    std::vector<std::int64_t> slot(g.size(), -1);
    for (std::size_t i = 0; i < extrema.size(); ++i) slot.at(extrema[i]) = static_cast<std::int64_t>(i);
    return slot;
}

// Relations grouped by their non-extremal endpoint, anchors sorted by variable order.
std::map<ElemId, std::vector<std::size_t>> anchors_by_element(const ScaffoldView& v,
                                                              const std::vector<std::int64_t>& slot) {
    std::map<ElemId, std::vector<std::size_t>> out;
    const bool initial = v.direction == Direction::Initial;
    for (const auto& r : v.relations) {
        const ElemId ext = initial ? r.lower : r.upper;
        const ElemId elem = initial ? r.upper : r.lower;
        if (slot.at(ext) < 0) throw std::invalid_argument("scaffold relation anchored outside the extrema");
        out[elem].push_back(static_cast<std::size_t>(slot[ext]));
    }
    for (auto& [e, a] : out) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return out;
}

std::optional<std::size_t> find_slot(const std::vector<ElemId>& extrema, ElemId e) {
    auto it = std::find(extrema.begin(), extrema.end(), e);
    if (it == extrema.end()) return std::nullopt;
    return static_cast<std::size_t>(it - extrema.begin());
}

}  // namespace

ScaffoldView make_view(const ModuleRep& g, Direction dir, const std::vector<std::string>& extrema,
                       const std::vector<std::pair<std::string, std::string>>& relations) {
    std::unordered_map<std::string, ElemId> idx;
    for (ElemId i = 0; i < g.size(); ++i) idx.emplace(g.names[i], i);
    auto look = [&](const std::string& n) {
        auto it = idx.find(n);
        if (it == idx.end()) throw std::invalid_argument("module has no element '" + n + "'");
        return it->second;
    };
    ScaffoldView v;
    v.direction = dir;
    for (const auto& n : extrema) v.extrema.push_back(look(n));
    for (const auto& [ext, elem] : relations) {
        if (dir == Direction::Initial)
            v.relations.push_back({look(ext), look(elem)});
        else
            v.relations.push_back({look(elem), look(ext)});
    }
    return v;
}

ScaffoldView make_view(const ModuleRep& g, const PosetScaffold& s, const Poset& q) {
    std::vector<std::string> ext;
    std::vector<bool> anchored(s.elements.size(), false);
    for (const auto& r : s.relations) anchored[r.element] = true;
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        if (!anchored[i]) ext.push_back(q.name(s.elements[i]));
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& r : s.relations) rels.emplace_back(q.name(s.elements[r.extremum]), q.name(s.elements[r.element]));
    return make_view(g, s.direction, ext, rels);
}

ScaffoldView make_view(const ModuleRep& g, const GridScaffold& s) {
    std::vector<std::string> ext;
    std::vector<bool> anchored(s.elements.size(), false);
    for (const auto& r : s.relations) anchored[r.element] = true;
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        if (!anchored[i]) ext.push_back(s.elements[i].to_string());
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& r : s.relations)
        rels.emplace_back(s.elements[r.extremum].to_string(), s.elements[r.element].to_string());
    return make_view(g, s.direction, ext, rels);
}

Matrix PresectionBasis::block(std::size_t i) const { return basis.row_block(offsets[i], offsets[i + 1] - offsets[i]); }

std::optional<std::size_t> PresectionBasis::slot(ElemId e) const { return find_slot(extrema, e); }

Matrix CopresentationBasis::block(std::size_t i) const {
    std::vector<std::size_t> cols(offsets[i + 1] - offsets[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = offsets[i] + j;
    return projection.columns(cols);
}

std::optional<std::size_t> CopresentationBasis::slot(ElemId e) const { return find_slot(extrema, e); }

PresectionBasis limit_presections(const ModuleRep& g, const ScaffoldView& view) {
    if (view.direction != Direction::Initial) throw std::invalid_argument("limits need an initial scaffold");
    PresectionBasis out;
    out.extrema = view.extrema;
    out.offsets = block_offsets(g, out.extrema);
    const auto slot = slot_table(g, out.extrema);
    const MapIndex maps(g);
    SegmentEchelon sys(out.offsets.back(), g.field);
    for (const auto& [q, anchors] : anchors_by_element(view, slot)) {
        for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
            const std::size_t a = anchors[k], b = anchors[k + 1];
            const Matrix& ga = maps.at(out.extrema[a], q);
            const Matrix& gb = maps.at(out.extrema[b], q);
            const std::size_t start = out.offsets[a];
            for (std::size_t r = 0; r < g.dims[q]; ++r) {
                SegmentRow row{start, std::vector<Scalar>(out.offsets[b + 1] - start, 0)};
                for (std::size_t j = 0; j < ga.cols(); ++j) row.values[j] = ga(r, j);
                for (std::size_t j = 0; j < gb.cols(); ++j)
                    row.values[out.offsets[b] - start + j] = g.field.neg(gb(r, j));
                sys.add_row(std::move(row));
            }
        }
    }
    out.basis = sys.kernel_basis();
    return out;
}

PresectionBasis limit_full_equalizer(const ModuleRep& g) {
    PresectionBasis out;
    for (ElemId e = 0; e < g.size(); ++e) out.extrema.push_back(e);
    out.offsets = block_offsets(g, out.extrema);
    SegmentEchelon sys(out.offsets.back(), g.field);
    for (std::size_t k = 0; k < g.relations.size(); ++k) {
        const auto [a, b] = g.relations[k];
        if (a == b) continue;
        const Matrix& m = g.maps[k];
        const std::size_t start = std::min(out.offsets[a], out.offsets[b]);
        const std::size_t end = std::max(out.offsets[a + 1], out.offsets[b + 1]);
        for (std::size_t r = 0; r < g.dims[b]; ++r) {
            SegmentRow row{start, std::vector<Scalar>(end - start, 0)};
            for (std::size_t j = 0; j < m.cols(); ++j) row.values[out.offsets[a] - start + j] = m(r, j);
            row.values[out.offsets[b] - start + r] = g.field.neg(1);
            sys.add_row(std::move(row));
        }
    }
    out.basis = sys.kernel_basis();
    return out;
}

std::vector<Scalar> extend_presection(const PresectionBasis& lim, std::size_t col, ElemId q, const ModuleRep& g,
                                      bool check_all) {
    std::optional<std::vector<Scalar>> value;
    for (std::size_t i = 0; i < lim.extrema.size(); ++i) {
        auto path = g.path_map(lim.extrema[i], q);
        if (!path) continue;
        std::vector<Scalar> v(path->rows(), 0);
        for (std::size_t r = 0; r < path->rows(); ++r) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < path->cols(); ++j)
                acc = (acc + std::uint64_t{(*path)(r, j)} * lim.basis(lim.offsets[i] + j, col)) % g.field.modulus();
            v[r] = static_cast<Scalar>(acc);
        }
        if (!value) {
            value = std::move(v);
            if (!check_all) break;
        } else if (*value != v) {
            throw std::logic_error("presection extensions disagree at " + g.names[q]);
        }
    }
    if (!value) throw std::invalid_argument("no extremum below " + g.names[q]);
    return *value;
}

CopresentationBasis colimit_copresentations(const ModuleRep& g, const ScaffoldView& view) {
    if (view.direction != Direction::Final) throw std::invalid_argument("colimits need a final scaffold");
    CopresentationBasis out;
    out.extrema = view.extrema;
    out.offsets = block_offsets(g, out.extrema);
    const auto slot = slot_table(g, out.extrema);
    const MapIndex maps(g);
    SegmentEchelon sys(out.offsets.back(), g.field);
    for (const auto& [q, anchors] : anchors_by_element(view, slot)) {
        for (std::size_t k = 0; k + 1 < anchors.size(); ++k) {
            const std::size_t a = anchors[k], b = anchors[k + 1];
            const Matrix& ga = maps.at(q, out.extrema[a]);
            const Matrix& gb = maps.at(q, out.extrema[b]);
            const std::size_t start = out.offsets[a];
            for (std::size_t x = 0; x < g.dims[q]; ++x) {
                SegmentRow row{start, std::vector<Scalar>(out.offsets[b + 1] - start, 0)};
                for (std::size_t i = 0; i < ga.rows(); ++i) row.values[i] = ga(i, x);
                for (std::size_t i = 0; i < gb.rows(); ++i)
                    row.values[out.offsets[b] - start + i] = g.field.neg(gb(i, x));
                sys.add_row(std::move(row));
            }
        }
    }
    out.projection = sys.quotient_projection();
    out.representatives = sys.free_columns();
    return out;
}

CopresentationBasis colimit_full_coequalizer(const ModuleRep& g) {
    CopresentationBasis out;
    for (ElemId e = 0; e < g.size(); ++e) out.extrema.push_back(e);
    out.offsets = block_offsets(g, out.extrema);
    SegmentEchelon sys(out.offsets.back(), g.field);
    for (std::size_t k = 0; k < g.relations.size(); ++k) {
        const auto [a, b] = g.relations[k];
        if (a == b) continue;
        const Matrix& m = g.maps[k];
        const std::size_t start = std::min(out.offsets[a], out.offsets[b]);
        const std::size_t end = std::max(out.offsets[a + 1], out.offsets[b + 1]);
        for (std::size_t x = 0; x < g.dims[a]; ++x) {
            SegmentRow row{start, std::vector<Scalar>(end - start, 0)};
            row.values[out.offsets[a] - start + x] = 1;
            for (std::size_t i = 0; i < m.rows(); ++i)
                row.values[out.offsets[b] - start + i] = g.field.sub(row.values[out.offsets[b] - start + i], m(i, x));
            sys.add_row(std::move(row));
        }
    }
    out.projection = sys.quotient_projection();
    out.representatives = sys.free_columns();
    return out;
}

namespace {

GrankReport grank_from(const ModuleRep& g, const PresectionBasis& lim, const CopresentationBasis& colim, ElemId m,
                       ElemId w, const Matrix& h) {
    auto sm = lim.slot(m);
    auto sw = colim.slot(w);
    if (!sm || !sw) throw std::invalid_argument("chosen pair is not a (minimum, maximum) of the scaffolds");
    const Matrix delta = lim.block(*sm);
    const Matrix codelta = colim.block(*sw);
    GrankReport rep;
    rep.dim_lim = lim.dim();
    rep.dim_colim = colim.dim();
    rep.grank = rank(multiply(codelta, multiply(h, delta, g.field), g.field), g.field);
    rep.m = g.names[m];
    rep.w = g.names[w];
    return rep;
}

Matrix structure_map(const ModuleRep& g, ElemId m, ElemId w) {
    if (m == w) return Matrix::identity(g.dims[m]);
    if (const Matrix* direct = g.map(m, w)) return *direct;
    auto path = g.path_map(m, w);
    if (!path) throw std::invalid_argument("module has no map " + g.names[m] + " -> " + g.names[w]);
    return *path;
}

}  // namespace

GrankReport generalized_rank(const ModuleRep& g, const ScaffoldView& initial, const ScaffoldView& final_view,
                             ElemId m, ElemId w) {
    return grank_from(g, limit_presections(g, initial), colimit_copresentations(g, final_view), m, w,
                      structure_map(g, m, w));
}

GrankReport generalized_rank_full(const ModuleRep& g, ElemId m, ElemId w) {
    return grank_from(g, limit_full_equalizer(g), colimit_full_coequalizer(g), m, w, structure_map(g, m, w));
}

std::pair<ElemId, ElemId> choose_extremal_pair(const Poset& q) {
    if (!q.is_connected()) throw std::invalid_argument("generalized rank needs a connected poset");
    const auto mins = q.minima();
    const auto maxs = q.maxima();
    for (ElemId m : mins)
        for (ElemId w : maxs)
            if (q.leq(m, w)) return {m, w};
    throw std::invalid_argument("no comparable (minimum, maximum) pair");
}

std::pair<GridPoint, GridPoint> choose_extremal_pair(const GridInterval& q) {
    const auto maxs = q.maxima();
    for (const auto& m : q.minima())
        for (const auto& w : maxs)
            if (leq(m, w)) return {m, w};
    throw std::invalid_argument("no comparable (minimum, maximum) pair");
}

namespace {

template <class Grade>
void add_scaffold_relations(Carrier<Grade>& c, const Scaffold<Grade>& s, const std::map<Grade, ElemId>& at) {
    for (const auto& r : s.relations) {
        ElemId ext = at.at(s.elements[r.extremum]), elem = at.at(s.elements[r.element]);
        c.relations.push_back(s.direction == Direction::Initial ? Edge{ext, elem} : Edge{elem, ext});
    }
}

template <class Grade, class Name>
Carrier<Grade> build_grank_carrier(const Scaffold<Grade>& initial, const Scaffold<Grade>& final_s, const Grade& m,
                                   const Grade& w, Name name) {
    std::vector<Grade> elems = initial.elements;
    elems.insert(elems.end(), final_s.elements.begin(), final_s.elements.end());
    elems.push_back(m);
    elems.push_back(w);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Carrier<Grade> c;
    std::map<Grade, ElemId> at;
    for (const auto& e : elems) {
        at.emplace(e, static_cast<ElemId>(c.elements.size()));
        c.elements.push_back(e);
        c.names.push_back(name(e));
    }
    add_scaffold_relations(c, initial, at);
    add_scaffold_relations(c, final_s, at);
    if (m != w) c.relations.push_back({at.at(m), at.at(w)});
    std::sort(c.relations.begin(), c.relations.end());
    c.relations.erase(std::unique(c.relations.begin(), c.relations.end()), c.relations.end());
    return c;
}

}  // namespace

Carrier<ElemId> grank_carrier(const Poset& q, const PosetScaffold& initial, const PosetScaffold& final_s, ElemId m,
                              ElemId w) {
    return build_grank_carrier(initial, final_s, m, w, [&](ElemId e) { return q.name(e); });
}

Carrier<GridPoint> grank_carrier(const GridScaffold& initial, const GridScaffold& final_s, const GridPoint& m,
                                 const GridPoint& w) {
    return build_grank_carrier(initial, final_s, m, w, [](const GridPoint& p) { return p.to_string(); });
}

GrankReport generalized_rank(const QrComplex<ElemId>& c, const Poset& q) {
    const auto [m, w] = choose_extremal_pair(q);
    const auto pi = initial_scaffold(q);
    const auto pf = final_scaffold(q);
    const auto rep = homology_rep(c, grank_carrier(q, pi, pf, m, w), order_of(q));
    return generalized_rank(rep, make_view(rep, pi, q), make_view(rep, pf, q), *rep.find(q.name(m)),
                            *rep.find(q.name(w)));
}

GrankReport generalized_rank(const QrComplex<GridPoint>& c, const GridInterval& q) {
    const auto [m, w] = choose_extremal_pair(q);
    const auto pi = initial_scaffold(q);
    const auto pf = final_scaffold(q);
    const auto rep = homology_rep(c, grank_carrier(pi, pf, m, w), grid_order());
    return generalized_rank(rep, make_view(rep, pi), make_view(rep, pf), *rep.find(m.to_string()),
                            *rep.find(w.to_string()));
}

GrankReport generalized_rank(const ModuleRep& g, const Poset& q) {
    const auto [m, w] = choose_extremal_pair(q);
    const auto pi = initial_scaffold(q);
    const auto pf = final_scaffold(q);
    const auto carrier = grank_carrier(q, pi, pf, m, w);
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& r : carrier.relations) rels.emplace_back(carrier.names[r.lower], carrier.names[r.upper]);
    const auto rep = restrict_rep(g, carrier.names, rels);
    return generalized_rank(rep, make_view(rep, pi, q), make_view(rep, pf, q), *rep.find(q.name(m)),
                            *rep.find(q.name(w)));
}

}  // namespace scaffold
