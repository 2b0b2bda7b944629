#include "scaffold/grid_scaffold.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace scaffold {

namespace {

struct P3 {
    Coord x, y, z;
    bool operator==(const P3&) const = default;
    auto operator<=>(const P3&) const = default;
};

struct P3Hash {
    std::size_t operator()(const P3& p) const noexcept {
        std::uint64_t h = (std::uint64_t{p.x} * 0x9e3779b97f4a7c15ull) ^ (std::uint64_t{p.y} * 0xc2b2ae3d27d4eb4full);
        return static_cast<std::size_t>(h ^ (std::uint64_t{p.z} * 0x165667b19e3779f9ull) ^ (h >> 29));
    }
};

P3 embed(const GridPoint& p) { return {p[0], p[1], p.dim() == 3 ? p[2] : 0}; }

GridPoint unembed(const P3& p, std::size_t d) {
    return d == 3 ? GridPoint{p.x, p.y, p.z} : GridPoint{p.x, p.y};
}

/// Minimal points of a planar upset, keyed by x; y strictly decreases with x.
class Staircase {
public:
    bool covers(Coord x, Coord y) const {  // some stored point <= (x, y)
        auto it = s_.upper_bound(x);
        return it != s_.begin() && std::prev(it)->second <= y;
    }
    void insert(Coord x, Coord y) {
        if (covers(x, y)) return;
        auto it = s_.lower_bound(x);
        while (it != s_.end() && it->second >= y) it = s_.erase(it);
        s_[x] = y;
    }

private:
    std::map<Coord, Coord> s_;
};

/// Marks which of `pts` (all in Up(Q)) lie in Q, sweeping the boundary slice by slice.
std::vector<bool> filter_by_slices(const GridInterval& q, const std::vector<P3>& pts) {
    std::vector<P3> bnd;
    for (const auto& b : q.boundary()) bnd.push_back(embed(b));
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<bool> keep(pts.size(), false);
    Staircase stair;
    if (q.boundary_kind() == GridInterval::Boundary::Cogenerators) {
        // p leaves Q once some cogenerator at height <= p.z lies below it.
        std::sort(bnd.begin(), bnd.end(), [](auto& a, auto& b) { return a.z < b.z; });
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a].z < pts[b].z; });
        std::size_t next = 0;
        for (std::size_t i : order) {
            while (next < bnd.size() && bnd[next].z <= pts[i].z) {
                stair.insert(bnd[next].x, bnd[next].y);
                ++next;
            }
            keep[i] = !stair.covers(pts[i].x, pts[i].y);
        }
    } else {
        // p stays in Q iff some maximum at height >= p.z lies above it; complemented coordinates
        // turn "above" into "below".
        std::sort(bnd.begin(), bnd.end(), [](auto& a, auto& b) { return a.z > b.z; });
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a].z > pts[b].z; });
        std::size_t next = 0;
        for (std::size_t i : order) {
            while (next < bnd.size() && bnd[next].z >= pts[i].z) {
                stair.insert(~bnd[next].x, ~bnd[next].y);
                ++next;
            }
            keep[i] = stair.covers(~pts[i].x, ~pts[i].y);
        }
    }
    return keep;
}

class ScaffoldBuilder {
public:
    std::uint32_t element(const P3& p) {
        auto [it, fresh] = index_.emplace(p, static_cast<std::uint32_t>(points_.size()));
        if (fresh) points_.push_back(p);
        return it->second;
    }
    void relate(const P3& lower, const P3& upper) { rel_.push_back({element(lower), element(upper)}); }
    bool has(const P3& p) const { return index_.count(p) != 0; }

    GridScaffold finish(const GridInterval& q) {
        const auto keep = filter_by_slices(q, points_);
        GridScaffold s;
        std::vector<std::uint32_t> slot(points_.size(), UINT32_MAX);
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (keep[i]) {
                slot[i] = static_cast<std::uint32_t>(s.elements.size());
                s.elements.push_back(unembed(points_[i], q.dim()));
            }
        for (const auto& r : rel_)
            if (keep[r.element]) s.relations.push_back({slot[r.extremum], slot[r.element]});
        s.normalize();
        return s;
    }

private:
    std::unordered_map<P3, std::uint32_t, P3Hash> index_;
    std::vector<P3> points_;
    std::vector<ScaffoldRelation> rel_;
};

struct FrontierEntry {
    Coord y;
    Coord birth;
};

}  // namespace

GridScaffold scaffold_sweep(const GridInterval& q, SweepTrace* trace) {
    const std::size_t d = q.dim();
    if (d != 2 && d != 3) throw std::invalid_argument("the slice sweep needs dimension 2 or 3");

    std::vector<P3> mins;
    mins.reserve(q.minima().size());
    for (const auto& m : q.minima()) mins.push_back(embed(m));
    std::sort(mins.begin(), mins.end(), [](const P3& a, const P3& b) { return std::tie(a.z, a.x) < std::tie(b.z, b.x); });

    ScaffoldBuilder out;
    for (const auto& m : mins) out.element(m);
    std::map<Coord, FrontierEntry> frontier;  // current slice minima with their birth heights
    if (trace) trace->levels.clear();

    for (std::size_t lo = 0; lo < mins.size();) {
        const Coord z = mins[lo].z;
        std::size_t hi = lo;
        while (hi < mins.size() && mins[hi].z == z) ++hi;
        std::map<Coord, Coord> dead_by_x, dead_by_y;  // X points at this height
        SweepLevel level{z, {}, {}};

        // Slice minima dominated by a new generator die here; the generator is the other anchor.
        for (std::size_t i = lo; i < hi; ++i) {
            const P3& m = mins[i];
            auto it = frontier.lower_bound(m.x);
            while (it != frontier.end() && it->second.y >= m.y) {
                const P3 dead{it->first, it->second.y, z};
                dead_by_x[dead.x] = dead.y;
                dead_by_y[dead.y] = dead.x;
                out.relate({dead.x, dead.y, it->second.birth}, dead);
                out.relate(m, dead);
                if (trace) level.x_points.push_back(unembed(dead, d));
                it = frontier.erase(it);
            }
            frontier[m.x] = {m.y, z};
        }

        // Joins of a new generator with its neighbours in the slice, unless a dying point
        // sits strictly between them.
        std::optional<Coord> skip;
        for (std::size_t i = lo; i < hi; ++i) {
            const P3& m = mins[i];
            auto it = frontier.find(m.x);
            if (it != frontier.begin() && skip != m.x) {
                auto pv = std::prev(it);
                auto v = dead_by_x.find(m.x);
                if (v == dead_by_x.end() || v->second >= pv->second.y) {
                    const P3 p{m.x, pv->second.y, z};
                    out.relate({pv->first, pv->second.y, pv->second.birth}, p);
                    out.relate(m, p);
                    if (trace) level.w_points.push_back(unembed(p, d));
                }
            }
            if (auto nx = std::next(it); nx != frontier.end()) {
                auto v = dead_by_y.find(m.y);
                if (v == dead_by_y.end() || v->second >= nx->first) {
                    const P3 p{nx->first, m.y, z};
                    out.relate(m, p);
                    out.relate({nx->first, nx->second.y, nx->second.birth}, p);
                    if (trace) level.w_points.push_back(unembed(p, d));
                    skip = nx->first;
                }
            }
        }
        if (trace) {
            std::sort(level.w_points.begin(), level.w_points.end());
            std::sort(level.x_points.begin(), level.x_points.end());
            trace->levels.push_back(std::move(level));
        }
        lo = hi;
    }
    return out.finish(q);
}

GridScaffold scaffold_joins(const GridInterval& q) {
    const std::size_t d = q.dim();
    const auto& gens = q.minima();
    std::vector<GridPoint> cand = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) cand.push_back(join(gens[i], gens[j]));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Lexicographic order is a linear extension, so everything below t is already decided.
    const std::size_t cap = cand.size();
    std::vector<Coord> soa(d * cap);
    std::vector<GridPoint> pts;
    std::vector<bool> is_min;
    std::vector<std::vector<std::uint32_t>> anchors;  // minima related to each element
    std::vector<ScaffoldRelation> rels;
    std::vector<std::uint8_t> mask(cap);
    std::vector<std::uint32_t> parent(cap);
    auto root = [&](std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto push = [&](const GridPoint& t, bool minimum) {
        const std::size_t k = pts.size();
        for (std::size_t c = 0; c < d; ++c) soa[c * cap + k] = t[c];
        pts.push_back(t);
        is_min.push_back(minimum);
        anchors.emplace_back();
        return static_cast<std::uint32_t>(k);
    };

    for (const auto& t : cand) {
        if (std::binary_search(gens.begin(), gens.end(), t)) {
            push(t, true);
            continue;
        }
        const std::size_t k = pts.size();
        kernels::leq_mask({soa, k, cap, d}, t.coords(), std::span(mask.data(), k));
        for (std::uint32_t i = 0; i < k; ++i) parent[i] = i;
        for (std::uint32_t i = 0; i < k; ++i)
            if (mask[i])
                for (std::uint32_t a : anchors[i]) parent[root(a)] = root(i);
        std::vector<std::uint32_t> reps;  // first (lex-smallest) minimum seen per component
        std::vector<std::uint32_t> seen_roots;
        for (std::uint32_t i = 0; i < k; ++i) {
            if (!mask[i] || !is_min[i]) continue;
            std::uint32_t r = root(i);
            if (std::find(seen_roots.begin(), seen_roots.end(), r) == seen_roots.end()) {
                seen_roots.push_back(r);
                reps.push_back(i);
            }
        }
        if (reps.size() < 2) continue;
        const std::uint32_t e = push(t, false);
        anchors[e] = reps;
        for (std::uint32_t m : reps) rels.push_back({m, e});
    }

    GridScaffold s;
    std::vector<std::uint32_t> slot(pts.size(), UINT32_MAX);
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (q.contains(pts[i])) {
            slot[i] = static_cast<std::uint32_t>(s.elements.size());
            s.elements.push_back(pts[i]);
        }
    for (const auto& r : rels)
        if (slot[r.element] != UINT32_MAX) s.relations.push_back({slot[r.extremum], slot[r.element]});
    s.normalize();
    return s;
}

GridScaffold initial_scaffold(const GridInterval& q, GridAlgorithm algo) {
    if (algo == GridAlgorithm::Auto) algo = q.dim() == 2 || q.dim() == 3 ? GridAlgorithm::Sweep : GridAlgorithm::Joins;
    return algo == GridAlgorithm::Sweep ? scaffold_sweep(q) : scaffold_joins(q);
}

GridScaffold final_scaffold(const GridInterval& q, GridAlgorithm algo) {
    const GridPoint corner = q.upper_corner();
    GridScaffold s = initial_scaffold(q.reflected(corner), algo);
    s.direction = Direction::Final;
    for (auto& p : s.elements)
        for (std::size_t i = 0; i < p.dim(); ++i) p[i] = corner[i] - p[i];
    s.normalize();
    return s;
}

BettiSupport koszul_betti_support(const std::vector<GridPoint>& generators,
                                  const std::vector<GridPoint>* candidates) {
    BettiSupport out;
    out.beta0 = minimal_elements(generators);
    if (out.beta0.empty()) return out;
    const std::size_t d = out.beta0.front().dim();
    std::vector<GridPoint> joins;
    if (!candidates) {
        for (std::size_t i = 0; i < out.beta0.size(); ++i)
            for (std::size_t j = i + 1; j < out.beta0.size(); ++j) joins.push_back(join(out.beta0[i], out.beta0[j]));
        std::sort(joins.begin(), joins.end());
        joins.erase(std::unique(joins.begin(), joins.end()), joins.end());
        candidates = &joins;
    }
    const PackedPoints ideal(out.beta0, d);
    std::vector<std::size_t> parent(d);
    for (const auto& z : *candidates) {
        if (!ideal.any_below(z)) continue;
        // Vertices j with z - e_j in J; edges {j, k} with z - e_j - e_k in J.
        std::vector<bool> vertex(d, false);
        GridPoint w = z;
        std::size_t count = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (z[j] == 0) continue;
            --w[j];
            vertex[j] = ideal.any_below(w);
            count += vertex[j];
            ++w[j];
        }
        if (count < 2) continue;
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::size_t comps = count;
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                if (!vertex[j] || !vertex[k] || root(j) == root(k)) continue;
                --w[j];
                --w[k];
                if (ideal.any_below(w)) {
                    parent[root(j)] = root(k);
                    --comps;
                }
                ++w[j];
                ++w[k];
            }
        if (comps >= 2) out.beta1.push_back(z);
    }
    std::sort(out.beta1.begin(), out.beta1.end());
    return out;
}

std::vector<GridPoint> essential_points_grid(const GridInterval& q) {
    auto betti = koszul_betti_support(q.minima());
    std::vector<GridPoint> out;
    for (auto* set : {&betti.beta0, &betti.beta1})
        for (auto& p : *set)
            if (q.contains(p)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    return out;
}

PosetScaffold to_poset_scaffold(const GridScaffold& s, const Poset& materialized) {
    PosetScaffold out;
    out.direction = s.direction;
    for (const auto& p : s.elements) out.elements.push_back(materialized.index(p.to_string()));
    out.relations = s.relations;
    out.normalize();
    return out;
}

}  // namespace scaffold
