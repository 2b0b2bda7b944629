#include "scaffold/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace scaffold::random {

namespace {

Scalar random_nonzero(Rng& rng, const Field& f) {
    return static_cast<Scalar>(std::uniform_int_distribution<std::uint32_t>(1, f.modulus() - 1)(rng));
}

Scalar random_scalar(Rng& rng, const Field& f) {
    return static_cast<Scalar>(std::uniform_int_distribution<std::uint32_t>(0, f.modulus() - 1)(rng));
}

Matrix random_invertible(Rng& rng, std::size_t n, const Field& f) {
    for (;;) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = random_scalar(rng, f);
        if (rank(a, f) == n) return a;
    }
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Poset random_poset(Rng& rng, std::size_t n, double density) {
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(label[i]);
    std::vector<Edge> edges;
    for (ElemId i = 0; i < n; ++i)
        for (ElemId j = i + 1; j < n; ++j)
            if (coin(rng, density)) edges.push_back({i, j});
    return Poset::from_edges(n, edges, std::move(names));
}

Poset random_connected_poset(Rng& rng, std::size_t n, double density) {
    for (;;) {
        Poset q = random_poset(rng, n, density);
        if (q.is_connected()) return q;
    }
}

std::vector<GridPoint> hyperplane_antichain(Rng& rng, std::size_t d, std::size_t n) {
    if (d == 1) return {GridPoint{std::vector<Coord>{0}}};
    // Smallest s whose hyperplane holds at least 4n lattice points (capped estimate).
    Coord s = 0;
    for (;; ++s) {
        double count = 1;
        for (std::size_t k = 1; k < d; ++k) count = count * double(s + k) / double(k);
        if (count >= 4.0 * double(n)) break;
    }
    std::set<GridPoint> pts;
    std::uniform_int_distribution<Coord> coord(0, s);
    while (pts.size() < n) {
        // Uniform composition of s into d parts via sorted cut points.
        std::vector<Coord> cuts(d - 1);
        for (auto& c : cuts) c = coord(rng);
        std::sort(cuts.begin(), cuts.end());
        std::vector<Coord> c(d);
        Coord prev = 0;
        for (std::size_t k = 0; k + 1 < d; ++k) {
            c[k] = cuts[k] - prev;
            prev = cuts[k];
        }
        c[d - 1] = s - prev;
        pts.insert(GridPoint(std::move(c)));
    }
    return {pts.begin(), pts.end()};
}

GridInterval random_interval(Rng& rng, const IntervalShape& shape) {
    const std::size_t d = shape.d;
    std::vector<GridPoint> mins;
    if (shape.spread == 0) {
        mins = hyperplane_antichain(rng, d, shape.minima);
    } else {
        std::uniform_int_distribution<Coord> c(0, shape.spread);
        for (std::size_t i = 0; i < shape.minima; ++i) {
            std::vector<Coord> v(d);
            for (auto& x : v) x = c(rng);
            mins.emplace_back(std::move(v));
        }
        mins = minimal_elements(std::move(mins));
    }
    std::uniform_int_distribution<Coord> off(0, shape.reach);
    auto bump = [&](GridPoint p, bool strict) {
        for (std::size_t k = 0; k < d; ++k) p[k] += off(rng);
        if (strict && std::find(mins.begin(), mins.end(), p) != mins.end()) ++p[std::uniform_int_distribution<std::size_t>(0, d - 1)(rng)];
        return p;
    };

    // Keep the joins of a random chain through the minima inside Q.
    std::vector<std::size_t> order(mins.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<GridPoint> keep;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) keep.push_back(join(mins[order[i]], mins[order[i + 1]]));
    if (keep.empty()) keep.push_back(mins.front());

    if (shape.use_maxima) {
        std::vector<GridPoint> maxs;
        for (const auto& k : keep) maxs.push_back(bump(k, false));
        for (const auto& m : mins)
            if (coin(rng, 0.5)) maxs.push_back(bump(m, false));
        return GridInterval::with_maxima(d, std::move(mins), std::move(maxs));
    }
    std::vector<GridPoint> cogens;
    for (const auto& m : mins) {
        GridPoint c = m;
        for (std::size_t k = 0; k < d; ++k) c[k] += off(rng);
        c[std::uniform_int_distribution<std::size_t>(0, d - 1)(rng)] += 1;
        const bool hurts = std::any_of(keep.begin(), keep.end(), [&](const GridPoint& k) { return leq(c, k); });
        if (!hurts) cogens.push_back(std::move(c));
    }
    if (shape.finite) {
        GridPoint top = keep.front();
        for (const auto& k : keep) top = join(top, k);
        for (const auto& m : mins)
            for (std::size_t k = 0; k < d; ++k) {
                GridPoint c = m;
                c[k] = top[k] + 1 + off(rng);
                cogens.push_back(std::move(c));
            }
    }
    return GridInterval::with_cogenerators(d, std::move(mins), std::move(cogens));
}

GridInterval random_small_interval(Rng& rng, std::size_t max_d, std::size_t max_points) {
    for (;;) {
        IntervalShape shape;
        shape.d = std::uniform_int_distribution<std::size_t>(1, max_d)(rng);
        shape.minima = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        shape.use_maxima = coin(rng, 0.5);
        shape.finite = true;
        shape.reach = std::uniform_int_distribution<Coord>(0, 2)(rng);
        shape.spread = shape.d <= 2 ? 4 : 2;
        GridInterval q = random_interval(rng, shape);
        try {
            if (materialize(q, std::nullopt, {max_points}).size() <= max_points) return q;
        } catch (const std::length_error&) {
        }
    }
}

GridInterval n4_family(std::size_t k) {
    std::vector<GridPoint> gens;
    for (Coord i = 0; i <= k; ++i) {
        gens.push_back(GridPoint{i, static_cast<Coord>(k - i), 0, 0});
        gens.push_back(GridPoint{0, 0, i, static_cast<Coord>(k - i)});
    }
    return GridInterval::upset(4, std::move(gens));
}

template <class Grade>
QrComplex<Grade> random_complex(Rng& rng, const std::vector<Grade>& universe, const GradeOrder<Grade>& leq,
                                const Field& field, std::size_t rx, std::size_t ry, std::size_t rz, double density) {
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    auto grades = [&](std::size_t n) {
        std::vector<Grade> g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(universe[pick(rng)]);
        return g;
    };
    QrComplex<Grade> c{field, {}, {}};
    c.f.col_grades = grades(rx);
    c.f.row_grades = grades(ry);
    c.g.col_grades = c.f.row_grades;
    c.g.row_grades = grades(rz);
    c.g.entries = Matrix(rz, ry);
    for (std::size_t i = 0; i < rz; ++i)
        for (std::size_t j = 0; j < ry; ++j)
            if (leq(c.g.row_grades[i], c.g.col_grades[j]) && coin(rng, density)) c.g.entries(i, j) = random_nonzero(rng, field);
    c.f.entries = Matrix(ry, rx);
    for (std::size_t j = 0; j < rx; ++j) {
        std::vector<std::size_t> rows;
        for (std::size_t k = 0; k < ry; ++k)
            if (leq(c.f.row_grades[k], c.f.col_grades[j])) rows.push_back(k);
        std::vector<std::size_t> all_z(rz);
        std::iota(all_z.begin(), all_z.end(), 0);
        const Matrix ker = kernel_basis(c.g.entries.submatrix(all_z, rows), field);
        for (std::size_t b = 0; b < ker.cols(); ++b) {
            if (!coin(rng, density)) continue;
            const Scalar coef = random_nonzero(rng, field);
            for (std::size_t i = 0; i < rows.size(); ++i)
                c.f.entries(rows[i], j) = field.add(c.f.entries(rows[i], j), field.mul(coef, ker(i, b)));
        }
    }
    return c;
}

template QrComplex<ElemId> random_complex(Rng&, const std::vector<ElemId>&, const GradeOrder<ElemId>&, const Field&,
                                          std::size_t, std::size_t, std::size_t, double);
template QrComplex<GridPoint> random_complex(Rng&, const std::vector<GridPoint>&, const GradeOrder<GridPoint>&,
                                             const Field&, std::size_t, std::size_t, std::size_t, double);

ModuleRep random_basis_change(Rng& rng, const ModuleRep& m) {
    std::vector<Matrix> a, a_inv;
    for (std::size_t d : m.dims) {
        a.push_back(random_invertible(rng, d, m.field));
        a_inv.push_back(inverse(a.back(), m.field));
    }
    ModuleRep out = m;
    for (std::size_t k = 0; k < m.relations.size(); ++k) {
        const auto [lo, up] = m.relations[k];
        out.maps[k] = multiply(multiply(a[up], m.maps[k], m.field), a_inv[lo], m.field);
    }
    return out;
}

}  // namespace scaffold::random
