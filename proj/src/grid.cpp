#include "scaffold/grid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace scaffold {

std::string GridPoint::to_string(char sep) const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(c_[i]);
    }
    return s;
}

GridPoint GridPoint::parse(const std::string& text, char sep) {
    std::vector<Coord> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad grid coordinate '" + tok + "' in '" + text + "'");
        unsigned long v = std::stoul(tok);
        if (v > std::numeric_limits<Coord>::max() / 2)
            throw std::invalid_argument("grid coordinate too large in '" + text + "'");
        c.push_back(static_cast<Coord>(v));
        pos = next + 1;
    }
    return GridPoint(std::move(c));
}

std::size_t GridPointHash::operator()(const GridPoint& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Coord c : p.coords()) h = (h ^ c) * 0x100000001b3ull;
    return h;
}

bool leq(const GridPoint& a, const GridPoint& b) noexcept {
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

GridPoint join(const GridPoint& a, const GridPoint& b) {
    GridPoint r = a;
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

GridPoint meet(const GridPoint& a, const GridPoint& b) {
    GridPoint r = a;
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

namespace {

std::vector<GridPoint> minimal_sorted(std::vector<GridPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return pts;
    const std::size_t d = pts.front().dim();
    for (const auto& p : pts)
        if (p.dim() != d) throw std::invalid_argument("mixed point dimensions");
    std::vector<GridPoint> out;
    if (d == 1) {
        out.push_back(pts.front());
    } else if (d == 2) {
        Coord best = 0;
        for (auto& p : pts)
            if (out.empty() || p[1] < best) {
                best = p[1];
                out.push_back(std::move(p));
            }
    } else if (d == 3) {
        // Staircase of (y, z) over accepted points: y increasing, z decreasing.
        std::map<Coord, Coord> stair;
        for (auto& p : pts) {
            auto it = stair.upper_bound(p[1]);
            if (it != stair.begin() && std::prev(it)->second <= p[2]) continue;
            it = stair.lower_bound(p[1]);
            while (it != stair.end() && it->second >= p[2]) it = stair.erase(it);
            stair[p[1]] = p[2];
            out.push_back(std::move(p));
        }
    } else {
        // Lexicographically earlier points are the only possible dominators.
        const std::size_t n = pts.size();
        std::vector<Coord> soa(d * n);
        std::size_t count = 0;
        for (auto& p : pts) {
            kernels::PointsSoA view{soa, count, n, d};
            if (count && kernels::any_leq(view, p.coords())) continue;
            for (std::size_t k = 0; k < d; ++k) soa[k * n + count] = p[k];
            ++count;
            out.push_back(std::move(p));
        }
    }
    return out;
}

GridPoint complement(const GridPoint& p) {
    GridPoint r = p;
    for (std::size_t i = 0; i < p.dim(); ++i) r[i] = ~p[i];
    return r;
}

}  // namespace

std::vector<GridPoint> minimal_elements(std::vector<GridPoint> pts) { return minimal_sorted(std::move(pts)); }

std::vector<GridPoint> maximal_elements(std::vector<GridPoint> pts) {
    for (auto& p : pts) p = complement(p);
    auto out = minimal_sorted(std::move(pts));
    for (auto& p : out) p = complement(p);
    std::sort(out.begin(), out.end());
    return out;
}

PackedPoints::PackedPoints(std::span<const GridPoint> pts, std::size_t d, bool complement)
    : dim_(d), count_(pts.size()), complement_(complement), data_(d * pts.size()) {
    for (std::size_t i = 0; i < count_; ++i)
        for (std::size_t k = 0; k < d; ++k) data_[k * count_ + i] = complement ? ~pts[i][k] : pts[i][k];
}

bool PackedPoints::any_below(const GridPoint& q) const {
    if (count_ == 0) return false;
    return kernels::any_leq(view(), q.coords());
}

bool PackedPoints::any_above(const GridPoint& q) const {
    if (count_ == 0) return false;
    return kernels::any_leq(view(), complement(q).coords());
}

void PackedPoints::mask_below(const GridPoint& q, std::span<std::uint8_t> mask) const {
    if (count_ == 0) return;
    kernels::leq_mask(view(), q.coords(), mask);
}

GridInterval GridInterval::with_cogenerators(std::size_t d, std::vector<GridPoint> minima,
                                             std::vector<GridPoint> cogenerators) {
    GridInterval q;
    q.d_ = d;
    q.kind_ = Boundary::Cogenerators;
    q.minima_ = minimal_elements(std::move(minima));
    q.boundary_ = minimal_elements(std::move(cogenerators));
    q.pack();
    return q;
}

GridInterval GridInterval::with_maxima(std::size_t d, std::vector<GridPoint> minima, std::vector<GridPoint> maxima) {
    GridInterval q;
    q.d_ = d;
    q.kind_ = Boundary::Maxima;
    q.minima_ = minimal_elements(std::move(minima));
    q.boundary_ = maximal_elements(std::move(maxima));
    q.pack();
    return q;
}

void GridInterval::pack() {
    if (d_ == 0) throw InvalidInterval("interval dimension must be at least 1");
    for (const auto* set : {&minima_, &boundary_})
        for (const auto& p : *set)
            if (p.dim() != d_)
                throw InvalidInterval("point " + p.to_string() + " does not have dimension " + std::to_string(d_));
    minima_packed_ = PackedPoints(minima_, d_);
    boundary_packed_ = PackedPoints(boundary_, d_, kind_ == Boundary::Maxima);
}

bool GridInterval::contains(const GridPoint& p) const {
    if (p.dim() != d_ || !minima_packed_.any_below(p)) return false;
    if (kind_ == Boundary::Cogenerators) return !boundary_packed_.any_below(p);
    return boundary_packed_.any_above(p);
}

bool GridInterval::is_finite() const {
    if (kind_ == Boundary::Maxima) return true;
    // Each axis ray out of each minimum must hit a cogenerator.
    for (const auto& m : minima_)
        for (std::size_t i = 0; i < d_; ++i) {
            bool stopped = false;
            for (const auto& c : boundary_) {
                bool ok = true;
                for (std::size_t j = 0; j < d_ && ok; ++j) ok = j == i || c[j] <= m[j];
                if (ok) {
                    stopped = true;
                    break;
                }
            }
            if (!stopped) return false;
        }
    return true;
}

std::vector<GridPoint> GridInterval::maxima() const {
    if (kind_ == Boundary::Maxima) return boundary_;
    if (!is_finite()) throw InvalidInterval("maxima requested for an infinite interval");
    // A maximum q has q + e_i >= some cogenerator c with c_i = q_i + 1, for every axis i.
    std::vector<std::vector<Coord>> choices(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        for (const auto& c : boundary_)
            if (c[i] > 0) choices[i].push_back(c[i] - 1);
        std::sort(choices[i].begin(), choices[i].end());
        choices[i].erase(std::unique(choices[i].begin(), choices[i].end()), choices[i].end());
        if (choices[i].empty()) return {};
    }
    std::vector<GridPoint> out;
    std::vector<std::size_t> idx(d_, 0);
    GridPoint cand{std::vector<Coord>(d_)};
    for (;;) {
        for (std::size_t i = 0; i < d_; ++i) cand[i] = choices[i][idx[i]];
        if (contains(cand)) {
            bool maximal = true;
            for (std::size_t i = 0; i < d_ && maximal; ++i) {
                ++cand[i];
                maximal = !contains(cand);
                --cand[i];
            }
            if (maximal) out.push_back(cand);
        }
        std::size_t k = 0;
        while (k < d_ && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == d_) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GridPoint> GridInterval::cogenerators() const {
    if (kind_ == Boundary::Cogenerators) return boundary_;
    // Every cogenerator is one unit step above a point of Q.
    std::vector<GridPoint> out;
    for (auto p : materialize(*this))
        for (std::size_t i = 0; i < d_; ++i) {
            ++p[i];
            if (!contains(p)) out.push_back(p);
            --p[i];
        }
    return minimal_elements(std::move(out));
}

GridPoint GridInterval::upper_corner() const {
    auto mx = maxima();
    if (mx.empty()) throw InvalidInterval("empty interval has no upper corner");
    GridPoint c = mx.front();
    for (const auto& p : mx) c = join(c, p);
    return c;
}

GridInterval GridInterval::reflected(const GridPoint& corner) const {
    auto flip = [&](const GridPoint& p) {
        if (!leq(p, corner)) throw InvalidInterval("reflection corner " + corner.to_string() + " is below " + p.to_string());
        GridPoint r = p;
        for (std::size_t i = 0; i < d_; ++i) r[i] = corner[i] - p[i];
        return r;
    };
    std::vector<GridPoint> new_min, new_max;
    for (const auto& w : maxima()) new_min.push_back(flip(w));
    for (const auto& m : minima_) new_max.push_back(flip(m));
    return with_maxima(d_, std::move(new_min), std::move(new_max));
}

void GridInterval::validate() const {
    if (minima_.empty()) throw InvalidInterval("interval has no minima");
    for (const auto& b : boundary_)
        if (!in_upset(b))
            throw InvalidInterval((kind_ == Boundary::Maxima ? "maximum " : "cogenerator ") + b.to_string() +
                                  " is not above any minimum");
    for (const auto& m : minima_)
        if (!contains(m)) throw InvalidInterval("minimum " + m.to_string() + " lies outside the interval");
    // Q is connected iff the minima are connected by the relation "m v m' lies in Q".
    const std::size_t n = minima_.size();
    if (d_ == 2) {
        // Lex-sorted minima form a staircase; adjacent joins lie below all others.
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!contains(join(minima_[i], minima_[i + 1])))
                throw InvalidInterval("interval is disconnected between minima " + minima_[i].to_string() + " and " +
                                      minima_[i + 1].to_string());
        return;
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t comps = n;
    for (std::size_t i = 0; i < n && comps > 1; ++i)
        for (std::size_t j = i + 1; j < n && comps > 1; ++j) {
            std::size_t a = root(i), b = root(j);
            if (a != b && contains(join(minima_[i], minima_[j]))) {
                parent[a] = b;
                --comps;
            }
        }
    if (comps > 1) throw InvalidInterval("interval is disconnected (" + std::to_string(comps) + " components)");
}

std::vector<GridPoint> materialize(const GridInterval& q, const std::optional<GridPoint>& bound,
                                   MaterializeLimits limits) {
    const std::size_t d = q.dim();
    if (q.minima().empty()) return {};
    GridPoint lo = q.minima().front();
    for (const auto& m : q.minima()) lo = meet(lo, m);
    GridPoint hi;
    if (bound) {
        if (bound->dim() != d) throw std::invalid_argument("truncation bound has the wrong dimension");
        hi = *bound;
        if (q.is_finite()) hi = meet(hi, q.upper_corner());
    } else {
        if (!q.is_finite()) throw std::invalid_argument("infinite interval needs a truncation bound");
        hi = q.upper_corner();
    }
    if (!leq(lo, hi)) return {};
    double volume = 1;
    for (std::size_t i = 0; i < d; ++i) volume *= double(hi[i] - lo[i] + 1);
    if (volume > 64.0 * double(limits.max_points))
        throw std::length_error("materialization box of " + std::to_string(volume) + " points exceeds the cap");

    std::vector<GridPoint> out;
    GridPoint p = lo;
    for (;;) {
        if (q.contains(p)) {
            out.push_back(p);
            if (out.size() > limits.max_points)
                throw std::length_error("interval has more than " + std::to_string(limits.max_points) + " points");
        }
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (p[k] < hi[k]) {
                ++p[k];
                break;
            }
            p[k] = lo[k];
            if (k == 0) return out;
        }
    }
}

Poset grid_interval_to_poset(const GridInterval& q, const std::optional<GridPoint>& bound, MaterializeLimits limits) {
    const auto pts = materialize(q, bound, limits);
    std::unordered_map<GridPoint, ElemId, GridPointHash> idx;
    std::vector<std::string> names;
    names.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        idx.emplace(pts[i], static_cast<ElemId>(i));
        names.push_back(pts[i].to_string());
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        GridPoint s = pts[i];
        for (std::size_t k = 0; k < q.dim(); ++k) {
            ++s[k];
            if (auto it = idx.find(s); it != idx.end()) edges.push_back({static_cast<ElemId>(i), it->second});
            --s[k];
        }
    }
    return Poset::from_edges(pts.size(), edges, std::move(names));
}

}  // namespace scaffold
