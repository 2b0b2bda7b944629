#include "scaffold/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace scaffold {

RelationMatrix RelationMatrix::transpose() const {
    RelationMatrix t(n_);
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (test(a, b)) t.set(b, a);
    return t;
}

namespace {

// Kahn's algorithm; `priority` breaks ties (smaller first). Throws on a cycle.
std::vector<ElemId> topological_order(std::size_t n, const std::vector<Edge>& edges,
                                      const std::vector<std::string>* priority) {
    std::vector<std::vector<ElemId>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& e : edges) {
        if (e.lower >= n || e.upper >= n) throw std::out_of_range("edge endpoint out of range");
        if (e.lower == e.upper) throw NotAPoset("self-loop on element " + std::to_string(e.lower));
        out[e.lower].push_back(e.upper);
        ++indeg[e.upper];
    }
    auto cmp = [&](ElemId a, ElemId b) {
        if (priority) return (*priority)[a] != (*priority)[b] ? (*priority)[a] > (*priority)[b] : a > b;
        return a > b;
    };
    std::priority_queue<ElemId, std::vector<ElemId>, decltype(cmp)> ready(cmp);
    for (ElemId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<ElemId> order;
    order.reserve(n);
    while (!ready.empty()) {
        ElemId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (ElemId w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != n) throw NotAPoset("edge list contains a directed cycle");
    return order;
}

}  // namespace

RelationMatrix transitive_closure(std::size_t n, const std::vector<Edge>& edges) {
    const auto order = topological_order(n, edges, nullptr);
    std::vector<std::vector<ElemId>> out(n);
    for (const auto& e : edges) out[e.lower].push_back(e.upper);
    RelationMatrix m(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        m.set(*it, *it);
        for (ElemId w : out[*it]) m.or_row(*it, w);
    }
    return m;
}

Poset Poset::from_names(const std::vector<std::string>& names,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, ElemId> idx;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!idx.emplace(names[i], static_cast<ElemId>(i)).second)
            throw std::invalid_argument("duplicate element '" + names[i] + "'");
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw std::invalid_argument("unknown element '" + a + "'");
        if (ib == idx.end()) throw std::invalid_argument("unknown element '" + b + "'");
        e.push_back({ia->second, ib->second});
    }
    return from_edges(names.size(), e, names);
}

Poset Poset::from_edges(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> names) {
    if (names.empty()) {
        names.resize(n);
        for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    }
    if (names.size() != n) throw std::invalid_argument("name count does not match element count");

    // Renumber into canonical order.
    const auto order = topological_order(n, edges, &names);
    std::vector<ElemId> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<ElemId>(i);

    Poset q;
    q.names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) q.names_[pos[i]] = std::move(names[i]);
    for (std::size_t i = 0; i < n; ++i)
        if (!q.by_name_.emplace(q.names_[i], static_cast<ElemId>(i)).second)
            throw std::invalid_argument("duplicate element '" + q.names_[i] + "'");

    std::vector<Edge> renum;
    renum.reserve(edges.size());
    for (const auto& e : edges) renum.push_back({pos[e.lower], pos[e.upper]});
    std::sort(renum.begin(), renum.end());
    renum.erase(std::unique(renum.begin(), renum.end()), renum.end());

    q.leq_ = transitive_closure(n, renum);

    // Transitive reduction: (a,b) covers iff nothing lies strictly between.
    q.up_adj_.assign(n, {});
    q.down_adj_.assign(n, {});
    for (const auto& e : renum) {
        bool between = false;
        for (ElemId c = e.lower + 1; c < e.upper && !between; ++c)
            between = q.leq_.test(e.lower, c) && q.leq_.test(c, e.upper);
        if (!between) q.hasse_.push_back(e);
    }
    for (const auto& e : q.hasse_) {
        q.up_adj_[e.lower].push_back(e.upper);
        q.down_adj_[e.upper].push_back(e.lower);
    }
    return q;
}

std::optional<ElemId> Poset::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

ElemId Poset::index(const std::string& name) const {
    auto e = find(name);
    if (!e) throw std::invalid_argument("unknown element '" + name + "'");
    return *e;
}

std::vector<ElemId> Poset::open_downset(ElemId q) const {
    std::vector<ElemId> out;
    for (ElemId p = 0; p < q; ++p)
        if (leq(p, q)) out.push_back(p);
    return out;
}

std::vector<ElemId> Poset::open_upset(ElemId q) const {
    std::vector<ElemId> out;
    for (ElemId p = q + 1; p < size(); ++p)
        if (leq(q, p)) out.push_back(p);
    return out;
}

std::vector<ElemId> Poset::minima() const {
    std::vector<ElemId> out;
    for (ElemId p = 0; p < size(); ++p)
        if (down_adj_[p].empty()) out.push_back(p);
    return out;
}

std::vector<ElemId> Poset::maxima() const {
    std::vector<ElemId> out;
    for (ElemId p = 0; p < size(); ++p)
        if (up_adj_[p].empty()) out.push_back(p);
    return out;
}

bool Poset::is_connected() const {
    if (size() == 0) return false;
    std::vector<ElemId> all(size());
    std::iota(all.begin(), all.end(), 0);
    return components(*this, all).size() == 1;
}

Poset Poset::opposite() const {
    std::vector<Edge> rev;
    rev.reserve(hasse_.size());
    for (const auto& e : hasse_) rev.push_back({e.upper, e.lower});
    return from_edges(size(), rev, names_);
}

std::vector<std::vector<ElemId>> components(const Poset& q, const std::vector<ElemId>& subset) {
    const std::size_t k = subset.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (q.comparable(subset[i], subset[j])) parent[root(i)] = root(j);
    std::vector<std::vector<ElemId>> comps;
    std::vector<std::size_t> slot(k, k);
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return subset[a] < subset[b]; });
    for (std::size_t i : order) {
        std::size_t r = root(i);
        if (slot[r] == k) {
            slot[r] = comps.size();
            comps.emplace_back();
        }
        comps[slot[r]].push_back(subset[i]);
    }
    return comps;
}

}  // namespace scaffold
