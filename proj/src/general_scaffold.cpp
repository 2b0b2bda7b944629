#include "scaffold/general_scaffold.hpp"

#include <numeric>

#include "scaffold/parallel.hpp"

namespace scaffold {

namespace {

// Components of the open downset of q, found by DFS over Hasse edges that stay below q.
// Returns the smallest element of each component, which is a minimum of the poset.
std::vector<ElemId> downset_component_roots(const Poset& poset, ElemId q, std::vector<std::uint32_t>& mark,
                                            std::vector<ElemId>& stack) {
    std::vector<ElemId> roots;
    const std::uint32_t stamp = q + 1;
    for (ElemId s = 0; s < q; ++s) {
        if (mark[s] == stamp || !poset.leq(s, q)) continue;
        roots.push_back(s);
        mark[s] = stamp;
        stack.assign(1, s);
        while (!stack.empty()) {
            ElemId v = stack.back();
            stack.pop_back();
            for (const auto* adj : {&poset.covers(v), &poset.covered_by(v)})
                for (ElemId w : *adj)
                    if (w != q && mark[w] != stamp && poset.leq(w, q)) {
                        mark[w] = stamp;
                        stack.push_back(w);
                    }
        }
    }
    return roots;
}

}  // namespace

PosetScaffold initial_scaffold(const Poset& q, unsigned threads) {
    const std::size_t n = q.size();
    std::vector<std::vector<ElemId>> roots(n);
    const unsigned workers = std::max(1u, threads);
    // One scratch buffer per block; marks are stamped with q + 1 so they never need clearing.
    std::vector<std::vector<std::uint32_t>> marks(workers, std::vector<std::uint32_t>(n, 0));
    std::vector<std::vector<ElemId>> stacks(workers);
    parallel_for(workers, workers, [&](std::size_t w) {
        for (std::size_t e = w * n / workers; e < (w + 1) * n / workers; ++e)
            roots[e] = downset_component_roots(q, static_cast<ElemId>(e), marks[w], stacks[w]);
    });

    PosetScaffold s;
    s.direction = Direction::Initial;
    std::vector<std::uint32_t> slot(n, UINT32_MAX);
    for (ElemId e = 0; e < n; ++e)
        if (roots[e].size() != 1) {
            slot[e] = static_cast<std::uint32_t>(s.elements.size());
            s.elements.push_back(e);
        }
    for (ElemId e = 0; e < n; ++e)
        if (roots[e].size() > 1)
            for (ElemId m : roots[e]) s.relations.push_back({slot[m], slot[e]});
    s.normalize();
    return s;
}

PosetScaffold final_scaffold(const Poset& q, unsigned threads) {
    const Poset opp = q.opposite();
    PosetScaffold s = initial_scaffold(opp, threads);
    s.direction = Direction::Final;
    for (auto& e : s.elements) e = q.index(opp.name(e));
    s.normalize();
    return s;
}

std::vector<ElemId> brute_force_essential(const Poset& q) {
    std::vector<ElemId> out;
    for (ElemId e = 0; e < q.size(); ++e)
        if (components(q, q.open_downset(e)).size() != 1) out.push_back(e);
    return out;
}

namespace {

bool fail(std::string* why, std::string msg) {
    if (why) *why = std::move(msg);
    return false;
}

// Verification for the initial direction.
bool verify_initial(const PosetScaffold& p, const Poset& q, std::string* why) {
    std::vector<ElemId> elems = p.elements;
    std::sort(elems.begin(), elems.end());
    if (elems != brute_force_essential(q)) return fail(why, "element set differs from the essential set");

    const auto mins = q.minima();
    std::vector<bool> is_min(q.size(), false);
    for (ElemId m : mins) is_min[m] = true;
    std::vector<std::vector<ElemId>> below(p.elements.size());
    for (const auto& r : p.relations) {
        if (r.extremum >= p.elements.size() || r.element >= p.elements.size())
            return fail(why, "relation index out of range");
        ElemId m = p.elements[r.extremum], e = p.elements[r.element];
        if (!is_min[m]) return fail(why, "relation anchored at non-minimum " + q.name(m));
        if (!q.less(m, e)) return fail(why, "relation " + q.name(m) + " < " + q.name(e) + " does not hold");
        below[r.element].push_back(m);
    }
    for (std::size_t i = 0; i < p.elements.size(); ++i) {
        const ElemId e = p.elements[i];
        auto comps = components(q, q.open_downset(e));
        std::vector<int> hits(comps.size(), 0);
        for (ElemId m : below[i])
            for (std::size_t c = 0; c < comps.size(); ++c)
                if (std::binary_search(comps[c].begin(), comps[c].end(), m)) ++hits[c];
        if (below[i].size() != comps.size() || std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
            return fail(why, "element " + q.name(e) + " needs exactly one relation per downset component");
    }

    // Initiality: closed downset of each q meets the scaffold in a connected subposet.
    const std::size_t k = p.elements.size();
    std::vector<std::size_t> parent(k);
    for (ElemId x = 0; x < q.size(); ++x) {
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        std::size_t inside = 0, comps = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (q.leq(p.elements[i], x)) ++inside;
        comps = inside;
        for (const auto& r : p.relations)
            if (q.leq(p.elements[r.element], x)) {
                std::size_t a = root(r.extremum), b = root(r.element);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            }
        if (comps != 1) return fail(why, "closed downset of " + q.name(x) + " meets the scaffold in " +
                                             std::to_string(comps) + " components");
    }
    return true;
}

}  // namespace

bool verify_scaffold(const PosetScaffold& p, const Poset& q, std::string* why) {
    if (p.direction == Direction::Initial) return verify_initial(p, q, why);
    const Poset opp = q.opposite();
    PosetScaffold mapped = p;
    mapped.direction = Direction::Initial;
    for (auto& e : mapped.elements) {
        if (e >= q.size()) return fail(why, "element index out of range");
        e = opp.index(q.name(e));
    }
    mapped.normalize();
    return verify_initial(mapped, opp, why);
}

Poset scaffold_as_poset(const PosetScaffold& p, const Poset& q) {
    std::vector<std::string> names;
    for (ElemId e : p.elements) names.push_back(q.name(e));
    std::vector<Edge> edges;
    for (const auto& r : p.relations) {
        if (p.direction == Direction::Initial)
            edges.push_back({r.extremum, r.element});
        else
            edges.push_back({r.element, r.extremum});
    }
    const std::size_t n = names.size();
    return Poset::from_edges(n, edges, std::move(names));
}

}  // namespace scaffold
