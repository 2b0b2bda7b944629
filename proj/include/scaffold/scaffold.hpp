#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/poset.hpp"

namespace scaffold {

enum class Direction { Initial, Final };

/// Non-identity relation of a scaffold, as indices into Scaffold::elements.
/// For an initial scaffold `extremum` is a minimum below `element`; for a final
/// scaffold it is a maximum above it.
struct ScaffoldRelation {
    std::uint32_t extremum;
    std::uint32_t element;
    bool operator==(const ScaffoldRelation&) const = default;
    auto operator<=>(const ScaffoldRelation&) const = default;
};

/// Elements are kept sorted (canonical index order for posets, lexicographic for grids);
/// relations are sorted by (extremum, element).
template <class Elem>
struct Scaffold {
    Direction direction = Direction::Initial;
    std::vector<Elem> elements;
    std::vector<ScaffoldRelation> relations;

    std::optional<std::uint32_t> find(const Elem& e) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), e);
        if (it == elements.end() || *it != e) return std::nullopt;
        return static_cast<std::uint32_t>(it - elements.begin());
    }
    /// Sorts elements and relations, remapping relation indices.
    void normalize();
    std::size_t relation_count(std::uint32_t element) const {
        return static_cast<std::size_t>(std::count_if(relations.begin(), relations.end(),
                                                      [&](const auto& r) { return r.element == element; }));
    }
};

template <class Elem>
void Scaffold<Elem>::normalize() {
    std::vector<std::uint32_t> order(elements.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return elements[a] < elements[b]; });
    std::vector<std::uint32_t> pos(order.size());
    std::vector<Elem> sorted;
    sorted.reserve(order.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
        sorted.push_back(std::move(elements[order[i]]));
    }
    elements = std::move(sorted);
    for (auto& r : relations) r = {pos[r.extremum], pos[r.element]};
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
}

using PosetScaffold = Scaffold<ElemId>;
using GridScaffold = Scaffold<GridPoint>;

}  // namespace scaffold
