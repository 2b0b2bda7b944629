#pragma once

#include <doctest.h>

#include <string>
#include <utility>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/poset.hpp"

namespace fixtures {

// Four minima; x and y each sit over two of them, z over everything plus an isolated w.
inline scaffold::Poset seven_element_poset() {
    return scaffold::Poset::from_names({"t", "u", "v", "w", "x", "y", "z"},
                                       {{"t", "x"}, {"u", "x"}, {"u", "y"}, {"v", "y"}, {"x", "z"}, {"y", "z"}, {"w", "z"}});
}

// Upset with five generators at height 0 and three at height 1.
inline scaffold::GridInterval two_level_staircase() {
    using scaffold::GridPoint;
    return scaffold::GridInterval::upset(3, {GridPoint{0, 6, 0}, GridPoint{1, 5, 0}, GridPoint{3, 4, 0}, GridPoint{4, 2, 0},
                                            GridPoint{5, 0, 0}, GridPoint{1, 3, 1}, GridPoint{2, 2, 1}, GridPoint{4, 1, 1}});
}

inline std::string data_path(const std::string& name) { return std::string(SCAFFOLD_TEST_DATA) + "/" + name; }

}  // namespace fixtures

namespace doctest {
template <>
struct StringMaker<std::vector<scaffold::GridPoint>> {
    static String convert(const std::vector<scaffold::GridPoint>& v) {
        std::string s = "{";
        for (const auto& p : v) s += " (" + p.to_string() + ")";
        return (s + " }").c_str();
    }
};
}  // namespace doctest
