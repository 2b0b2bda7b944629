#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scaffold/kernels.hpp"
#include "scaffold/poset.hpp"

namespace scaffold {

using Coord = std::uint32_t;

/// A point of N^d. Ordered lexicographically by operator<=>; the product order is leq().
class GridPoint {
public:
    GridPoint() = default;
    explicit GridPoint(std::vector<Coord> coords) : c_(std::move(coords)) {}
    GridPoint(std::initializer_list<Coord> coords) : c_(coords) {}

    std::size_t dim() const noexcept { return c_.size(); }
    Coord operator[](std::size_t i) const { return c_[i]; }
    Coord& operator[](std::size_t i) { return c_[i]; }
    std::span<const Coord> coords() const noexcept { return c_; }

    /// Coordinates joined by `sep`, e.g. "1,6,0".
    std::string to_string(char sep = ',') const;
    static GridPoint parse(const std::string& text, char sep = ',');

    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;

private:
    std::vector<Coord> c_;
};

struct GridPointHash {
    std::size_t operator()(const GridPoint& p) const noexcept;
};

bool leq(const GridPoint& a, const GridPoint& b) noexcept;
inline bool less(const GridPoint& a, const GridPoint& b) noexcept { return a != b && leq(a, b); }
GridPoint join(const GridPoint& a, const GridPoint& b);
GridPoint meet(const GridPoint& a, const GridPoint& b);

/// Minimal elements under the product order, deduplicated, sorted lexicographically.
std::vector<GridPoint> minimal_elements(std::vector<GridPoint> pts);
/// Maximal elements under the product order, deduplicated, sorted lexicographically.
std::vector<GridPoint> maximal_elements(std::vector<GridPoint> pts);

/// Point set packed for the SIMD domination kernels. With `complement`, each coordinate
/// is stored as ~c so that "some point >= q" becomes "some packed point <= ~q".
class PackedPoints {
public:
    PackedPoints() = default;
    PackedPoints(std::span<const GridPoint> pts, std::size_t d, bool complement = false);

    std::size_t size() const noexcept { return count_; }
    kernels::PointsSoA view() const noexcept { return {data_, count_, count_, dim_}; }
    bool any_below(const GridPoint& q) const;  // some point <= q
    bool any_above(const GridPoint& q) const;  // some point >= q (complemented sets only)
    void mask_below(const GridPoint& q, std::span<std::uint8_t> mask) const;

private:
    std::size_t dim_ = 0;
    std::size_t count_ = 0;
    bool complement_ = false;
    std::vector<Coord> data_;
};

class InvalidInterval : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An interval of N^d, given by its minima together with either the cogenerators
/// (minima of Up(Q) \ Q) or the maxima. Generators are pruned to antichains on construction.
class GridInterval {
public:
    enum class Boundary { Cogenerators, Maxima };

    static GridInterval with_cogenerators(std::size_t d, std::vector<GridPoint> minima,
                                          std::vector<GridPoint> cogenerators);
    static GridInterval with_maxima(std::size_t d, std::vector<GridPoint> minima, std::vector<GridPoint> maxima);
    /// Up(generators) with no cogenerators.
    static GridInterval upset(std::size_t d, std::vector<GridPoint> generators) {
        return with_cogenerators(d, std::move(generators), {});
    }

    std::size_t dim() const noexcept { return d_; }
    Boundary boundary_kind() const noexcept { return kind_; }
    const std::vector<GridPoint>& minima() const noexcept { return minima_; }
    /// Cogenerators or maxima, depending on boundary_kind().
    const std::vector<GridPoint>& boundary() const noexcept { return boundary_; }

    bool contains(const GridPoint& p) const;
    bool in_upset(const GridPoint& p) const { return minima_packed_.any_below(p); }
    bool is_finite() const;
    /// Maxima of a finite interval (derived from the cogenerators when needed).
    std::vector<GridPoint> maxima() const;
    /// Minima of Up(Q) \ Q (by materialization when Q is given by its maxima).
    std::vector<GridPoint> cogenerators() const;
    /// Componentwise maximum over all points; requires a finite interval.
    GridPoint upper_corner() const;
    /// The image of Q under q -> corner - q, in maxima form. Requires Q finite and
    /// corner >= every point of Q. Reverses the order, so final scaffolds of Q
    /// correspond to initial scaffolds of the reflection.
    GridInterval reflected(const GridPoint& corner) const;

    /// Throws InvalidInterval unless the generators are consistent and Q is nonempty
    /// and connected. Convexity holds by construction for both boundary forms.
    void validate() const;

private:
    GridInterval() = default;
    void pack();

    std::size_t d_ = 0;
    Boundary kind_ = Boundary::Cogenerators;
    std::vector<GridPoint> minima_;
    std::vector<GridPoint> boundary_;
    PackedPoints minima_packed_;
    PackedPoints boundary_packed_;
};

struct MaterializeLimits {
    std::size_t max_points = 200000;
};

/// All points of Q, lexicographically sorted. Infinite Q needs `bound`, which truncates
/// to points <= bound. Throws std::length_error past the cap.
std::vector<GridPoint> materialize(const GridInterval& q, const std::optional<GridPoint>& bound = std::nullopt,
                                   MaterializeLimits limits = {});

/// Explicit poset on the points of Q (names "x,y,..."), with unit-step covering edges.
Poset grid_interval_to_poset(const GridInterval& q, const std::optional<GridPoint>& bound = std::nullopt,
                             MaterializeLimits limits = {});

}  // namespace scaffold
