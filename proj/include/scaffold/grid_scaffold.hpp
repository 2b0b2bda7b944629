#pragma once

#include <cstdint>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/scaffold.hpp"

namespace scaffold {

/// Points found at one slice height by the planar sweep.
struct SweepLevel {
    Coord z = 0;
    std::vector<GridPoint> w_points;  // joins of consecutive slice minima
    std::vector<GridPoint> x_points;  // frontier points that die at this height
};

struct SweepTrace {
    std::vector<SweepLevel> levels;
};

/// Initial scaffold of an interval in N^2 or N^3 by the slice sweep, in O(n log n) for n
/// minima. N^2 inputs are embedded at height 0 and reported in N^2. If `trace` is given,
/// it receives the W and X points of Up(Q) at every height where minima appear.
GridScaffold scaffold_sweep(const GridInterval& q, SweepTrace* trace = nullptr);

/// Initial scaffold of an interval in N^d for any d, from the minima and their pairwise joins.
GridScaffold scaffold_joins(const GridInterval& q);

enum class GridAlgorithm { Auto, Sweep, Joins };

/// Auto picks the sweep for d <= 3 and the joins algorithm otherwise.
GridScaffold initial_scaffold(const GridInterval& q, GridAlgorithm algo = GridAlgorithm::Auto);
/// Final scaffold of a finite interval, via the reflection through its upper corner.
GridScaffold final_scaffold(const GridInterval& q, GridAlgorithm algo = GridAlgorithm::Auto);

struct BettiSupport {
    std::vector<GridPoint> beta0;
    std::vector<GridPoint> beta1;
};

/// Supports of the 0th and 1st multigraded Betti numbers of the monomial ideal generated
/// by `generators`, with beta1 tested only at `candidates` (all pairwise joins by default).
/// beta1 at z is the number of components of the upper Koszul complex minus one.
BettiSupport koszul_betti_support(const std::vector<GridPoint>& generators,
                                  const std::vector<GridPoint>* candidates = nullptr);

/// Minima and essential points of Q, from the Betti supports of Up(Q).
std::vector<GridPoint> essential_points_grid(const GridInterval& q);

/// Re-expresses a grid scaffold over the materialized poset of Q (elements looked up by name).
PosetScaffold to_poset_scaffold(const GridScaffold& s, const Poset& materialized);

}  // namespace scaffold
