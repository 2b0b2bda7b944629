#pragma once

// Seeded instance generators shared by the tests, the acceptance suite and the benchmark.

#include <cstdint>
#include <random>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/modules.hpp"
#include "scaffold/poset.hpp"

namespace scaffold::random {

using Rng = std::mt19937_64;

/// Random DAG order on n elements: a hidden random linear order, each forward pair
/// related with probability `density`. Names are "e0".."e{n-1}" in shuffled positions.
Poset random_poset(Rng& rng, std::size_t n, double density);
Poset random_connected_poset(Rng& rng, std::size_t n, double density);

/// n distinct points of N^d on the hyperplane sum = s (hence an antichain).
std::vector<GridPoint> hyperplane_antichain(Rng& rng, std::size_t d, std::size_t n);

struct IntervalShape {
    std::size_t d = 3;
    std::size_t minima = 8;
    bool use_maxima = false;   // boundary given by maxima instead of cogenerators
    bool finite = true;        // cogenerator form only: add caps so Q is bounded
    Coord reach = 3;           // how far boundary points sit above the minima
    Coord spread = 0;          // coordinate range for small instances; 0 = hyperplane minima
};

/// A valid (connected) interval. Connectivity is forced by keeping the joins of a random
/// chain through the minima inside Q.
GridInterval random_interval(Rng& rng, const IntervalShape& shape);

/// Random finite interval with at most `max_points` points, d in [1, max_d].
GridInterval random_small_interval(Rng& rng, std::size_t max_d, std::size_t max_points);

/// Upset generated by {(i, k-i, 0, 0)} u {(0, 0, i, k-i)}, i = 0..k.
GridInterval n4_family(std::size_t k);

/// Random complex with generators at the given grades; every f column is drawn from the
/// kernel of the admissible part of g, so g * f = 0.
template <class Grade>
QrComplex<Grade> random_complex(Rng& rng, const std::vector<Grade>& universe, const GradeOrder<Grade>& leq,
                                const Field& field, std::size_t rx, std::size_t ry, std::size_t rz, double density = 0.6);

/// Conjugates every fiber by a random invertible matrix.
ModuleRep random_basis_change(Rng& rng, const ModuleRep& m);

}  // namespace scaffold::random
