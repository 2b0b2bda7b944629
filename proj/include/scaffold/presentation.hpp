#pragma once

#include "scaffold/grid.hpp"
#include "scaffold/modules.hpp"
#include "scaffold/poset.hpp"

namespace scaffold {

/// Free presentation of the interval module k^Q, as a complex with g = 0: one generator
/// per minimum, one relation e_a - e_b per consecutive pair of scaffold relations at each
/// essential point, and (for grids) one relation killing a generator at each cogenerator.
QrComplex<ElemId> interval_presentation(const Poset& q, const Field& field);
QrComplex<GridPoint> interval_presentation(const GridInterval& q, const Field& field);

}  // namespace scaffold
