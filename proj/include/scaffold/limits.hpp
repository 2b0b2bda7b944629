#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scaffold/grid.hpp"
#include "scaffold/matrix.hpp"
#include "scaffold/modules.hpp"
#include "scaffold/poset.hpp"
#include "scaffold/scaffold.hpp"

namespace scaffold {

/// A scaffold expressed in the index space of a ModuleRep. For an initial view each
/// relation is (minimum, element); for a final view it is (element, maximum), matching
/// the direction of the module's structure maps.
struct ScaffoldView {
    Direction direction = Direction::Initial;
    std::vector<ElemId> extrema;  // variable order of the limit/colimit system
    std::vector<Edge> relations;
};

/// Looks up scaffold elements in `g` by name. Relations are (extremum, element) name pairs.
ScaffoldView make_view(const ModuleRep& g, Direction dir, const std::vector<std::string>& extrema,
                       const std::vector<std::pair<std::string, std::string>>& relations);
ScaffoldView make_view(const ModuleRep& g, const PosetScaffold& s, const Poset& q);
ScaffoldView make_view(const ModuleRep& g, const GridScaffold& s);

/// Basis of lim G as tuples over the extrema: column j of `basis` stacks the components
/// v_m for each extremum m, block i starting at offsets[i].
struct PresectionBasis {
    std::vector<ElemId> extrema;
    std::vector<std::size_t> offsets;  // extrema.size() + 1 entries
    Matrix basis;

    std::size_t dim() const noexcept { return basis.cols(); }
    /// Cone map to the i-th extremum: the coordinate projection of the basis.
    Matrix block(std::size_t i) const;
    std::optional<std::size_t> slot(ElemId e) const;
};

/// Kernel of the presection system: for every element with incoming relations
/// l_1 < q, ..., l_k < q (sorted by variable order), the constraints
/// G_{l_i q}(v_{l_i}) = G_{l_{i+1} q}(v_{l_{i+1}}).
PresectionBasis limit_presections(const ModuleRep& g, const ScaffoldView& view);

/// Sections over all elements: v_b = G_ab(v_a) for every stored relation. Reference route.
PresectionBasis limit_full_equalizer(const ModuleRep& g);

/// The value at q of the section extending presection column `col`, G_lq(v_l) for some
/// extremum l below q. With `check_all`, every such l is tried and must agree.
std::vector<Scalar> extend_presection(const PresectionBasis& lim, std::size_t col, ElemId q, const ModuleRep& g,
                                      bool check_all = false);

/// colim G as a quotient of the direct sum over the extrema. `projection` maps the direct
/// sum onto the quotient; the quotient basis is the classes of the standard vectors at
/// `representatives` (indices into the direct sum).
struct CopresentationBasis {
    std::vector<ElemId> extrema;
    std::vector<std::size_t> offsets;
    Matrix projection;  // dim x offsets.back()
    std::vector<std::size_t> representatives;

    std::size_t dim() const noexcept { return projection.rows(); }
    /// Cocone map from the i-th extremum.
    Matrix block(std::size_t i) const;
    std::optional<std::size_t> slot(ElemId e) const;
};

/// Quotient of the sum over maxima by G_{qw}(x) - G_{qw'}(x) for consecutive pairs of
/// final-scaffold relations q < w, q < w'.
CopresentationBasis colimit_copresentations(const ModuleRep& g, const ScaffoldView& view);

/// Quotient of the sum over all elements by x - G_ab(x) for every stored relation. Reference route.
CopresentationBasis colimit_full_coequalizer(const ModuleRep& g);

struct GrankReport {
    std::size_t grank = 0;
    std::size_t dim_lim = 0;
    std::size_t dim_colim = 0;
    std::string m;
    std::string w;
};

/// rank of colim <- G_w <- G_m <- lim, with m an extremum of `initial` and w of `final`.
GrankReport generalized_rank(const ModuleRep& g, const ScaffoldView& initial, const ScaffoldView& final_view,
                             ElemId m, ElemId w);

/// Same quantity with lim and colim taken over every element (g must contain a path m -> w).
GrankReport generalized_rank_full(const ModuleRep& g, ElemId m, ElemId w);

/// Canonical comparable (minimum, maximum) pair: the first minimum, then the first maximum
/// above it; falls back to any comparable pair. Throws if Q is disconnected.
std::pair<ElemId, ElemId> choose_extremal_pair(const Poset& q);
std::pair<GridPoint, GridPoint> choose_extremal_pair(const GridInterval& q);

/// Carrier P^I u P^F u {m <= w} on which the generalized rank is computed.
Carrier<ElemId> grank_carrier(const Poset& q, const PosetScaffold& initial, const PosetScaffold& final_s, ElemId m,
                              ElemId w);
Carrier<GridPoint> grank_carrier(const GridScaffold& initial, const GridScaffold& final_s, const GridPoint& m,
                                 const GridPoint& w);

GrankReport generalized_rank(const QrComplex<ElemId>& c, const Poset& q);
GrankReport generalized_rank(const QrComplex<GridPoint>& c, const GridInterval& q);
/// g is a module over (part of) q; names must match q's element names.
GrankReport generalized_rank(const ModuleRep& g, const Poset& q);

}  // namespace scaffold
