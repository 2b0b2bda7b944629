#pragma once

#include <string>
#include <vector>

#include "scaffold/poset.hpp"
#include "scaffold/scaffold.hpp"

namespace scaffold {

/// Initial scaffold of a finite poset: elements are the minima and essential points;
/// each element gets one relation per component of its open downset, anchored at the
/// smallest (canonical index) minimum of that component. Per-element work is
/// independent and split across `threads`.
PosetScaffold initial_scaffold(const Poset& q, unsigned threads = 1);

/// Final scaffold: the initial scaffold of the opposite poset, relations anchored at maxima.
PosetScaffold final_scaffold(const Poset& q, unsigned threads = 1);

/// Elements whose open downset does not have exactly one component (minima included),
/// computed directly from the comparability relation.
std::vector<ElemId> brute_force_essential(const Poset& q);

/// Checks that `p` is an initial (or final) scaffold of `q`: the element set equals the
/// brute-force essential set, each element has exactly one relation per component of its
/// open downset (upset), and every closed downset (upset) meets `p` in a connected subposet.
/// On failure, `why` receives a short reason.
bool verify_scaffold(const PosetScaffold& p, const Poset& q, std::string* why = nullptr);

/// The scaffold viewed as a poset in its own right, with element names taken from `q`.
Poset scaffold_as_poset(const PosetScaffold& p, const Poset& q);

}  // namespace scaffold
