#pragma once

// Brute-force reference implementations for tests. Nothing here calls the
// search routines of the other modules.

#include "lettergrid/graphs.hpp"
#include "lettergrid/gridding.hpp"
#include "lettergrid/perm.hpp"

namespace lettergrid::oracle {

/// Tries every vertex bijection. Order <= 8.
bool isomorphic(const SimpleGraph& g, const SimpleGraph& h);

/// Least k such that some decoder (up to renaming letters) and some word of
/// length n over k letters decodes to a graph isomorphic to g. Order <= 8.
int lettericity(const SimpleGraph& g);

/// Every gridding by m (or its doubling when m is not a PMM) under every
/// valid sign vector, looking for acyclic local orders. |pi| <= 8.
bool geom_member(const Permutation& pi, const GridMatrix& m);

/// Every index subset of size |sigma|. |pi| <= 16.
bool contains(const Permutation& pi, const Permutation& sigma);

}  // namespace lettergrid::oracle
