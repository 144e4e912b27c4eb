#pragma once

#include "gcensus/surface.hpp"
#include "gcensus/words.hpp"

namespace gcensus {

// Minimal self-intersection number of the free homotopy class.
//
// Primitive words are handled by the linked-pairs count: a crossing exists
// for every unordered pair of strands of the lift whose boundary endpoints
// link, where the endpoint order is read combinatorially from the planar
// ribbon structure of the wedge of two circles. Proper powers w = u^k reduce
// to k^2 * SI(u) + (k - 1).
int self_intersection(const CurveClass& c);

// Independent cross-check: the same strand-pair enumeration, but with the
// linking of endpoints decided numerically from the boundary fixed points of
// the actual matrices on a given structure. Defined for primitive
// non-peripheral classes; proper powers reduce by the same power rule.
// Metric independence of the result is itself a checked property.
int self_intersection_geometric(const SurfaceStructure& s, const CurveClass& c);

}  // namespace gcensus
