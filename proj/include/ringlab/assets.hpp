#pragma once

#include "ringlab/group.hpp"
#include "ringlab/ring.hpp"

namespace ringlab::assets {

/// Contents of assets/f4.ring: the four-element field 0, 1, w, w+1 with
/// w^2 = w+1.
extern const char* const kF4RingTable;

/// Contents of assets/s3.group: the symmetric group on three points
/// (0 = id, 1..2 = 3-cycles, 3..5 = transpositions), op(a,b) = a after b.
extern const char* const kS3GroupTable;

FiniteRing f4();
FiniteGroup s3();

}  // namespace ringlab::assets
