#include "ringlab/assets.hpp"

#include <sstream>

namespace ringlab::assets {

const char* const kF4RingTable =
    "order 4\n"
    "0 1 2 3\n"
    "1 0 3 2\n"
    "2 3 0 1\n"
    "3 2 1 0\n"
    "0 0 0 0\n"
    "0 1 2 3\n"
    "0 2 3 1\n"
    "0 3 1 2\n";

const char* const kS3GroupTable =
    "order 6\n"
    "0 1 2 3 4 5\n"
    "1 2 0 4 5 3\n"
    "2 0 1 5 3 4\n"
    "3 5 4 0 2 1\n"
    "4 3 5 1 0 2\n"
    "5 4 3 2 1 0\n";

FiniteRing f4() {
  std::istringstream in(kF4RingTable);
  return load_ring_table(in, "F4");
}

FiniteGroup s3() {
  std::istringstream in(kS3GroupTable);
  return load_group_table(in, "S3");
}

}  // namespace ringlab::assets
