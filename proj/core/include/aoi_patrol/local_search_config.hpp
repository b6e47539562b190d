#pragma once

#include <cstdint>

namespace aoi_patrol {

// Budget for the 2-opt / Or-opt tour improver. Restarts beyond the first use
// seeded random permutations as starting tours.
struct ImproverConfig {
    int max_passes = 50;
    std::uint64_t seed = 1;
    int restarts = 4;
};

}  // namespace aoi_patrol
