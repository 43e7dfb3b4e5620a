#pragma once

#include <cstdint>

namespace mcm {

inline constexpr int kInfinity = 1 << 29;

struct PhaseStats {
    int phase = 0;
    int l_m = kInfinity;  // kInfinity when the phase found no augmenting path
    int aps = 0;
    std::int64_t edge_scans = 0;
    std::int64_t grows = 0;
    std::int64_t unions = 0;
    std::int64_t finds = 0;
    std::int64_t forest_work = 0;
    std::int64_t stale_bridges = 0;
    std::int64_t micros = 0;  // wall time; excluded from byte comparisons
};

}  // namespace mcm
