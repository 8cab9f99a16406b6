#pragma once

namespace lss {

// Size caps for the exhaustive procedures. The CLI exposes them as
// --max-n / --max-edges and the LSS_MAX_N environment variable.
struct SearchLimits {
  int max_n;
  int max_edges;
};

inline constexpr SearchLimits kCycleEnumerationLimits{24, 64};
inline constexpr SearchLimits kPmdLimits{10, 20};
inline constexpr SearchLimits kTpmdLimits{8, 16};
inline constexpr SearchLimits kInducedSearchLimits{16, 64};

}  // namespace lss
