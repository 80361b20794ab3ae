#pragma once

#include "xorcache/rational.hpp"

namespace xorcache {

// A point on a cache-size / delivery-rate tradeoff curve, in file units.
struct RatePoint {
  Rat m{0};
  Rat r{0};

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

// Cut-set lower bound: max over s in 1..min(N,K) of s - s*M/floor(N/s).
// Requires N, K >= 1 and M >= 0.
Rat cutset_bound(int n_files, int n_users, const Rat& m);

// Rate of the coded schemes with memory sharing: N*(1-M).
// Domain: K >= N >= 1 and 0 <= M <= 1/K; throws std::domain_error outside.
Rat achievable_rate(int n_files, int n_users, const Rat& m);

// Small-cache rate segment of the classic centralized scheme of Maddah-Ali
// and Niesen: the line through (0, N) and (N/K, min((K-1)/2, N(K-1)/K)).
// Domain: 0 <= M <= N/K.
Rat mn_segment_rate(int n_files, int n_users, const Rat& m);

// Linear interpolation between two achievable points; the standard
// memory-sharing argument. Requires a.m < b.m and a.m <= m <= b.m.
Rat memory_share(const RatePoint& a, const RatePoint& b, const Rat& m);

// Lower convex envelope of the three achievable points
// (0, N), (1/K, N - N/K) and (N/K, min((K-1)/2, N(K-1)/K)), evaluated at m.
// Domain: K >= N >= 1 and 0 <= m <= N/K.
Rat combined_envelope(int n_files, int n_users, const Rat& m);

}  // namespace xorcache
