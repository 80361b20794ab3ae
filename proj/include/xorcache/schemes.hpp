#pragma once

#include <vector>

#include "xorcache/gf2.hpp"
#include "xorcache/instance.hpp"
#include "xorcache/rational.hpp"

namespace xorcache {

// Per-user coded cache contents. caches[u] holds user u+1's combos; the cache
// budget (#combos / parts) never exceeds the instance cache size.
struct PlacementPlan {
  ProblemInstance instance;
  std::vector<std::vector<Gf2Combo>> caches;
};

// The ordered broadcast transmissions answering one demand vector. Every
// transmission is one subfile-sized symbol, so the exact rate is
// transmissions.size() / parts.
struct DeliverySchedule {
  ProblemInstance instance;
  std::vector<int> demand;
  std::vector<Gf2Combo> transmissions;
};

// K == N regime: each file splits into N subfiles and user j caches the single
// combo W_{1,j} ^ ... ^ W_{N,j}, i.e. part j of every file (budget 1/N).
PlacementPlan place_diagonal(int n_files);

// K > N regime: each file splits into N*K subfiles and user i caches the N
// combos W_{1,N(i-1)+j} ^ ... ^ W_{N,N(i-1)+j} for j = 1..N (budget 1/K).
// Every subfile id lands in exactly one user's cache.
PlacementPlan place_block(int n_files, int n_users);

// Dispatch on the regime. Rejects n_users < n_files.
PlacementPlan make_placement(int n_files, int n_users);

// Delivery for the diagonal placement. With L = N distinct requests (a
// permutation), user i gets every part of its file except part i: N(N-1)
// transmissions, rate N-1. With L <= N-1 the distinct files ship uncoded,
// rate L.
DeliverySchedule deliver_diagonal(const PlacementPlan& plan, const DemandVector& demand);

// Delivery for the block placement. With L = N distinct requests:
//   step 1: for each user i, the unwanted subfiles W_{k,N(i-1)+j} (k != d_i)
//           of its own cache block, ordered by user, file, then j;
//   step 2: per file with several requesters, chained XORs of consecutive
//           requesters' blocks, ordered by file, chain position, then j.
// Total (K-1)N^2 transmissions, rate N - N/K. With L <= N-1 the distinct
// files ship uncoded, rate L.
DeliverySchedule deliver_block(const PlacementPlan& plan, const DemandVector& demand);

// Dispatch on the regime of plan.instance.
DeliverySchedule make_delivery(const PlacementPlan& plan, const DemandVector& demand);

// Number of transmissions divided by parts, exact.
Rat schedule_rate(const DeliverySchedule& schedule);

// Throws std::logic_error when the plan violates the cache budget or, for the
// block placement, the one-owner-per-subfile exclusivity rule.
void check_placement_invariants(const PlacementPlan& plan);

}  // namespace xorcache
