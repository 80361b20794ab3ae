// Test-only oracles, independent of the library's elimination path.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "xorcache/gf2.hpp"

namespace xorcache::testing {

inline Gf2Combo xor_of(std::span<const Gf2Combo> combos, const std::vector<std::size_t>& indices) {
  Gf2Combo sum;
  for (const std::size_t i : indices) sum = xor_combine(sum, combos[i]);
  return sum;
}

// Checks span membership by XORing every one of the 2^|basis| subsets.
inline bool brute_force_span(std::span<const Gf2Combo> basis, const Gf2Combo& target) {
  const std::size_t n = basis.size();
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    Gf2Combo sum;
    for (std::size_t i = 0; i < n; ++i) {
      if ((subset >> i) & 1) sum = xor_combine(sum, basis[i]);
    }
    if (sum == target) return true;
  }
  return false;
}

// Rank via the subset-sum count: a rank-r set spans exactly 2^r combos.
inline int brute_force_rank(std::span<const Gf2Combo> combos) {
  const std::size_t n = combos.size();
  std::set<std::vector<SubfileId>> sums;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    Gf2Combo sum;
    for (std::size_t i = 0; i < n; ++i) {
      if ((subset >> i) & 1) sum = xor_combine(sum, combos[i]);
    }
    sums.insert(sum.terms());
  }
  int rank = 0;
  while ((std::size_t{1} << rank) < sums.size()) ++rank;
  return rank;
}

// Demands over n_files whose image covers every file, counted by
// inclusion-exclusion: sum_j (-1)^j C(N,j) (N-j)^K.
inline std::int64_t surjective_demand_count(int n_files, int n_users) {
  auto binom = [](int n, int k) {
    std::int64_t value = 1;
    for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
    return value;
  };
  std::int64_t total = 0;
  for (int j = 0; j <= n_files; ++j) {
    std::int64_t power = 1;
    for (int u = 0; u < n_users; ++u) power *= (n_files - j);
    total += (j % 2 == 0 ? 1 : -1) * binom(n_files, j) * power;
  }
  return total;
}

inline Gf2Combo random_combo(std::mt19937& rng, int n_files, int parts, int max_terms) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<int> file(1, n_files);
  std::uniform_int_distribution<int> part(1, parts);
  std::vector<SubfileId> terms;
  const int count = n_terms(rng);
  for (int i = 0; i < count; ++i) terms.push_back({file(rng), part(rng)});
  return Gf2Combo(std::move(terms));
}

}  // namespace xorcache::testing
