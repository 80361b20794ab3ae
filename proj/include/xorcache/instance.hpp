#pragma once

#include <vector>

#include "xorcache/rational.hpp"

namespace xorcache {

// A server with n_files files, n_users users on a shared error-free broadcast
// link, and a per-user cache of cache_size (in file units). Files are split
// into `parts` equal subfiles: n_files of them when n_users == n_files,
// n_files * n_users when n_users > n_files.
struct ProblemInstance {
  int n_files = 0;   // N
  int n_users = 0;   // K
  Rat cache_size{0};  // M, in [0, 1/K]
  int parts = 0;     // P

  // The cache size the coded schemes operate at: 1/max(N, K).
  static ProblemInstance scheme_point(int n_files, int n_users);

  // Throws std::invalid_argument on any violated invariant
  // (K >= N >= 1, P matching the regime, M in [0, 1/K]).
  void validate() const;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

// The demand vector: entry u (1-based) is the file requested by user u.
class DemandVector {
 public:
  // Throws std::invalid_argument when empty or an entry is outside 1..n_files.
  DemandVector(std::vector<int> entries, int n_files);

  const std::vector<int>& entries() const { return entries_; }
  int n_users() const { return static_cast<int>(entries_.size()); }
  int n_files() const { return n_files_; }

  // File requested by `user` (1-based).
  int file_for(int user) const { return entries_[static_cast<std::size_t>(user) - 1]; }

  // Number of distinct files requested (L).
  int distinct_files() const { return distinct_; }

  // Number of users requesting `file` (k_i).
  int multiplicity(int file) const { return counts_[static_cast<std::size_t>(file) - 1]; }

  // Users requesting `file`, ascending.
  std::vector<int> requesters_of(int file) const;

 private:
  std::vector<int> entries_;
  std::vector<int> counts_;  // per file
  int n_files_ = 0;
  int distinct_ = 0;
};

}  // namespace xorcache
