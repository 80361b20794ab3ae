#include "xorcache/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace xorcache {

namespace {

void require_positive_dims(int n_files, int n_users) {
  if (n_files < 1 || n_users < 1) {
    throw std::invalid_argument("n_files and n_users must be >= 1");
  }
}

// Rate of the classic scheme at its first directly-constructed point N/K.
Rat mn_first_vertex_rate(int n_files, int n_users) {
  return std::min(Rat(n_users - 1, 2), Rat(n_files * (n_users - 1), n_users));
}

}  // namespace

Rat cutset_bound(int n_files, int n_users, const Rat& m) {
  require_positive_dims(n_files, n_users);
  if (m < Rat(0)) {
    throw std::invalid_argument("cache size must be >= 0");
  }
  const int s_max = std::min(n_files, n_users);
  Rat best = Rat(1) - m / Rat(n_files);  // s = 1
  for (int s = 2; s <= s_max; ++s) {
    const Rat value = Rat(s) - Rat(s) * m / Rat(n_files / s);
    best = std::max(best, value);
  }
  return best;
}

Rat achievable_rate(int n_files, int n_users, const Rat& m) {
  require_positive_dims(n_files, n_users);
  if (n_users < n_files) {
    throw std::domain_error("achievable rate needs n_users >= n_files");
  }
  if (m < Rat(0) || m > Rat(1, n_users)) {
    throw std::domain_error("cache size " + format_rat(m) + " outside [0, 1/" +
                            std::to_string(n_users) + "]");
  }
  return Rat(n_files) * (Rat(1) - m);
}

Rat mn_segment_rate(int n_files, int n_users, const Rat& m) {
  require_positive_dims(n_files, n_users);
  if (m < Rat(0) || m > Rat(n_files, n_users)) {
    throw std::domain_error("cache size " + format_rat(m) + " outside [0, " +
                            std::to_string(n_files) + "/" + std::to_string(n_users) + "]");
  }
  const Rat slope =
      (std::min(Rat(n_users * (n_users - 1), 2), Rat(n_files * (n_users - 1))) -
       Rat(n_users) * Rat(n_files)) /
      Rat(n_files);
  return Rat(n_files) + m * slope;
}

Rat memory_share(const RatePoint& a, const RatePoint& b, const Rat& m) {
  if (a.m >= b.m) {
    throw std::invalid_argument("memory sharing needs a.m < b.m");
  }
  if (m < a.m || m > b.m) {
    throw std::domain_error("cache size " + format_rat(m) + " outside [" + format_rat(a.m) +
                            ", " + format_rat(b.m) + "]");
  }
  return a.r + (m - a.m) * (b.r - a.r) / (b.m - a.m);
}

Rat combined_envelope(int n_files, int n_users, const Rat& m) {
  require_positive_dims(n_files, n_users);
  if (n_users < n_files) {
    throw std::domain_error("envelope needs n_users >= n_files");
  }
  if (m < Rat(0) || m > Rat(n_files, n_users)) {
    throw std::domain_error("cache size " + format_rat(m) + " outside [0, " +
                            std::to_string(n_files) + "/" + std::to_string(n_users) + "]");
  }

  std::vector<RatePoint> points = {
      {Rat(0), Rat(n_files)},
      {Rat(1, n_users), Rat(n_files) - Rat(n_files, n_users)},
      {Rat(n_files, n_users), mn_first_vertex_rate(n_files, n_users)},
  };
  // Collapse coincident cache sizes (N == 1 makes 1/K and N/K the same point).
  std::vector<RatePoint> distinct;
  for (const RatePoint& p : points) {
    if (!distinct.empty() && distinct.back().m == p.m) {
      distinct.back().r = std::min(distinct.back().r, p.r);
    } else {
      distinct.push_back(p);
    }
  }
  // Lower convex hull over at most three points: drop the middle vertex when
  // it does not bend the chain downward.
  if (distinct.size() == 3) {
    const RatePoint& a = distinct[0];
    const RatePoint& b = distinct[1];
    const RatePoint& c = distinct[2];
    const Rat cross = (b.m - a.m) * (c.r - a.r) - (b.r - a.r) * (c.m - a.m);
    if (cross <= Rat(0)) {
      distinct.erase(distinct.begin() + 1);
    }
  }
  for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
    if (m <= distinct[i + 1].m) {
      return memory_share(distinct[i], distinct[i + 1], m);
    }
  }
  return distinct.back().r;  // single-point domain (N == K == 1 with M == 1)
}

}  // namespace xorcache
