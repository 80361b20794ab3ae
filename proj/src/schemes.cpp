#include "xorcache/schemes.hpp"

#include <stdexcept>
#include <string>

namespace xorcache {

namespace {

void require_demand_matches(const ProblemInstance& instance, const DemandVector& demand) {
  if (demand.n_files() != instance.n_files || demand.n_users() != instance.n_users) {
    throw std::invalid_argument("demand vector does not match the instance dimensions");
  }
}

void require_scheme_plan(const PlacementPlan& plan) {
  const ProblemInstance& instance = plan.instance;
  if (instance != ProblemInstance::scheme_point(instance.n_files, instance.n_users)) {
    throw std::invalid_argument("plan is not at the scheme's operating point 1/max(N,K)");
  }
  const std::size_t combos_per_user =
      (instance.n_users == instance.n_files) ? 1 : static_cast<std::size_t>(instance.n_files);
  if (plan.caches.size() != static_cast<std::size_t>(instance.n_users)) {
    throw std::invalid_argument("plan must hold one cache per user");
  }
  for (const auto& cache : plan.caches) {
    if (cache.size() != combos_per_user) {
      throw std::invalid_argument("plan cache shape does not match the scheme");
    }
  }
}

// Every part of every distinct requested file, as singleton combos,
// file-ascending then part-ascending. Rate L.
std::vector<Gf2Combo> uncoded_fallback(const ProblemInstance& instance,
                                       const DemandVector& demand) {
  std::vector<Gf2Combo> out;
  for (int file = 1; file <= instance.n_files; ++file) {
    if (demand.multiplicity(file) == 0) continue;
    for (int part = 1; part <= instance.parts; ++part) {
      out.push_back(Gf2Combo::single({file, part}));
    }
  }
  return out;
}

}  // namespace

PlacementPlan place_diagonal(int n_files) {
  PlacementPlan plan{ProblemInstance::scheme_point(n_files, n_files), {}};
  for (int user = 1; user <= n_files; ++user) {
    std::vector<SubfileId> terms;
    terms.reserve(static_cast<std::size_t>(n_files));
    for (int file = 1; file <= n_files; ++file) terms.push_back({file, user});
    plan.caches.push_back({Gf2Combo(std::move(terms))});
  }
  check_placement_invariants(plan);
  return plan;
}

PlacementPlan place_block(int n_files, int n_users) {
  if (n_users <= n_files) {
    throw std::invalid_argument("block placement needs n_users > n_files");
  }
  PlacementPlan plan{ProblemInstance::scheme_point(n_files, n_users), {}};
  for (int user = 1; user <= n_users; ++user) {
    std::vector<Gf2Combo> combos;
    for (int j = 1; j <= n_files; ++j) {
      const int part = n_files * (user - 1) + j;
      std::vector<SubfileId> terms;
      terms.reserve(static_cast<std::size_t>(n_files));
      for (int file = 1; file <= n_files; ++file) terms.push_back({file, part});
      combos.push_back(Gf2Combo(std::move(terms)));
    }
    plan.caches.push_back(std::move(combos));
  }
  check_placement_invariants(plan);
  return plan;
}

PlacementPlan make_placement(int n_files, int n_users) {
  if (n_users < n_files) {
    throw std::invalid_argument("schemes require n_users >= n_files");
  }
  return (n_users == n_files) ? place_diagonal(n_files) : place_block(n_files, n_users);
}

DeliverySchedule deliver_diagonal(const PlacementPlan& plan, const DemandVector& demand) {
  const ProblemInstance& instance = plan.instance;
  if (instance.n_users != instance.n_files) {
    throw std::invalid_argument("diagonal delivery needs n_users == n_files");
  }
  require_scheme_plan(plan);
  require_demand_matches(instance, demand);

  DeliverySchedule schedule{instance, demand.entries(), {}};
  if (demand.distinct_files() < instance.n_files) {
    schedule.transmissions = uncoded_fallback(instance, demand);
    return schedule;
  }
  // The demand is a permutation: user i recovers part i of its file from its
  // cache combo, so only the off-diagonal parts are sent.
  for (int user = 1; user <= instance.n_users; ++user) {
    const int file = demand.file_for(user);
    for (int part = 1; part <= instance.parts; ++part) {
      if (part == user) continue;
      schedule.transmissions.push_back(Gf2Combo::single({file, part}));
    }
  }
  return schedule;
}

DeliverySchedule deliver_block(const PlacementPlan& plan, const DemandVector& demand) {
  const ProblemInstance& instance = plan.instance;
  if (instance.n_users <= instance.n_files) {
    throw std::invalid_argument("block delivery needs n_users > n_files");
  }
  require_scheme_plan(plan);
  require_demand_matches(instance, demand);

  DeliverySchedule schedule{instance, demand.entries(), {}};
  const int n = instance.n_files;
  if (demand.distinct_files() < n) {
    schedule.transmissions = uncoded_fallback(instance, demand);
    return schedule;
  }

  // Step 1: each user's cache block, minus its own file. Every id here has a
  // unique owner, so a repeat would mean a scheme bug; it is checked, not fixed.
  std::vector<bool> sent(static_cast<std::size_t>(n * instance.parts), false);
  for (int user = 1; user <= instance.n_users; ++user) {
    const int wanted = demand.file_for(user);
    for (int file = 1; file <= n; ++file) {
      if (file == wanted) continue;
      for (int j = 1; j <= n; ++j) {
        const int part = n * (user - 1) + j;
        const std::size_t flat =
            static_cast<std::size_t>(file - 1) * instance.parts + (part - 1);
        if (sent[flat]) {
          throw std::logic_error("step 1 produced a duplicate transmission for " +
                                 to_string(SubfileId{file, part}));
        }
        sent[flat] = true;
        schedule.transmissions.push_back(Gf2Combo::single({file, part}));
      }
    }
  }

  // Step 2: chain the requesters of each shared file, ascending user index.
  for (int file = 1; file <= n; ++file) {
    const std::vector<int> requesters = demand.requesters_of(file);
    for (std::size_t m = 0; m + 1 < requesters.size(); ++m) {
      for (int j = 1; j <= n; ++j) {
        schedule.transmissions.push_back(Gf2Combo({
            {file, n * (requesters[m] - 1) + j},
            {file, n * (requesters[m + 1] - 1) + j},
        }));
      }
    }
  }
  return schedule;
}

DeliverySchedule make_delivery(const PlacementPlan& plan, const DemandVector& demand) {
  return (plan.instance.n_users == plan.instance.n_files) ? deliver_diagonal(plan, demand)
                                                          : deliver_block(plan, demand);
}

Rat schedule_rate(const DeliverySchedule& schedule) {
  return Rat(static_cast<std::int64_t>(schedule.transmissions.size()), schedule.instance.parts);
}

void check_placement_invariants(const PlacementPlan& plan) {
  plan.instance.validate();
  if (static_cast<int>(plan.caches.size()) != plan.instance.n_users) {
    throw std::logic_error("plan must hold one cache per user");
  }
  for (const auto& cache : plan.caches) {
    if (Rat(static_cast<std::int64_t>(cache.size()), plan.instance.parts) >
        plan.instance.cache_size) {
      throw std::logic_error("cache exceeds the memory budget");
    }
  }
  if (plan.instance.n_users > plan.instance.n_files && plan.instance.cache_size > Rat(0)) {
    // Exclusivity: every subfile id cached by exactly one user.
    std::vector<int> owners(
        static_cast<std::size_t>(plan.instance.n_files) * plan.instance.parts, 0);
    for (const auto& cache : plan.caches) {
      for (const Gf2Combo& combo : cache) {
        for (const SubfileId& id : combo.terms()) {
          ++owners[static_cast<std::size_t>(id.file - 1) * plan.instance.parts + (id.part - 1)];
        }
      }
    }
    for (const int count : owners) {
      if (count != 1) {
        throw std::logic_error("block placement must cache every subfile exactly once");
      }
    }
  }
}

}  // namespace xorcache
