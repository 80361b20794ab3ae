#include "xorcache/verifier.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace xorcache {

namespace {

void require_consistent(const PlacementPlan& plan, const DeliverySchedule& schedule,
                        const DemandVector& demand) {
  plan.instance.validate();
  if (schedule.instance != plan.instance) {
    throw std::invalid_argument("plan and schedule belong to different instances");
  }
  if (demand.n_files() != plan.instance.n_files || demand.n_users() != plan.instance.n_users) {
    throw std::invalid_argument("demand does not match the instance dimensions");
  }
  if (!schedule.demand.empty() && schedule.demand != demand.entries()) {
    throw std::invalid_argument("schedule was built for a different demand vector");
  }
  if (static_cast<int>(plan.caches.size()) != plan.instance.n_users) {
    throw std::invalid_argument("plan must hold one cache per user");
  }
}

std::vector<Gf2Combo> user_basis(const PlacementPlan& plan, const DeliverySchedule& schedule,
                                 int user) {
  std::vector<Gf2Combo> basis = plan.caches[static_cast<std::size_t>(user) - 1];
  basis.insert(basis.end(), schedule.transmissions.begin(), schedule.transmissions.end());
  return basis;
}

}  // namespace

UndecodableError::UndecodableError(int user, SubfileId subfile)
    : std::runtime_error("user " + std::to_string(user) + " cannot decode subfile " +
                         to_string(subfile)),
      user_(user),
      subfile_(subfile) {}

DecodeCertificate verify_decodability(const PlacementPlan& plan, const DeliverySchedule& schedule,
                                      const DemandVector& demand) {
  require_consistent(plan, schedule, demand);
  DecodeCertificate certificate;
  for (int user = 1; user <= plan.instance.n_users; ++user) {
    const std::size_t n_cached = plan.caches[static_cast<std::size_t>(user) - 1].size();
    const std::vector<Gf2Combo> basis = user_basis(plan, schedule, user);
    const Gf2Solver solver(basis);

    UserCertificate entry;
    entry.user = user;
    entry.file = demand.file_for(user);
    for (int part = 1; part <= plan.instance.parts; ++part) {
      const SubfileId id{entry.file, part};
      const auto indices = solver.witness(Gf2Combo::single(id));
      if (!indices) {
        throw UndecodableError(user, id);
      }
      DecodeWitness witness;
      for (const std::size_t index : *indices) {
        if (index < n_cached) {
          witness.cache_indices.push_back(index);
        } else {
          witness.broadcast_indices.push_back(index - n_cached);
        }
      }
      entry.parts.push_back(std::move(witness));
    }
    certificate.users.push_back(std::move(entry));
  }
  return certificate;
}

bool is_decodable(const PlacementPlan& plan, const DeliverySchedule& schedule,
                  const DemandVector& demand) {
  require_consistent(plan, schedule, demand);
  for (int user = 1; user <= plan.instance.n_users; ++user) {
    const std::vector<Gf2Combo> basis = user_basis(plan, schedule, user);
    const Gf2Solver solver(basis);
    const int file = demand.file_for(user);
    for (int part = 1; part <= plan.instance.parts; ++part) {
      if (!solver.contains(Gf2Combo::single({file, part}))) return false;
    }
  }
  return true;
}

bool SimulationReport::all_ok() const {
  return std::all_of(users.begin(), users.end(),
                     [](const UserReconstruction& u) { return u.bit_exact; });
}

namespace {

using Payload = std::vector<std::uint8_t>;

// A received symbol: which subfiles are XORed into it, plus the bytes.
struct Symbol {
  std::vector<std::uint64_t> ids;  // bitmask over flat subfile indexes
  Payload bytes;
};

std::size_t flat_id(const ProblemInstance& instance, const SubfileId& id) {
  return static_cast<std::size_t>(id.file - 1) * instance.parts +
         static_cast<std::size_t>(id.part - 1);
}

void xor_words(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void xor_bytes(Payload& dst, const Payload& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

int lowest_id(const std::vector<std::uint64_t>& mask) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if (mask[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(mask[w]));
  }
  return -1;
}

bool single_id(const std::vector<std::uint64_t>& mask, int id) {
  const std::size_t word_index = static_cast<std::size_t>(id) / 64;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    const std::uint64_t expected = (w == word_index) ? std::uint64_t{1} << (id % 64) : 0;
    if (mask[w] != expected) return false;
  }
  return true;
}

Symbol materialize(const ProblemInstance& instance, const Gf2Combo& combo,
                   const std::vector<Payload>& truth, std::size_t id_words,
                   std::size_t block_bytes) {
  Symbol symbol{std::vector<std::uint64_t>(id_words, 0), Payload(block_bytes, 0)};
  for (const SubfileId& id : combo.terms()) {
    const std::size_t flat = flat_id(instance, id);
    symbol.ids[flat / 64] ^= std::uint64_t{1} << (flat % 64);
    xor_bytes(symbol.bytes, truth[flat]);
  }
  return symbol;
}

}  // namespace

SimulationReport simulate_payload(std::uint64_t seed, std::uint64_t file_size_bytes,
                                  const PlacementPlan& plan, const DeliverySchedule& schedule,
                                  const DemandVector& demand) {
  require_consistent(plan, schedule, demand);
  const ProblemInstance& instance = plan.instance;
  if (file_size_bytes == 0 || file_size_bytes % static_cast<std::uint64_t>(instance.parts) != 0) {
    throw std::invalid_argument("file size " + std::to_string(file_size_bytes) +
                                " is not divisible into " + std::to_string(instance.parts) +
                                " parts");
  }
  const std::size_t block_bytes = file_size_bytes / static_cast<std::uint64_t>(instance.parts);
  const std::size_t total_ids =
      static_cast<std::size_t>(instance.n_files) * static_cast<std::size_t>(instance.parts);
  const std::size_t id_words = (total_ids + 63) / 64;

  // Ground truth: one block per flat subfile id, drawn from the seeded stream
  // file by file, part by part.
  std::mt19937_64 rng(seed);
  std::vector<Payload> truth(total_ids);
  std::uint64_t word = 0;
  int spare = 0;
  for (Payload& block : truth) {
    block.resize(block_bytes);
    for (std::size_t b = 0; b < block_bytes; ++b) {
      if (spare == 0) {
        word = rng();
        spare = 8;
      }
      block[b] = static_cast<std::uint8_t>(word & 0xff);
      word >>= 8;
      --spare;
    }
  }

  std::vector<Symbol> broadcast;
  broadcast.reserve(schedule.transmissions.size());
  for (const Gf2Combo& combo : schedule.transmissions) {
    broadcast.push_back(materialize(instance, combo, truth, id_words, block_bytes));
  }

  SimulationReport report;
  report.subfile_bytes = block_bytes;
  report.bytes_broadcast = static_cast<std::uint64_t>(schedule.transmissions.size()) * block_bytes;

  for (int user = 1; user <= instance.n_users; ++user) {
    // Everything this user holds, as (id set, bytes) rows.
    std::vector<Symbol> rows;
    for (const Gf2Combo& combo : plan.caches[static_cast<std::size_t>(user) - 1]) {
      rows.push_back(materialize(instance, combo, truth, id_words, block_bytes));
    }
    rows.insert(rows.end(), broadcast.begin(), broadcast.end());

    // Forward elimination, then back substitution, over the id columns; the
    // same XOR operations apply to the byte payloads.
    std::vector<Symbol> reduced;
    for (Symbol& row : rows) {
      while (true) {
        const int pivot = lowest_id(row.ids);
        if (pivot < 0) break;
        auto it = std::find_if(reduced.begin(), reduced.end(), [&](const Symbol& r) {
          return lowest_id(r.ids) == pivot;
        });
        if (it == reduced.end()) {
          reduced.push_back(std::move(row));
          break;
        }
        xor_words(row.ids, it->ids);
        xor_bytes(row.bytes, it->bytes);
      }
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const Symbol& a, const Symbol& b) { return lowest_id(a.ids) < lowest_id(b.ids); });
    for (std::size_t i = reduced.size(); i-- > 0;) {
      const int pivot = lowest_id(reduced[i].ids);
      for (std::size_t j = 0; j < i; ++j) {
        if ((reduced[j].ids[pivot / 64] >> (pivot % 64)) & 1) {
          xor_words(reduced[j].ids, reduced[i].ids);
          xor_bytes(reduced[j].bytes, reduced[i].bytes);
        }
      }
    }

    const int file = demand.file_for(user);
    bool ok = true;
    for (int part = 1; part <= instance.parts && ok; ++part) {
      const std::size_t flat = flat_id(instance, {file, part});
      const auto it = std::find_if(reduced.begin(), reduced.end(), [&](const Symbol& r) {
        return single_id(r.ids, static_cast<int>(flat));
      });
      ok = (it != reduced.end()) && (it->bytes == truth[flat]);
    }
    report.users.push_back({user, file, ok});
  }
  return report;
}

namespace {

std::vector<int> demand_digits(std::uint64_t index, int n_files, int n_users) {
  std::vector<int> entries(static_cast<std::size_t>(n_users));
  for (int user = n_users; user >= 1; --user) {
    entries[static_cast<std::size_t>(user) - 1] =
        static_cast<int>(index % static_cast<std::uint64_t>(n_files)) + 1;
    index /= static_cast<std::uint64_t>(n_files);
  }
  return entries;
}

struct WorkerResult {
  std::size_t best_len = 0;
  std::vector<std::vector<int>> best_demands;
};

}  // namespace

PeakRateReport peak_rate(int n_files, int n_users, std::uint64_t budget, int workers) {
  const PlacementPlan plan = make_placement(n_files, n_users);

  std::uint64_t total = 1;
  for (int u = 0; u < n_users; ++u) {
    if (total > budget) break;
    total *= static_cast<std::uint64_t>(n_files);
  }
  if (total > budget) {
    throw EnumerationBudgetError(
        "demand space " + std::to_string(n_files) + "^" + std::to_string(n_users) +
        " exceeds the enumeration budget " + std::to_string(budget) +
        "; refusing to sample");
  }

  int n_workers = workers;
  if (n_workers <= 0) {
    n_workers = static_cast<int>(std::thread::hardware_concurrency());
    if (n_workers < 1) n_workers = 1;
  }
  n_workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(n_workers, 1)), total));

  std::vector<WorkerResult> results(static_cast<std::size_t>(n_workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_workers));

  const auto run = [&](int w) {
    try {
      WorkerResult& local = results[static_cast<std::size_t>(w)];
      const std::uint64_t chunk = (total + static_cast<std::uint64_t>(n_workers) - 1) /
                                  static_cast<std::uint64_t>(n_workers);
      const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t index = begin; index < end; ++index) {
        const DemandVector demand(demand_digits(index, n_files, n_users), n_files);
        const DeliverySchedule schedule = make_delivery(plan, demand);
        if (!is_decodable(plan, schedule, demand)) {
          throw std::logic_error("scheme produced an undecodable schedule for demand " +
                                 [&] {
                                   std::string s;
                                   for (int d : demand.entries()) s += std::to_string(d) + ",";
                                   return s;
                                 }());
        }
        const std::size_t len = schedule.transmissions.size();
        if (len > local.best_len) {
          local.best_len = len;
          local.best_demands.clear();
        }
        if (len == local.best_len) {
          local.best_demands.push_back(demand.entries());
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (n_workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  std::size_t best_len = 0;
  for (const WorkerResult& r : results) best_len = std::max(best_len, r.best_len);

  PeakRateReport report;
  report.instance = plan.instance;
  report.peak = Rat(static_cast<std::int64_t>(best_len), plan.instance.parts);
  report.demands_checked = total;
  for (const WorkerResult& r : results) {
    if (r.best_len == best_len) {
      report.worst_demands.insert(report.worst_demands.end(), r.best_demands.begin(),
                                  r.best_demands.end());
    }
  }
  std::sort(report.worst_demands.begin(), report.worst_demands.end());
  return report;
}

}  // namespace xorcache
