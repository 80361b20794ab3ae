#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xorcache/gf2.hpp"
#include "xorcache/instance.hpp"
#include "xorcache/rational.hpp"
#include "xorcache/schemes.hpp"

namespace xorcache {

// GF(2) witness for one subfile: the cache combos and broadcast transmissions
// whose XOR equals it.
struct DecodeWitness {
  std::vector<std::size_t> cache_indices;      // into the user's cache combos
  std::vector<std::size_t> broadcast_indices;  // into schedule.transmissions
};

struct UserCertificate {
  int user = 0;  // 1-based
  int file = 0;  // the requested file
  std::vector<DecodeWitness> parts;  // parts[p-1] derives W_{file,p}
};

// Proof that every user can reconstruct its requested file from its cache and
// the broadcast, one witness per subfile.
struct DecodeCertificate {
  std::vector<UserCertificate> users;
};

// A (user, subfile) pair with no GF(2) derivation. Signals a scheme bug.
class UndecodableError : public std::runtime_error {
 public:
  UndecodableError(int user, SubfileId subfile);
  int user() const { return user_; }
  SubfileId subfile() const { return subfile_; }

 private:
  int user_;
  SubfileId subfile_;
};

// Builds the full certificate via GF(2) elimination over each user's cache
// combos plus all transmissions. Throws UndecodableError at the first
// (user, subfile) without a witness.
DecodeCertificate verify_decodability(const PlacementPlan& plan, const DeliverySchedule& schedule,
                                      const DemandVector& demand);

// Same check without materializing witnesses.
bool is_decodable(const PlacementPlan& plan, const DeliverySchedule& schedule,
                  const DemandVector& demand);

struct UserReconstruction {
  int user = 0;
  int file = 0;
  bool bit_exact = false;
};

struct SimulationReport {
  std::vector<UserReconstruction> users;
  std::uint64_t subfile_bytes = 0;
  std::uint64_t bytes_broadcast = 0;  // transmissions * subfile_bytes

  bool all_ok() const;
};

// Independent byte-level oracle: draws n_files pseudorandom files from `seed`
// (the byte stream of std::mt19937_64(seed), least significant byte first),
// materializes caches and transmissions by XOR, then lets each user decode by
// Gaussian elimination over its received byte blocks. No symbolic witnesses
// are consulted. file_size_bytes must be divisible by the part count.
SimulationReport simulate_payload(std::uint64_t seed, std::uint64_t file_size_bytes,
                                  const PlacementPlan& plan, const DeliverySchedule& schedule,
                                  const DemandVector& demand);

struct PeakRateReport {
  ProblemInstance instance;
  Rat peak{0};
  std::vector<std::vector<int>> worst_demands;  // lexicographically ascending
  std::uint64_t demands_checked = 0;
};

// Refusal to enumerate past the configured budget; sampling would make the
// reported peak unsound.
class EnumerationBudgetError : public std::runtime_error {
 public:
  explicit EnumerationBudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

// Exhaustively enumerates all N^K demand vectors, builds the scheme's
// schedule for each, checks decodability, and reports the exact peak rate
// with every demand attaining it. workers <= 0 picks a thread count
// automatically.
PeakRateReport peak_rate(int n_files, int n_users,
                         std::uint64_t budget = kDefaultEnumerationBudget, int workers = 0);

}  // namespace xorcache
