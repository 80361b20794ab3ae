// xorcache: construct, verify, simulate and benchmark XOR-coded caching
// schemes for small-buffer broadcast delivery.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xorcache/bounds.hpp"
#include "xorcache/serialize.hpp"

namespace {

// 0 = success, 2 = validation/usage error, 3 = verification failure.
constexpr int kOk = 0;
constexpr int kUsageError = 2;
constexpr int kVerifyFailure = 3;

using xorcache::Rat;

std::vector<int> parse_demand(const std::string& text) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed demand entry '" + item + "'");
    }
    if (used != item.size()) {
      throw std::invalid_argument("malformed demand entry '" + item + "'");
    }
    entries.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return entries;
}

void write_json(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
  out << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
  return j;
}

int env_workers() {
  const char* raw = std::getenv("XORCACHE_WORKERS");
  if (raw == nullptr) return 0;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw std::invalid_argument("XORCACHE_WORKERS must be an integer");
  }
}

void require_header_match(const xorcache::ProblemInstance& instance, int n, int k,
                          const char* what) {
  if (instance.n_files != n || instance.n_users != k) {
    throw std::invalid_argument(std::string(what) + " header does not match --n/--k");
  }
}

struct SweepSpec {
  int n_min = 1;
  int n_max = 1;
  int k_min = 1;
  int k_max = 1;
  std::vector<Rat> m_grid;  // empty = per-instance default grid
  std::string format = "csv";
};

std::vector<Rat> grid_for(const SweepSpec& spec, int n, int k) {
  if (!spec.m_grid.empty()) {
    for (const Rat& m : spec.m_grid) {
      if (m < Rat(0) || m > Rat(n, k)) {
        throw std::invalid_argument("grid value " + xorcache::format_rat(m) +
                                    " outside [0, " + std::to_string(n) + "/" +
                                    std::to_string(k) + "] for N=" + std::to_string(n) +
                                    ", K=" + std::to_string(k));
      }
    }
    return spec.m_grid;
  }
  return {Rat(0), Rat(1, 4 * k), Rat(1, 2 * k), Rat(3, 4 * k), Rat(1, k)};
}

int run_table(const SweepSpec& spec, const std::string& out_path) {
  struct Row {
    int n;
    int k;
    Rat m;
    Rat ours;
    Rat mn;
    Rat cutset;
    bool tight;
  };
  std::vector<Row> rows;
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    for (int k = std::max(n, spec.k_min); k <= spec.k_max; ++k) {
      for (const Rat& m : grid_for(spec, n, k)) {
        Row row{n, k, m,
                xorcache::combined_envelope(n, k, m),
                xorcache::mn_segment_rate(n, k, m),
                xorcache::cutset_bound(n, k, m),
                m <= Rat(1, k)};
        if (row.tight && row.ours != row.cutset) {
          throw std::logic_error("achievable rate misses the cut-set bound inside M <= 1/K");
        }
        rows.push_back(row);
      }
    }
  }

  if (spec.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const Row& row : rows) {
      out.push_back({{"n", row.n},
                     {"k", row.k},
                     {"m", xorcache::format_rat(row.m)},
                     {"r_ours", xorcache::format_rat(row.ours)},
                     {"r_mn", xorcache::format_rat(row.mn)},
                     {"r_cutset", xorcache::format_rat(row.cutset)},
                     {"tight", row.tight}});
    }
    write_json(out, out_path);
    return kOk;
  }

  std::ostringstream csv;
  csv << "N,K,M,R_ours,R_mn,R_cutset,tight\n";
  for (const Row& row : rows) {
    csv << row.n << "," << row.k << "," << xorcache::format_rat(row.m) << ","
        << xorcache::format_rat(row.ours) << "," << xorcache::format_rat(row.mn) << ","
        << xorcache::format_rat(row.cutset) << "," << (row.tight ? "yes" : "no") << "\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    out << csv.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"XOR-coded caching schemes for small-buffer broadcast delivery"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  std::string demand_text;
  std::string out_path;

  auto* place = app.add_subcommand("place", "emit the coded placement plan as JSON");
  place->add_option("--n", n, "number of files")->required();
  place->add_option("--k", k, "number of users")->required();
  place->add_option("--out", out_path, "output path (default: stdout)");

  auto* deliver = app.add_subcommand("deliver", "build the broadcast schedule for a demand");
  deliver->add_option("--n", n, "number of files")->required();
  deliver->add_option("--k", k, "number of users")->required();
  deliver->add_option("--demand", demand_text, "comma-separated file per user")->required();
  deliver->add_option("--out", out_path, "schedule JSON path");

  std::string plan_path;
  std::string schedule_path;
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "check a schedule decodes against a plan");
  verify->add_option("--n", n, "number of files")->required();
  verify->add_option("--k", k, "number of users")->required();
  verify->add_option("--plan", plan_path, "plan JSON path")->required();
  verify->add_option("--schedule", schedule_path, "schedule JSON path")->required();
  verify->add_option("--demand", demand_text, "comma-separated file per user")->required();
  verify->add_option("--cert", cert_path, "write the decode certificate JSON here");

  std::uint64_t seed = 1;
  std::uint64_t bytes = 0;
  auto* simulate = app.add_subcommand("simulate", "byte-level broadcast simulation");
  simulate->add_option("--n", n, "number of files")->required();
  simulate->add_option("--k", k, "number of users")->required();
  simulate->add_option("--demand", demand_text, "comma-separated file per user")->required();
  simulate->add_option("--seed", seed, "payload generator seed");
  simulate->add_option("--bytes", bytes, "file size in bytes (divisible by parts)")->required();
  simulate->add_option("--out", out_path, "report JSON path (default: stdout)");

  std::uint64_t budget = xorcache::kDefaultEnumerationBudget;
  auto* peak = app.add_subcommand("peak", "certify the exact peak rate over all demands");
  peak->add_option("--n", n, "number of files")->required();
  peak->add_option("--k", k, "number of users")->required();
  peak->add_option("--budget", budget, "max demand vectors to enumerate");
  peak->add_option("--out", out_path, "report JSON path");

  SweepSpec sweep;
  std::string grid_text;
  auto* table = app.add_subcommand("table", "rate/bound comparison table");
  table->add_option("--n-min", sweep.n_min, "smallest N");
  table->add_option("--n-max", sweep.n_max, "largest N")->required();
  table->add_option("--k-min", sweep.k_min, "smallest K");
  table->add_option("--k-max", sweep.k_max, "largest K")->required();
  table->add_option("--m-grid", grid_text,
                    "comma-separated cache sizes, e.g. 0,1/8,1/4 "
                    "(default: {0, 1/4K, 1/2K, 3/4K, 1/K} per instance)");
  table->add_option("--format", sweep.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (place->parsed()) {
      const xorcache::PlacementPlan plan = xorcache::make_placement(n, k);
      write_json(xorcache::plan_to_json(plan), out_path);
      return kOk;
    }

    if (deliver->parsed()) {
      const xorcache::PlacementPlan plan = xorcache::make_placement(n, k);
      const xorcache::DemandVector demand(parse_demand(demand_text), n);
      const xorcache::DeliverySchedule schedule = xorcache::make_delivery(plan, demand);
      std::cout << "rate " << xorcache::format_rat(xorcache::schedule_rate(schedule)) << "\n"
                << "transmissions " << schedule.transmissions.size() << "\n";
      if (!out_path.empty()) write_json(xorcache::schedule_to_json(schedule), out_path);
      return kOk;
    }

    if (verify->parsed()) {
      const xorcache::PlacementPlan plan = xorcache::plan_from_json(read_json(plan_path));
      const xorcache::DeliverySchedule schedule =
          xorcache::schedule_from_json(read_json(schedule_path));
      require_header_match(plan.instance, n, k, "plan");
      require_header_match(schedule.instance, n, k, "schedule");
      const xorcache::DemandVector demand(parse_demand(demand_text), n);
      try {
        const xorcache::DecodeCertificate certificate =
            xorcache::verify_decodability(plan, schedule, demand);
        for (const auto& user : certificate.users) {
          std::cout << "user " << user.user << ": file " << user.file << ", "
                    << user.parts.size() << "/" << plan.instance.parts
                    << " parts decodable\n";
        }
        std::cout << "certificate complete: rate "
                  << xorcache::format_rat(xorcache::schedule_rate(schedule)) << "\n";
        if (!cert_path.empty()) write_json(xorcache::certificate_to_json(certificate), cert_path);
        return kOk;
      } catch (const xorcache::UndecodableError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerifyFailure;
      }
    }

    if (simulate->parsed()) {
      const xorcache::PlacementPlan plan = xorcache::make_placement(n, k);
      const xorcache::DemandVector demand(parse_demand(demand_text), n);
      const xorcache::DeliverySchedule schedule = xorcache::make_delivery(plan, demand);
      const xorcache::SimulationReport report =
          xorcache::simulate_payload(seed, bytes, plan, schedule, demand);
      write_json(xorcache::simulation_report_to_json(report), out_path);
      if (!report.all_ok()) {
        std::cerr << "simulation failed: at least one user is not bit-exact\n";
        return kVerifyFailure;
      }
      return kOk;
    }

    if (peak->parsed()) {
      const xorcache::PeakRateReport report = xorcache::peak_rate(n, k, budget, env_workers());
      std::cout << xorcache::format_rat(report.peak) << "\n";
      if (!out_path.empty()) write_json(xorcache::peak_report_to_json(report), out_path);
      return kOk;
    }

    if (table->parsed()) {
      if (!grid_text.empty()) {
        std::size_t start = 0;
        while (start <= grid_text.size()) {
          const std::size_t comma = grid_text.find(',', start);
          sweep.m_grid.push_back(xorcache::parse_rat(grid_text.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      if (sweep.n_min < 1 || sweep.n_max < sweep.n_min || sweep.k_max < sweep.n_min) {
        throw std::invalid_argument("empty or malformed sweep ranges");
      }
      return run_table(sweep, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
