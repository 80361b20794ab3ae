#include "xorcache/serialize.hpp"

#include <stdexcept>

namespace xorcache {

namespace {

using nlohmann::json;

json combo_to_json(const Gf2Combo& combo) {
  json out = json::array();
  for (const SubfileId& id : combo.terms()) out.push_back({id.file, id.part});
  return out;
}

Gf2Combo combo_from_json(const json& j, const ProblemInstance& instance) {
  if (!j.is_array()) throw std::invalid_argument("combo must be an array of [file, part] pairs");
  std::vector<SubfileId> terms;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw std::invalid_argument("combo term must be a [file, part] pair");
    }
    const SubfileId id{pair[0].get<int>(), pair[1].get<int>()};
    if (id.file < 1 || id.file > instance.n_files || id.part < 1 || id.part > instance.parts) {
      throw std::invalid_argument("subfile " + to_string(id) + " out of range");
    }
    terms.push_back(id);
  }
  Gf2Combo combo(std::move(terms));
  if (combo.size() != j.size()) {
    throw std::invalid_argument("combo holds duplicate terms");
  }
  return combo;
}

json header_to_json(const ProblemInstance& instance) {
  return json{{"n_files", instance.n_files},
              {"n_users", instance.n_users},
              {"cache_size", format_rat(instance.cache_size)},
              {"parts", instance.parts}};
}

ProblemInstance header_from_json(const json& j) {
  for (const char* key : {"n_files", "n_users", "cache_size", "parts"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing header field ") + key);
  }
  ProblemInstance instance;
  instance.n_files = j.at("n_files").get<int>();
  instance.n_users = j.at("n_users").get<int>();
  instance.parts = j.at("parts").get<int>();
  instance.cache_size = parse_rat(j.at("cache_size").get<std::string>());
  instance.validate();
  return instance;
}

}  // namespace

json plan_to_json(const PlacementPlan& plan) {
  json out = header_to_json(plan.instance);
  json caches = json::array();
  for (const auto& cache : plan.caches) {
    json combos = json::array();
    for (const Gf2Combo& combo : cache) combos.push_back(combo_to_json(combo));
    caches.push_back(std::move(combos));
  }
  out["caches"] = std::move(caches);
  return out;
}

PlacementPlan plan_from_json(const json& j) {
  PlacementPlan plan{header_from_json(j), {}};
  const json& caches = j.at("caches");
  if (!caches.is_array() || static_cast<int>(caches.size()) != plan.instance.n_users) {
    throw std::invalid_argument("plan must hold one cache array per user");
  }
  for (const json& cache : caches) {
    std::vector<Gf2Combo> combos;
    for (const json& combo : cache) combos.push_back(combo_from_json(combo, plan.instance));
    plan.caches.push_back(std::move(combos));
  }
  return plan;
}

json schedule_to_json(const DeliverySchedule& schedule) {
  json out = header_to_json(schedule.instance);
  out["demand"] = schedule.demand;
  out["rate"] = format_rat(schedule_rate(schedule));
  json transmissions = json::array();
  for (const Gf2Combo& combo : schedule.transmissions) {
    transmissions.push_back(combo_to_json(combo));
  }
  out["transmissions"] = std::move(transmissions);
  return out;
}

DeliverySchedule schedule_from_json(const json& j) {
  DeliverySchedule schedule{header_from_json(j), {}, {}};
  // Range-checks the demand entries as a side effect.
  const DemandVector demand(j.at("demand").get<std::vector<int>>(), schedule.instance.n_files);
  if (demand.n_users() != schedule.instance.n_users) {
    throw std::invalid_argument("demand length does not match n_users");
  }
  schedule.demand = demand.entries();
  for (const json& combo : j.at("transmissions")) {
    schedule.transmissions.push_back(combo_from_json(combo, schedule.instance));
  }
  if (j.contains("rate") &&
      parse_rat(j.at("rate").get<std::string>()) != schedule_rate(schedule)) {
    throw std::invalid_argument("recorded rate does not match the transmission count");
  }
  return schedule;
}

json certificate_to_json(const DecodeCertificate& certificate) {
  json users = json::array();
  for (const UserCertificate& user : certificate.users) {
    json parts = json::array();
    for (std::size_t p = 0; p < user.parts.size(); ++p) {
      parts.push_back(json{{"part", p + 1},
                           {"cache", user.parts[p].cache_indices},
                           {"broadcast", user.parts[p].broadcast_indices}});
    }
    users.push_back(json{{"user", user.user}, {"file", user.file}, {"parts", std::move(parts)}});
  }
  return json{{"users", std::move(users)}};
}

json simulation_report_to_json(const SimulationReport& report) {
  json users = json::array();
  for (const UserReconstruction& user : report.users) {
    users.push_back(json{{"user", user.user}, {"file", user.file}, {"bit_exact", user.bit_exact}});
  }
  return json{{"subfile_bytes", report.subfile_bytes},
              {"bytes_broadcast", report.bytes_broadcast},
              {"all_ok", report.all_ok()},
              {"users", std::move(users)}};
}

json peak_report_to_json(const PeakRateReport& report) {
  json out = header_to_json(report.instance);
  out["peak"] = format_rat(report.peak);
  out["demands_checked"] = report.demands_checked;
  out["worst_demands"] = report.worst_demands;
  return out;
}

}  // namespace xorcache
