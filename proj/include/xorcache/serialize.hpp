#pragma once

#include <json.hpp>

#include "xorcache/schemes.hpp"
#include "xorcache/verifier.hpp"

namespace xorcache {

// JSON shapes (documented in the README):
//   plan:     {n_files, n_users, cache_size:"p/q", parts, caches:[[combo...]...]}
//   schedule: {n_files, n_users, cache_size:"p/q", parts, demand:[...],
//              rate:"p/q", transmissions:[combo...]}
// where a combo is an array of [file, part] pairs. Readers validate the
// header, index ranges, and (for schedules) the recorded rate.

nlohmann::json plan_to_json(const PlacementPlan& plan);
PlacementPlan plan_from_json(const nlohmann::json& j);

nlohmann::json schedule_to_json(const DeliverySchedule& schedule);
DeliverySchedule schedule_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const DecodeCertificate& certificate);
nlohmann::json simulation_report_to_json(const SimulationReport& report);
nlohmann::json peak_report_to_json(const PeakRateReport& report);

}  // namespace xorcache
