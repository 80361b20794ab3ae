#include <doctest.h>

#include <random>

#include "xorcache/serialize.hpp"

using namespace xorcache;
using nlohmann::json;

TEST_SUITE("serialize") {

TEST_CASE("rational strings round-trip in lowest terms") {
  CHECK(format_rat(Rat(9, 4)) == "9/4");
  CHECK(format_rat(Rat(2)) == "2");
  CHECK(format_rat(Rat(0)) == "0");
  CHECK(format_rat(Rat(6, 8)) == "3/4");
  CHECK(format_rat(Rat(-3, 7)) == "-3/7");
  for (const Rat value : {Rat(9, 4), Rat(1), Rat(0), Rat(12, 5), Rat(-2, 9)}) {
    CHECK(parse_rat(format_rat(value)) == value);
  }
  CHECK(parse_rat("25/100") == Rat(1, 4));
  CHECK_THROWS_AS(parse_rat("4/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
}

TEST_CASE("plan JSON carries the documented header and round-trips") {
  const PlacementPlan plan = place_block(3, 4);
  const json j = plan_to_json(plan);
  CHECK(j.at("n_files") == 3);
  CHECK(j.at("n_users") == 4);
  CHECK(j.at("cache_size") == "1/4");
  CHECK(j.at("parts") == 12);
  CHECK(j.at("caches").size() == 4);
  CHECK(j.at("caches")[0][0] == json::array({{1, 1}, {2, 1}, {3, 1}}));

  const PlacementPlan back = plan_from_json(j);
  CHECK(back.instance == plan.instance);
  CHECK(back.caches == plan.caches);
}

TEST_CASE("schedule JSON records the demand and the exact rate") {
  const PlacementPlan plan = place_block(3, 4);
  const DemandVector demand({1, 2, 3, 1}, 3);
  const DeliverySchedule schedule = deliver_block(plan, demand);
  const json j = schedule_to_json(schedule);
  CHECK(j.at("rate") == "9/4");
  CHECK(j.at("demand") == json::array({1, 2, 3, 1}));
  CHECK(j.at("transmissions").size() == 27);

  const DeliverySchedule back = schedule_from_json(j);
  CHECK(back.instance == schedule.instance);
  CHECK(back.demand == schedule.demand);
  CHECK(back.transmissions == schedule.transmissions);
}

TEST_CASE("random schemes round-trip bit-identically") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> n_dist(1, 4);
    const int n = n_dist(rng);
    std::uniform_int_distribution<int> k_dist(n, 5);
    const int k = k_dist(rng);
    const PlacementPlan plan = make_placement(n, k);
    std::uniform_int_distribution<int> file(1, n);
    std::vector<int> entries;
    for (int u = 0; u < k; ++u) entries.push_back(file(rng));
    const DemandVector demand(entries, n);
    const DeliverySchedule schedule = make_delivery(plan, demand);

    CHECK(plan_from_json(plan_to_json(plan)).caches == plan.caches);
    const DeliverySchedule back = schedule_from_json(schedule_to_json(schedule));
    CHECK(back.transmissions == schedule.transmissions);
    CHECK(back.demand == schedule.demand);
  }
}

TEST_CASE("readers reject malformed documents") {
  const PlacementPlan plan = place_block(3, 4);
  json good = plan_to_json(plan);

  json bad = good;
  bad["parts"] = 11;
  CHECK_THROWS_AS(plan_from_json(bad), std::invalid_argument);

  bad = good;
  bad["caches"][0][0][0] = {9, 1};  // file out of range
  CHECK_THROWS_AS(plan_from_json(bad), std::invalid_argument);

  bad = good;
  bad["caches"][0][0] = json::array({{1, 1}, {1, 1}});  // duplicate term
  CHECK_THROWS_AS(plan_from_json(bad), std::invalid_argument);

  bad = good;
  bad.erase("cache_size");
  CHECK_THROWS_AS(plan_from_json(bad), std::invalid_argument);

  const DemandVector demand({1, 2, 3, 1}, 3);
  const DeliverySchedule schedule = deliver_block(plan, demand);
  json sched = schedule_to_json(schedule);
  sched["rate"] = "1/2";
  CHECK_THROWS_AS(schedule_from_json(sched), std::invalid_argument);

  sched = schedule_to_json(schedule);
  sched["demand"] = json::array({1, 2, 3});  // wrong length
  CHECK_THROWS_AS(schedule_from_json(sched), std::invalid_argument);

  sched = schedule_to_json(schedule);
  sched["demand"] = json::array({1, 2, 3, 9});  // out of range
  CHECK_THROWS_AS(schedule_from_json(sched), std::invalid_argument);
}

TEST_CASE("reports serialize rationals as strings") {
  const PeakRateReport report = peak_rate(1, 2);
  const json j = peak_report_to_json(report);
  CHECK(j.at("peak") == "1/2");
  CHECK(j.at("demands_checked") == 1);
  CHECK(j.at("worst_demands") == json::array({{1, 1}}));

  const PlacementPlan plan = place_diagonal(2);
  const DemandVector demand({1, 2}, 2);
  const DeliverySchedule schedule = deliver_diagonal(plan, demand);
  const SimulationReport sim = simulate_payload(3, 128, plan, schedule, demand);
  const json sj = simulation_report_to_json(sim);
  CHECK(sj.at("all_ok") == true);
  CHECK(sj.at("subfile_bytes") == 64);
  CHECK(sj.at("users").size() == 2);

  const DecodeCertificate cert = verify_decodability(plan, schedule, demand);
  const json cj = certificate_to_json(cert);
  CHECK(cj.at("users").size() == 2);
  CHECK(cj.at("users")[0].at("parts").size() == 2);
}

}  // TEST_SUITE
