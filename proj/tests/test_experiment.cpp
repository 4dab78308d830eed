#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qrac/experiment.hpp"

using namespace qrac;
using namespace qrac::experiment;

TEST_CASE("optics preparation") {
  // theta1 = 0 confines the photon to the a modes.
  const Ket only_a = prepare_optics_state({0.0, 10.0, 20.0, 0.0});
  CHECK(std::abs(only_a[2]) < 1e-12);
  CHECK(std::abs(only_a[3]) < 1e-12);

  const Ket hb = prepare_optics_state({45.0, 0.0, 45.0, 0.0});
  CHECK(std::abs(hb[2] - Complex{1.0}) < 1e-12);
  CHECK(std::abs(hb[0]) < 1e-12);
  CHECK(std::abs(hb[1]) < 1e-12);
  CHECK(std::abs(hb[3]) < 1e-12);
}

TEST_CASE("preparation is unit norm over an angle grid") {
  for (int t1 = -90; t1 <= 90; t1 += 1) {
    for (int t2 = -90; t2 <= 90; t2 += 15) {
      for (int t3 = -90; t3 <= 90; t3 += 15) {
        const Ket psi = prepare_optics_state({double(t1), double(t2), double(t3), 0.0});
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("ideal success is 3/4 everywhere") {
  for (int x0 = 0; x0 < 4; ++x0) {
    for (int x1 = 0; x1 < 4; ++x1) {
      CHECK(ideal_success(x0, x1, 0) == doctest::Approx(0.75).epsilon(1e-12));
      CHECK(ideal_success(x0, x1, 1) == doctest::Approx(0.75).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(ideal_success(4, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ideal_success(0, 0, 2), std::invalid_argument);
}

TEST_CASE("embedded table") {
  const auto records = embedded_table2();
  REQUIRE(records.size() == 16);
  CHECK(records[0].label == "psi00");
  CHECK(records[0].pz == doctest::Approx(0.747));
  CHECK(records[0].pz_err == doctest::Approx(0.036));
  CHECK(records[0].px == doctest::Approx(0.752));
  CHECK(records[0].px_err == doctest::Approx(0.038));
  CHECK(records[15].label == "psi33");
  CHECK(records[15].pz == doctest::Approx(0.733));
  CHECK(records[15].px == doctest::Approx(0.703));
  // The corrected psi31 angle.
  CHECK(records[13].setting.theta1_deg == doctest::Approx(-22.5));
}

TEST_CASE("parser rejects malformed input") {
  const std::string header =
      "label,x0,x1,theta1_deg,theta2_deg,theta3_deg,phi_rad,pz,pz_err,px,px_err\n";

  std::istringstream bad_prob(header + "psi00,0,0,1,2,3,0,1.2,0.01,0.5,0.01\n");
  CHECK_THROWS_WITH_AS(parse_table2(bad_prob),
                       doctest::Contains("line 2"), std::runtime_error);

  std::istringstream bad_field(header + "psi00,0,0,1,2,x,0,0.5,0.01,0.5,0.01\n");
  CHECK_THROWS_AS(parse_table2(bad_field), std::runtime_error);

  std::istringstream truncated(header + "psi00,0,0,1,2,3,0,0.5,0.01,0.5,0.01\n");
  CHECK_THROWS_AS(parse_table2(truncated), std::runtime_error);

  std::istringstream empty("");
  CHECK_THROWS_AS(parse_table2(empty), std::runtime_error);
}

TEST_CASE("serialize then parse round-trips") {
  const auto records = embedded_table2();
  std::istringstream in(serialize_table2(records));
  const auto again = parse_table2(in);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].label == records[i].label);
    CHECK(again[i].x0 == records[i].x0);
    CHECK(again[i].x1 == records[i].x1);
    CHECK(again[i].setting.theta1_deg == records[i].setting.theta1_deg);
    CHECK(again[i].setting.phi_rad == records[i].setting.phi_rad);
    CHECK(again[i].pz == records[i].pz);
    CHECK(again[i].pz_err == records[i].pz_err);
    CHECK(again[i].px == records[i].px);
    CHECK(again[i].px_err == records[i].px_err);
  }
}

TEST_CASE("analysis of the published data") {
  const auto records = embedded_table2();
  const Analysis a = analyze(records);
  CHECK(a.mean == doctest::Approx(0.754).epsilon(0.005 / 0.754));
  CHECK(a.classical_bound_violated);
  CHECK(a.consistent_with_ideal);
  REQUIRE(a.rows.size() == 16);
  for (const auto& row : a.rows) {
    CHECK(std::abs(row.deviation_z) < 0.1);
    CHECK(std::abs(row.deviation_x) < 0.1);
    CHECK(row.preparation_fidelity >= 0.0);
    CHECK(row.preparation_fidelity <= 1.0 + 1e-12);
  }

  // Pure function: same input, same report.
  const Analysis b = analyze(records);
  CHECK(a.mean == b.mean);
  CHECK(a.mean_per_row == b.mean_per_row);
  CHECK(a.mean_uncertainty == b.mean_uncertainty);

  auto fewer = records;
  fewer.pop_back();
  CHECK_THROWS_AS(analyze(fewer), std::invalid_argument);
}
