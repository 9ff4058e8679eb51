#include <doctest.h>

#include <cmath>

#include "scaler/core/errors.hpp"
#include "scaler/gripper/goat.hpp"

using namespace scaler;

namespace {
GoatParams goat() { return defaultModel().goat; }

// Virtual-work oracle: fingertip force from the numeric derivative of the
// slider travel with respect to the opening.
double virtualWorkForce(const GoatParams& g, double actuator_force, double opening) {
  auto slider = [&](double w) {
    double h = 0.5 * w;
    return std::sqrt(g.push_link_length_m * g.push_link_length_m - h * h);
  };
  double dw = 1e-7;
  double ds_dw = (slider(opening + dw) - slider(opening - dw)) / (2.0 * dw);
  return actuator_force * std::abs(ds_dw) * g.lever_ratio;
}
}  // namespace

TEST_CASE("adaptation: centered object closes symmetrically") {
  GraspAdaptation a = adaptGrasp(goat(), 0.0, 0.05);
  CHECK(a.lateral_shift_m == 0.0);
  CHECK(a.finger_position_m[0] == doctest::Approx(-0.025));
  CHECK(a.finger_position_m[1] == doctest::Approx(0.025));
}

TEST_CASE("adaptation: offset object is taken as-is with balanced forces") {
  GoatParams g = goat();
  for (double d : {-0.018, -0.004, 0.007, 0.019}) {
    GraspAdaptation a = adaptGrasp(g, d, 0.045);
    CHECK(a.lateral_shift_m == d);
    CHECK(std::abs(a.finger_force_n[0] - a.finger_force_n[1]) < 1e-9);
    CHECK(0.5 * (a.finger_position_m[0] + a.finger_position_m[1]) == doctest::Approx(d));
  }
}

TEST_CASE("adaptation: limits raise the documented errors") {
  GoatParams g = goat();
  CHECK_THROWS_AS(adaptGrasp(g, g.passive_travel_m + 1e-6, 0.05), OffsetExceedsTravel);
  CHECK_THROWS_AS(adaptGrasp(g, 0.0, g.max_opening_m + 1e-6), ObjectTooWide);
}

TEST_CASE("adaptation: cell orientations stay parallel across the whole range") {
  GoatParams g = goat();
  for (double w = g.min_opening_m + 1e-4; w < g.max_opening_m; w += 0.004) {
    for (double d = -g.passive_travel_m; d <= g.passive_travel_m; d += 0.004) {
      GraspAdaptation a = adaptGrasp(g, d, w);
      CHECK(std::abs(a.cell_orientation_rad[0] - a.cell_orientation_rad[1]) < 1e-9);
    }
  }
}

TEST_CASE("fingertip force: zero input gives zero output") {
  CHECK(fingertipForce(goat(), 0.0, 0.05) == 0.0);
}

TEST_CASE("fingertip force: calibrated to 70 N at the nominal rail opening") {
  GoatParams g = goat();
  CHECK(fingertipForce(g, g.nominal_actuator_force_n, g.nominal_opening_m) ==
        doctest::Approx(70.0).epsilon(1e-12));
}

TEST_CASE("fingertip force: agrees with the virtual-work oracle") {
  GoatParams g = goat();
  for (double w : {0.01, 0.03, 0.0508, 0.07, 0.09}) {
    for (double f : {20.0, 60.0, 100.0, 140.0}) {
      CHECK(fingertipForce(g, f, w) == doctest::Approx(virtualWorkForce(g, f, w)).epsilon(1e-5));
    }
  }
}

TEST_CASE("fingertip force: monotone non-decreasing in actuator force at fixed opening") {
  GoatParams g = goat();
  for (double w : {0.01, 0.0508, 0.09}) {
    double prev = -1.0;
    for (double f = 0.0; f <= g.actuator_force_max_n; f += 5.0) {
      double out = fingertipForce(g, f, w);
      CHECK(out >= prev);
      prev = out;
    }
    CHECK(fingertipForce(g, 2 * g.nominal_actuator_force_n, w) >
          fingertipForce(g, g.nominal_actuator_force_n, w));
  }
  CHECK_THROWS_AS(fingertipForce(g, 50.0, g.max_opening_m + 0.01), std::out_of_range);
}

TEST_CASE("grasp bound: affine, clamped and monotone") {
  GraspBound b = defaultModel().grasp_bound;
  double root = -b.intercept_n / b.slope_n_per_deg;
  if (root >= b.slope_min_deg && root <= b.slope_max_deg) {
    CHECK(maxWithstandingForce(b, root) == doctest::Approx(0.0));
  }
  // exact affinity over the valid range
  double s0 = b.slope_min_deg, s1 = 0.5 * (b.slope_min_deg + b.slope_max_deg);
  double f0 = maxWithstandingForce(b, s0), f1 = maxWithstandingForce(b, s1);
  double predicted = f0 + (f1 - f0) * 2.0;
  double clamped = std::max(0.0, b.intercept_n + b.slope_n_per_deg * (s0 + 2 * (s1 - s0)));
  CHECK(maxWithstandingForce(b, s0 + 2 * (s1 - s0)) == doctest::Approx(clamped));
  if (clamped > 0.0) CHECK(maxWithstandingForce(b, s0 + 2 * (s1 - s0)) == doctest::Approx(predicted));
  // monotone for a negative slope coefficient
  CHECK(b.slope_n_per_deg < 0.0);
  CHECK(maxWithstandingForce(b, 5.0) > maxWithstandingForce(b, 15.0));
  CHECK_THROWS_AS(maxWithstandingForce(b, b.slope_max_deg + 1.0), std::out_of_range);
}

TEST_CASE("spine cells: no engagement without preload, saturating monotone capacity") {
  SpineCellParams sc = defaultModel().spine_cells;
  CHECK(spineShearCapacity(sc, 0.0) == 0.0);
  double prev = -1.0;
  for (double n = 0.0; n <= 200.0; n += 2.5) {
    double cap = spineShearCapacity(sc, n);
    CHECK(cap >= prev);
    CHECK(engagedFraction(sc, n) <= 1.0);
    prev = cap;
  }
}

TEST_CASE("spine cells: four cells at the 70 N preload hold the climbing weight") {
  SpineCellParams sc = defaultModel().spine_cells;
  double combined = 4.0 * spineShearCapacity(sc, 70.0);
  CHECK(combined >= 9.6 * 9.81);  // ceiling support with two grippers
}

TEST_CASE("gripper timing: linear in stroke fraction") {
  GoatParams g = goat();
  CHECK(gripperStrokeTime(g, 1.0) == doctest::Approx(8.0));
  CHECK(gripperStrokeTime(g, 0.0) == 0.0);
  CHECK(gripperStrokeTime(g, 0.5) == doctest::Approx(4.0));
  CHECK_THROWS_AS(gripperStrokeTime(g, 1.2), std::invalid_argument);
}
