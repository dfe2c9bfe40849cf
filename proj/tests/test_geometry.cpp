#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "wchain/geometry.hpp"
#include "wchain/intensity.hpp"
#include "wchain/state.hpp"

using namespace wchain;

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool near(const Amplitude& a, const Amplitude& b, double tol) {
  return std::abs(a - b) <= tol;
}

bool same_ket(const Ket& a, const Ket& b, double tol) {
  if (a.n_atoms() != b.n_atoms()) return false;
  Ket diff = a;
  Ket neg = b;
  neg *= -1.0;
  diff += neg;
  return diff.norm_sq() <= tol * tol;
}

}  // namespace

TEST_CASE("geometry validation") {
  CHECK_NOTHROW(ChainGeometry(1, 0.5));
  CHECK_THROWS_AS(ChainGeometry(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainGeometry(25, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainGeometry(3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ChainGeometry(3, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(DetectionDirection(std::nan("")), std::invalid_argument);
}

TEST_CASE("dipole-dipole flag tracks the spacing") {
  CHECK(ChainGeometry(4, 1.5 * kPi).dipole_dipole_negligible());
  CHECK_FALSE(ChainGeometry(4, 0.5).dipole_dipole_negligible());
  CHECK_FALSE(ChainGeometry(4, 1.0).dipole_dipole_negligible());
}

TEST_CASE("detection phase is j kd sin(theta)") {
  const ChainGeometry geom(3, 1.5 * kPi);
  const DetectionDirection straight(kPi / 2.0);
  CHECK(near(detection_phase(1, geom, straight), 1.5 * kPi, 1e-12));
  CHECK(near(detection_phase(2, geom, straight), 3.0 * kPi, 1e-12));
  CHECK(near(detection_phase(3, geom, DetectionDirection(0.0)), 0.0, 1e-15));
  CHECK_THROWS_AS(detection_phase(0, geom, straight), std::out_of_range);
  CHECK_THROWS_AS(detection_phase(4, geom, straight), std::out_of_range);
}

TEST_CASE("property: detection phase is odd and mirror symmetric") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> spacing(0.1, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const ChainGeometry geom(5, spacing(rng));
    const double theta = angle(rng);
    for (int j = 1; j <= 5; ++j) {
      const double p = detection_phase(j, geom, DetectionDirection(theta));
      CHECK(near(detection_phase(j, geom, DetectionDirection(-theta)), -p, 1e-12));
      CHECK(near(detection_phase(j, geom, DetectionDirection(kPi - theta)), p, 1e-9));
    }
  }
}

TEST_CASE("lowering acts on single configurations") {
  Ket eg(2);
  eg.add(BasisConfig::from_string("eg"), 1.0);
  const auto lowered = apply_lowering(eg, 1);
  REQUIRE(lowered.terms().size() == 1);
  CHECK(lowered.terms().begin()->first.str() == "gg");
  CHECK(near(lowered.terms().begin()->second, 1.0, 1e-15));
  CHECK(apply_lowering(eg, 2).is_zero());
  CHECK_THROWS_AS(apply_lowering(eg, 0), std::out_of_range);
  CHECK_THROWS_AS(apply_lowering(eg, 3), std::out_of_range);
}

TEST_CASE("lowering a symmetric state keeps one branch") {
  const auto w = make_symmetric_w(1, 3);
  const auto lowered = apply_lowering(w, 2);
  REQUIRE(lowered.terms().size() == 1);
  CHECK(lowered.terms().begin()->first.str() == "ggg");
  CHECK(near(lowered.terms().begin()->second, 1.0 / std::sqrt(3.0), 1e-15));
}

TEST_CASE("property: lowering twice on one atom annihilates") {
  std::mt19937 rng(171);
  for (int trial = 0; trial < 100; ++trial) {
    const auto state = gen::complex_state(rng, 6);
    for (int j = 1; j <= state.n_atoms(); ++j) {
      CHECK(apply_lowering(apply_lowering(state, j), j).is_zero());
    }
  }
}

TEST_CASE("property: lowering operators on distinct atoms commute") {
  std::mt19937 rng(172);
  for (int trial = 0; trial < 100; ++trial) {
    const auto state = gen::complex_state(rng, 6);
    const int n = state.n_atoms();
    std::uniform_int_distribution<int> pick(1, n);
    const int i = pick(rng);
    const int j = pick(rng);
    const auto ij = apply_lowering(apply_lowering(state, i), j);
    const auto ji = apply_lowering(apply_lowering(state, j), i);
    CHECK(same_ket(ij, ji, 1e-14));
  }
}

TEST_CASE("detection sum over a doubly excited pair") {
  const auto state = make_separable(2, 0);
  const ChainGeometry geom(2, 2.0);
  const DetectionDirection dir(0.7);
  const auto detected = apply_detection(state, geom, dir);
  const auto phase = [&](int j) {
    return std::exp(Amplitude(0.0, -detection_phase(j, geom, dir)));
  };
  REQUIRE(detected.terms().size() == 2);
  CHECK(near(detected.terms().at(BasisConfig::from_string("ge")), phase(1), 1e-14));
  CHECK(near(detected.terms().at(BasisConfig::from_string("eg")), phase(2), 1e-14));
  CHECK(near(detected.norm_sq(), 2.0, 1e-12));
}

TEST_CASE("antisymmetric pair is dark at theta = 0") {
  const auto singlet = make_from_spec(RawStateSpec::parse("1 eg\n-1 ge\n"));
  const auto detected = apply_detection(singlet, ChainGeometry(2, 1.5 * kPi),
                                        DetectionDirection(0.0));
  CHECK(detected.norm_sq() <= 1e-24);
}

TEST_CASE("detection amplitudes of a partial antisymmetric state") {
  // (|ege> - |eeg>)/sqrt(2): atom 1 contributes a two-term branch, atoms 2
  // and 3 interfere on the shared final configuration |egg>.
  const auto state = make_from_spec(RawStateSpec::parse("1 ege\n-1 eeg\n"));
  const ChainGeometry geom(3, 1.5 * kPi);
  const DetectionDirection dir(0.31);
  const auto detected = apply_detection(state, geom, dir);
  const auto phase = [&](int j) {
    return std::exp(Amplitude(0.0, -detection_phase(j, geom, dir)));
  };
  const double r2 = std::sqrt(2.0);
  CHECK(near(detected.terms().at(BasisConfig::from_string("gge")), phase(1) / r2, 1e-14));
  CHECK(near(detected.terms().at(BasisConfig::from_string("geg")), -phase(1) / r2, 1e-14));
  CHECK(near(detected.terms().at(BasisConfig::from_string("egg")),
             (phase(3) - phase(2)) / r2, 1e-14));
  const double phi2 = detection_phase(2, geom, dir);
  const double phi3 = detection_phase(3, geom, dir);
  CHECK(near(detected.norm_sq(), 2.0 - std::cos(phi2 - phi3), 1e-12));
}

TEST_CASE("detection requires matching chain length") {
  const auto state = make_separable(1, 1);
  CHECK_THROWS_AS(apply_detection(state, ChainGeometry(3, 2.0), DetectionDirection(0.0)),
                  std::invalid_argument);
}

TEST_CASE("property: detected intensity is bounded by N times the excitation") {
  std::mt19937 rng(300);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 150; ++trial) {
    const auto state = gen::complex_state(rng, 7);
    const int n = state.n_atoms();
    const ChainGeometry geom(n, 1.5 * kPi);
    double total_population = 0.0;
    for (int j = 1; j <= n; ++j) {
      total_population += apply_lowering(state, j).norm_sq();
    }
    const auto detected = apply_detection(state, geom, DetectionDirection(angle(rng)));
    CHECK(detected.norm_sq() <= n * total_population + 1e-9);
  }
}
