#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "pism/downmix.hpp"

using namespace pism;

namespace {

/// Independent oracle: evaluate the cardioid definition directly.
std::pair<double, double> cardioid_oracle(double az_deg) {
  const double theta = az_deg * std::numbers::pi / 180.0;
  const double wl = 0.5 + 0.5 * std::cos(theta - std::numbers::pi / 2.0);
  return {wl, 1.0 - wl};
}

}  // namespace

TEST_CASE("cardioid gains at the cardinal azimuths") {
  auto [l90, r90] = cardioid_gains(90.0);
  CHECK(l90 == doctest::Approx(1.0));
  CHECK(r90 == doctest::Approx(0.0));

  auto [lm90, rm90] = cardioid_gains(-90.0);
  CHECK(lm90 == doctest::Approx(0.0));
  CHECK(rm90 == doctest::Approx(1.0));

  auto [l0, r0] = cardioid_gains(0.0);
  CHECK(l0 == doctest::Approx(0.5));
  CHECK(r0 == doctest::Approx(0.5));

  auto [l180, r180] = cardioid_gains(180.0);
  CHECK(l180 == doctest::Approx(0.5));
  CHECK(r180 == doctest::Approx(0.5));

  auto [l30, r30] = cardioid_gains(30.0);
  CHECK(l30 == doctest::Approx(0.75));
  CHECK(r30 == doctest::Approx(0.25));
}

TEST_CASE("cardioid gains sum to one and match the oracle") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-720.0, 720.0);
  for (int i = 0; i < 100000; ++i) {
    const double az = dist(rng);
    auto [wl, wr] = cardioid_gains(az);
    CHECK(wl + wr == doctest::Approx(1.0).epsilon(1e-12));
    auto [ol, orr] = cardioid_oracle(az);
    CHECK(wl == doctest::Approx(ol).epsilon(1e-12));
    CHECK(wr == doctest::Approx(orr).epsilon(1e-12));
    CHECK(wl >= 0.0);
    CHECK(wl <= 1.0);
  }
}

TEST_CASE("mix_frame with constant gains is an exact weighted sum") {
  std::mt19937 rng(5);
  std::normal_distribution<double> dist;
  std::vector<Eigen::VectorXd> objects(2, Eigen::VectorXd(kFrameLength));
  for (auto& o : objects)
    for (int t = 0; t < kFrameLength; ++t) o(t) = dist(rng);
  std::vector<std::pair<double, double>> gains{{0.75, 0.25}, {0.25, 0.75}};
  const StereoDownmix dmx = mix_frame(objects, gains, gains);
  const Eigen::VectorXd expected_l = 0.75 * objects[0] + 0.25 * objects[1];
  const Eigen::VectorXd expected_r = 0.25 * objects[0] + 0.75 * objects[1];
  CHECK((dmx.left - expected_l).lpNorm<Eigen::Infinity>() < 1e-12);
  CHECK((dmx.right - expected_r).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("mix_frame interpolates gains linearly across the frame") {
  std::vector<Eigen::VectorXd> objects(1, Eigen::VectorXd::Ones(kFrameLength));
  std::vector<std::pair<double, double>> prev{{0.0, 1.0}};
  std::vector<std::pair<double, double>> cur{{1.0, 0.0}};
  const StereoDownmix dmx = mix_frame(objects, cur, prev);
  // Endpoint of the ramp reaches the current gain exactly; interior is
  // linear between prev and cur.
  CHECK(dmx.left(kFrameLength - 1) == doctest::Approx(1.0));
  for (int t = 0; t < kFrameLength; ++t) {
    const double a = static_cast<double>(t + 1) / kFrameLength;
    CHECK(dmx.left(t) == doctest::Approx(a).epsilon(1e-9));
    CHECK(dmx.left(t) + dmx.right(t) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("compensation gain unit cases") {
  // Two objects: the dominant pair always covers all power -> gain 1.
  {
    BandPowers P = BandPowers::Constant(2, kNumBands, 1.0);
    FrameSideInfo side;
    side.directions.resize(2);
    for (auto& b : side.bands) { b.idx1 = 0; b.idx2 = 1; }
    CHECK(compensation_gain_raw(P, side) == doctest::Approx(1.0));
  }
  // Four identical objects: pair holds half the power -> sqrt(2) pre-clamp.
  {
    BandPowers P = BandPowers::Constant(4, kNumBands, 1.0);
    FrameSideInfo side;
    side.directions.resize(4);
    for (auto& b : side.bands) { b.idx1 = 0; b.idx2 = 1; }
    CHECK(compensation_gain_raw(P, side) == doctest::Approx(std::sqrt(2.0)));
  }
  // Silence -> 1.
  {
    BandPowers P = BandPowers::Zero(3, kNumBands);
    FrameSideInfo side;
    side.directions.resize(3);
    CHECK(compensation_gain_raw(P, side) == doctest::Approx(1.0));
  }
}

TEST_CASE("compensation gain matches a direct ratio oracle") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    BandPowers P(4, kNumBands);
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < kNumBands; ++l) P(i, l) = dist(rng);
    FrameSideInfo side;
    side.directions.resize(4);
    double total = 0.0, dominant = 0.0;
    for (int l = 0; l < kNumBands; ++l) {
      auto [i1, i2] = select_dominant(P, l);
      side.bands[l].idx1 = static_cast<std::uint8_t>(i1);
      side.bands[l].idx2 = static_cast<std::uint8_t>(i2);
      total += P.col(l).sum();
      dominant += P(i1, l) + P(i2, l);
    }
    CHECK(compensation_gain_raw(P, side) ==
          doctest::Approx(std::sqrt(total / dominant)).epsilon(1e-12));
    CHECK(compensation_gain_raw(P, side) >= 1.0);
  }
}

TEST_CASE("DownmixProcessor applies gains, clamping and smoothing") {
  // One frame of a single centered object pair: no compensation needed,
  // output equals the plain cardioid mix.
  const int n = 2;
  DownmixProcessor proc(n);
  std::vector<Eigen::VectorXd> objects(n, Eigen::VectorXd::Zero(kFrameLength));
  objects[0] = Eigen::VectorXd::Ones(kFrameLength) * 0.1;
  objects[1] = Eigen::VectorXd::Ones(kFrameLength) * 0.2;
  std::vector<ObjectMetadataFrame> dirs{{90.0, 0.0}, {-90.0, 0.0}};
  BandPowers P = BandPowers::Constant(n, kNumBands, 1.0);
  FrameSideInfo side;
  side.directions.resize(n);
  for (auto& b : side.bands) { b.idx1 = 0; b.idx2 = 1; }

  const StereoDownmix dmx = proc.process(objects, dirs, P, side);
  CHECK(proc.smoothed_compensation() == doctest::Approx(1.0));
  CHECK(dmx.left(kFrameLength - 1) == doctest::Approx(0.1).epsilon(1e-6));
  CHECK(dmx.right(kFrameLength - 1) == doctest::Approx(0.2).epsilon(1e-6));

  // Energy never drops below the uncompensated mix and never exceeds
  // twice it (clamp range [1, 2]).
  DownmixProcessor proc4(4);
  std::mt19937 rng(23);
  std::normal_distribution<double> dist;
  std::vector<Eigen::VectorXd> obj4(4, Eigen::VectorXd(kFrameLength));
  std::vector<ObjectMetadataFrame> dirs4{{60, 0}, {30, 0}, {-30, 0}, {-60, 0}};
  BandPowers P4 = BandPowers::Constant(4, kNumBands, 1.0);
  FrameSideInfo side4;
  side4.directions.resize(4);
  for (auto& b : side4.bands) { b.idx1 = 0; b.idx2 = 1; }
  for (int f = 0; f < 10; ++f) {
    for (auto& o : obj4)
      for (int t = 0; t < kFrameLength; ++t) o(t) = 0.01 * dist(rng);
    const StereoDownmix d = proc4.process(obj4, dirs4, P4, side4);
    CHECK(proc4.smoothed_compensation() >= 1.0);
    CHECK(proc4.smoothed_compensation() <= 2.0);
    CHECK(d.left.size() == kFrameLength);
    CHECK(d.right.size() == kFrameLength);
  }
  // With a persistent sqrt(2) raw gain the one-pole smoother converges
  // towards sqrt(2).
  CHECK(proc4.smoothed_compensation() == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
}
