#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pism/scene.hpp"

using namespace pism;

TEST_CASE("azimuth wrapping and elevation clamping on construction") {
  CHECK(ObjectMetadataFrame(180.0, 0.0).azimuth_deg == doctest::Approx(-180.0));
  CHECK(ObjectMetadataFrame(-270.0, 0.0).azimuth_deg == doctest::Approx(90.0));
  CHECK(ObjectMetadataFrame(540.0, 0.0).azimuth_deg == doctest::Approx(-180.0));
  CHECK(ObjectMetadataFrame(0.0, 95.0).elevation_deg == doctest::Approx(90.0));
  CHECK(ObjectMetadataFrame(0.0, -200.0).elevation_deg == doctest::Approx(-90.0));
}

TEST_CASE("quantize_direction at the origin") {
  const auto q = quantize_direction({0.0, 0.0});
  CHECK(q.azimuth_index == 64);
  CHECK(q.elevation_index == 32);
  const auto back = dequantize_direction(q);
  CHECK(std::abs(back.azimuth_deg - 0.0) <= kAzimuthStepDeg / 2);
  // Elevation 0 falls exactly on a quantizer tie, so the error is exactly
  // half a step; allow for rounding noise in the comparison.
  CHECK(std::abs(back.elevation_deg - 0.0) <= kElevationStepDeg / 2 + 1e-9);
}

TEST_CASE("quantize_direction at the lower grid edge") {
  const auto q = quantize_direction({-180.0, -90.0});
  CHECK(q.azimuth_index == 0);
  CHECK(q.elevation_index == 0);
}

TEST_CASE("dequantize_direction grid origin") {
  const auto md = dequantize_direction({0, 0});
  CHECK(md.azimuth_deg == doctest::Approx(-180.0));
  CHECK(md.elevation_deg == doctest::Approx(-90.0));
}

TEST_CASE("round-trip error within half a step") {
  const auto q = quantize_direction({90.0, 30.0});
  const auto back = dequantize_direction(q);
  CHECK(std::abs(back.azimuth_deg - 90.0) <= 360.0 / 128 / 2);
  CHECK(std::abs(back.elevation_deg - 30.0) <= 180.0 / 63 / 2);
}

TEST_CASE("quantize(dequantize) is the identity on all 8192 index pairs") {
  for (int a = 0; a < 128; ++a)
    for (int e = 0; e < 64; ++e) {
      const QuantizedDirection q{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(e)};
      CHECK(quantize_direction(dequantize_direction(q)) == q);
    }
}

TEST_CASE("quantization error bound over random directions") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> az(-180.0, 180.0);
  std::uniform_real_distribution<double> el(-90.0, 90.0);
  for (int i = 0; i < 10000; ++i) {
    const ObjectMetadataFrame md(az(rng), el(rng));
    const auto back = dequantize_direction(quantize_direction(md));
    double az_err = std::abs(wrap_azimuth_deg(back.azimuth_deg - md.azimuth_deg));
    CHECK(az_err <= 180.0 / 128 + 1e-12);
    CHECK(std::abs(back.elevation_deg - md.elevation_deg) <= 90.0 / 63 + 1e-12);
  }
}

TEST_CASE("dequantize_direction rejects out-of-range indices") {
  CHECK_THROWS(dequantize_direction({200, 0}));
  CHECK_THROWS(dequantize_direction({0, 100}));
}

TEST_CASE("SceneConfig validates object count") {
  CHECK_THROWS(SceneConfig(1));
  CHECK_THROWS(SceneConfig(5));
  CHECK(SceneConfig(3).num_objects == 3);
}
