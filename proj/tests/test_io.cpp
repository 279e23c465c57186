#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "pism/eval.hpp"
#include "pism/metadata_io.hpp"
#include "pism/presets.hpp"
#include "pism/wav.hpp"

using namespace pism;

TEST_CASE("wav files round-trip mono and stereo PCM") {
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> dist(-0.8, 0.8);
  for (int channels : {1, 2, 6}) {
    Eigen::MatrixXd x(4800, channels);
    for (int t = 0; t < x.rows(); ++t)
      for (int c = 0; c < channels; ++c) x(t, c) = dist(rng);
    for (int bits : {16, 24}) {
      const std::string path = "io_test.wav";
      write_wav(path, x, kSampleRateHz, bits);
      const WavData back = read_wav(path);
      CHECK(back.sample_rate == kSampleRateHz);
      REQUIRE(back.samples.rows() == x.rows());
      REQUIRE(back.samples.cols() == channels);
      const double step = 1.0 / ((1 << (bits - 1)) - 1);
      CHECK((back.samples - x).lpNorm<Eigen::Infinity>() <= step);
      std::remove(path.c_str());
    }
  }
  CHECK_THROWS(read_wav("does_not_exist.wav"));
}

TEST_CASE("metadata csv round-trips and handles headers") {
  std::vector<ObjectMetadataFrame> rows{{30.5, -10.0}, {-170.25, 89.0}, {0.0, 0.0}};
  const std::string path = "md_test.csv";
  write_metadata_csv(path, rows);
  const auto back = read_metadata_csv(path);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].azimuth_deg == doctest::Approx(rows[i].azimuth_deg));
    CHECK(back[i].elevation_deg == doctest::Approx(rows[i].elevation_deg));
  }
  std::remove(path.c_str());

  {
    std::ofstream f(path);
    f << "azimuth_deg,elevation_deg\n45.0,15.0\n-45.0,-15.0\n";
  }
  const auto parsed = read_metadata_csv(path);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].azimuth_deg == doctest::Approx(45.0));
  CHECK(parsed[1].elevation_deg == doctest::Approx(-15.0));
  std::remove(path.c_str());
}

TEST_CASE("metadata_for_frame holds the last row") {
  std::vector<ObjectMetadataFrame> rows{{10, 0}, {20, 0}};
  CHECK(metadata_for_frame(rows, 0).azimuth_deg == 10);
  CHECK(metadata_for_frame(rows, 1).azimuth_deg == 20);
  CHECK(metadata_for_frame(rows, 99).azimuth_deg == 20);
}

TEST_CASE("scene presets cover the published geometries") {
  const auto& presets = scene_presets();
  CHECK(presets.size() == 12);
  const ScenePreset& i2 = preset_by_name("i2");
  CHECK(i2.objects[0].azimuth_start == 60.0);
  CHECK(i2.objects[1].azimuth_start == 30.0);
  CHECK(i2.objects[2].azimuth_start == -30.0);
  CHECK(i2.objects[3].azimuth_start == -60.0);
  for (const auto& t : i2.objects) {
    CHECK(t.azimuth_end == t.azimuth_start);  // static scene
    CHECK(t.elevation == 0.0);
  }
  const ScenePreset& i3 = preset_by_name("i3");
  CHECK(i3.objects[2].azimuth_start == -30.0);
  CHECK(i3.objects[2].azimuth_end == -150.0);
  CHECK(i3.objects[2].elevation == 15.0);
  CHECK_THROWS(preset_by_name("i13"));

  // A moving trajectory is linear from start to end.
  const auto traj = i3.trajectory(2, 101);
  CHECK(traj.front().azimuth_deg == doctest::Approx(-30.0));
  CHECK(traj.back().azimuth_deg == doctest::Approx(-150.0));
  CHECK(traj[50].azimuth_deg == doctest::Approx(-90.0));
}

TEST_CASE("object sources are deterministic and calibrated") {
  const Eigen::VectorXd a = make_object_source(0, 48000, 5);
  const Eigen::VectorXd b = make_object_source(0, 48000, 5);
  CHECK(a == b);
  const Eigen::VectorXd c = make_object_source(1, 48000, 5);
  CHECK(a != c);
  CHECK(std::sqrt(a.squaredNorm() / a.size()) == doctest::Approx(0.05).epsilon(1e-6));
}

TEST_CASE("evaluate reports zero error for identical signals") {
  std::mt19937 rng(83);
  std::normal_distribution<double> dist(0.0, 0.1);
  Eigen::MatrixXd x(kFrameLength * 10, 5);
  for (int t = 0; t < x.rows(); ++t)
    for (int c = 0; c < 5; ++c) x(t, c) = dist(rng);
  const EvalReport r = evaluate(x, x);
  CHECK(r.delay_samples == 0);
  CHECK(r.broadband_error_db == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.localization_fraction == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.band_error_db.rows() == 5);
  CHECK(r.band_error_db.cols() == kNumBands);
  CHECK(r.band_error_db.cwiseAbs().maxCoeff() < 1e-6);
  // JSON report is parseable and carries the headline numbers.
  const std::string json = r.to_json();
  CHECK(json.find("broadband_error_db") != std::string::npos);
  CHECK(json.find("localization_fraction") != std::string::npos);
}

TEST_CASE("evaluate measures a known level offset") {
  std::mt19937 rng(89);
  std::normal_distribution<double> dist(0.0, 0.1);
  Eigen::MatrixXd x(kFrameLength * 10, 2);
  for (int t = 0; t < x.rows(); ++t)
    for (int c = 0; c < 2; ++c) x(t, c) = dist(rng);
  const EvalReport r = evaluate(0.5 * x, x);
  CHECK(r.broadband_error_db == doctest::Approx(-6.0206).epsilon(1e-3));
  // A uniform scale does not change where the energy sits spatially.
  CHECK(r.localization_fraction == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evaluate detects a delayed copy") {
  std::mt19937 rng(97);
  std::normal_distribution<double> dist(0.0, 0.1);
  const int lag = 60;
  Eigen::MatrixXd ref(kFrameLength * 10, 3);
  for (int t = 0; t < ref.rows(); ++t)
    for (int c = 0; c < 3; ++c) ref(t, c) = dist(rng);
  Eigen::MatrixXd delayed = Eigen::MatrixXd::Zero(ref.rows(), ref.cols());
  delayed.bottomRows(ref.rows() - lag) = ref.topRows(ref.rows() - lag);
  CHECK(estimate_delay(delayed, ref) == lag);
  const EvalReport r = evaluate(delayed, ref);
  CHECK(r.delay_samples == lag);
  CHECK(std::abs(r.broadband_error_db) < 0.1);
}

TEST_CASE("evaluate penalizes swapped channels") {
  std::mt19937 rng(101);
  std::normal_distribution<double> dist(0.0, 0.1);
  Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(kFrameLength * 5, 2);
  for (int t = 0; t < ref.rows(); ++t) ref(t, 0) = dist(rng);
  Eigen::MatrixXd swapped = Eigen::MatrixXd::Zero(ref.rows(), 2);
  swapped.col(1) = ref.col(0);
  const EvalReport r = evaluate(swapped, ref);
  CHECK(r.localization_fraction == doctest::Approx(0.0).epsilon(1e-12));
}
