#include "pism/presets.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pism/encoder.hpp"

namespace pism {

std::vector<ObjectMetadataFrame> ScenePreset::trajectory(int object, int num_frames) const {
  const Trajectory& t = objects.at(object);
  std::vector<ObjectMetadataFrame> rows;
  rows.reserve(num_frames);
  for (int f = 0; f < num_frames; ++f) {
    const double a = num_frames > 1 ? static_cast<double>(f) / (num_frames - 1) : 0.0;
    rows.emplace_back(t.azimuth_start + a * (t.azimuth_end - t.azimuth_start), t.elevation);
  }
  return rows;
}

const std::vector<ScenePreset>& scene_presets() {
  static const std::vector<ScenePreset> presets = {
      {"i1", "speech", {{{0, 0, -5}, {-180, -180, -5}, {90, 90, -5}, {-90, -90, -5}}}},
      {"i2", "speech, female", {{{60, 60, 0}, {30, 30, 0}, {-30, -30, 0}, {-60, -60, 0}}}},
      {"i3", "speech", {{{0, 0, 0}, {60, 60, 0}, {-30, -150, 15}, {-45, -45, 0}}}},
      {"i4", "speech, male", {{{75, 75, 30}, {25, 25, 30}, {-25, -25, 30}, {-75, -75, 30}}}},
      {"i5", "speech", {{{45, 45, 0}, {-135, -135, 0}, {-45, -45, 0}, {135, 135, 0}}}},
      {"i6", "music", {{{100, 100, 50}, {10, 10, 50}, {-80, -80, 50}, {-170, -170, 50}}}},
      {"i7", "music", {{{90, 90, 0}, {30, 30, 0}, {-30, -30, 0}, {-90, -90, 0}}}},
      {"i8", "music, vocals", {{{0, 0, 20}, {-70, -70, 22}, {50, 50, 18}, {-20, -20, 0}}}},
      {"i9", "music", {{{20, 20, -5}, {40, 40, 20}, {-30, -30, 5}, {-45, -45, -5}}}},
      {"i10", "mixed", {{{60, -10, 19}, {-60, -60, 25}, {90, 90, -15}, {-90, -90, 0}}}},
      {"i11", "vocals", {{{10, 10, 15}, {-10, -10, 20}, {10, 10, 30}, {-10, -10, 30}}}},
      {"i12", "speech", {{{20, 20, 0}, {20, 20, 40}, {-20, -20, 0}, {-20, -20, 40}}}},
  };
  return presets;
}

const ScenePreset& preset_by_name(const std::string& name) {
  for (const auto& p : scene_presets())
    if (p.name == name) return p;
  throw std::runtime_error("preset_by_name: unknown scene " + name);
}

Eigen::VectorXd make_object_source(int object, int num_samples, unsigned seed) {
  const BandPartition bands = BandPartition::default_partition();
  std::mt19937 rng(seed + 7919u * static_cast<unsigned>(object));
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(num_samples);
  for (int l = 0; l < kNumBands; ++l) {
    const double amp = (l % 4 == object % 4) ? 1.0 : 0.2;  // -14 dB floor
    const int lo = bands.borders[l], hi = bands.borders[l + 1];
    // Tones at oddly-stacked encoder bin centers, bins assigned to
    // objects round-robin so distinct objects never share a frequency
    // and stay exactly orthogonal over one-second windows.
    for (int k = lo; k < hi; ++k) {
      if (k % 4 != object % 4) continue;
      const double freq = (k + 0.5) * 100.0;
      const double omega = 2.0 * std::numbers::pi * freq / kSampleRateHz;
      const double ph = phase(rng);
      for (int t = 0; t < num_samples; ++t) x[t] += amp * std::sin(omega * t + ph);
    }
  }
  // Normalize to RMS 0.05 so the compensated four-object downmix stays
  // clear of the PCM clip point.
  x *= 0.05 / std::sqrt(x.squaredNorm() / num_samples);
  return x;
}

}  // namespace pism
