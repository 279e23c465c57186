#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "pism/scene.hpp"

namespace pism {

/// Evaluation scene geometry: four object trajectories. Moving objects
/// sweep linearly from start to end across the scene duration; static
/// objects have start == end.
struct ScenePreset {
  struct Trajectory {
    double azimuth_start = 0.0;
    double azimuth_end = 0.0;
    double elevation = 0.0;
  };

  std::string name;
  std::string type;
  std::array<Trajectory, 4> objects;

  /// Per-frame directions for object i over num_frames frames.
  std::vector<ObjectMetadataFrame> trajectory(int object, int num_frames) const;
};

/// The twelve evaluation-scene geometries (i1 .. i12).
const std::vector<ScenePreset>& scene_presets();

const ScenePreset& preset_by_name(const std::string& name);

/// Deterministic synthetic source for one object: a stationary multitone
/// complex emphasizing the parameter bands with index congruent to the
/// object index, over a -9 dB spectral floor in the remaining bands.
/// Distinct objects get independent phase patterns.
Eigen::VectorXd make_object_source(int object, int num_samples, unsigned seed = 1234);

}  // namespace pism
