#include "pism/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pism {

double wrap_azimuth_deg(double az) {
  double w = std::fmod(az + 180.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

ObjectMetadataFrame::ObjectMetadataFrame(double az, double el)
    : azimuth_deg(wrap_azimuth_deg(az)),
      elevation_deg(std::clamp(el, -90.0, 90.0)) {}

SceneConfig::SceneConfig(int n) : num_objects(n) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("SceneConfig: num_objects must be in [2, 4]");
}

QuantizedDirection quantize_direction(const ObjectMetadataFrame& md) {
  // floor(x + 0.5) rounds ties toward the positive index.
  int ai = static_cast<int>(
      std::floor((md.azimuth_deg + 180.0) / kAzimuthStepDeg + 0.5));
  ai &= kAzimuthLevels - 1;  // index 128 wraps to -180
  int ei = static_cast<int>(
      std::floor((md.elevation_deg + 90.0) / kElevationStepDeg + 0.5));
  ei = std::clamp(ei, 0, kElevationLevels - 1);
  return {static_cast<std::uint8_t>(ai), static_cast<std::uint8_t>(ei)};
}

ObjectMetadataFrame dequantize_direction(const QuantizedDirection& q) {
  if (q.azimuth_index >= kAzimuthLevels || q.elevation_index >= kElevationLevels)
    throw std::runtime_error("dequantize_direction: index out of range (corrupt stream)");
  return ObjectMetadataFrame(-180.0 + q.azimuth_index * kAzimuthStepDeg,
                             -90.0 + q.elevation_index * kElevationStepDeg);
}

}  // namespace pism
