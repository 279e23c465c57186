#pragma once

#include <cstdint>

namespace pism {

inline constexpr int kSampleRateHz = 48000;
inline constexpr int kFrameLength = 960;  // 20 ms at 48 kHz
inline constexpr int kFramesPerSecond = kSampleRateHz / kFrameLength;

inline constexpr int kAzimuthBits = 7;
inline constexpr int kElevationBits = 6;
inline constexpr int kAzimuthLevels = 1 << kAzimuthBits;        // 128
inline constexpr int kElevationLevels = 1 << kElevationBits;    // 64
inline constexpr double kAzimuthStepDeg = 360.0 / kAzimuthLevels;
inline constexpr double kElevationStepDeg = 180.0 / (kElevationLevels - 1);

/// Wraps an angle into [-180, 180).
double wrap_azimuth_deg(double az);

/// Direction of one object for one 20 ms frame.
/// Positive azimuth = left hemisphere, positive elevation = upper hemisphere.
struct ObjectMetadataFrame {
  double azimuth_deg = 0.0;    // [-180, 180)
  double elevation_deg = 0.0;  // [-90, 90]

  ObjectMetadataFrame() = default;
  ObjectMetadataFrame(double az, double el);
};

struct QuantizedDirection {
  std::uint8_t azimuth_index = 0;    // 7 bits
  std::uint8_t elevation_index = 0;  // 6 bits

  bool operator==(const QuantizedDirection&) const = default;
};

struct SceneConfig {
  int num_objects = 4;  // [2, 4]

  explicit SceneConfig(int n);
};

/// Uniform quantization of a direction: azimuth on [-180, 180) with step
/// 360/128 (wrapping), elevation on [-90, 90] with step 180/63.
/// Round to nearest, ties toward the positive index.
QuantizedDirection quantize_direction(const ObjectMetadataFrame& md);

/// Grid point for a pair of quantizer indices. Throws on out-of-range
/// indices (corrupt stream).
ObjectMetadataFrame dequantize_direction(const QuantizedDirection& q);

}  // namespace pism
