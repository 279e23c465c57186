#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "pism/encoder.hpp"
#include "pism/scene.hpp"

namespace pism {

/// Two time-domain downmix channels for one 20 ms frame.
struct StereoDownmix {
  Eigen::VectorXd left;
  Eigen::VectorXd right;
};

/// Cardioid downmix gains for one object: wL = 0.5 + 0.5 cos(theta - pi/2)
/// with the cardioids oriented towards +90 (left) and -90 (right).
/// wL + wR = 1 for every azimuth.
std::pair<double, double> cardioid_gains(double azimuth_deg);

/// Sums the gain-weighted objects into two channels. Per-sample gains are
/// interpolated linearly from prev_gains to gains across the frame.
StereoDownmix mix_frame(const std::vector<Eigen::VectorXd>& objects,
                        const std::vector<std::pair<double, double>>& gains,
                        const std::vector<std::pair<double, double>>& prev_gains);

/// Pre-clamp broadband compensation gain for one frame:
/// sqrt(total object power / power of the per-band dominant pairs).
/// An all-zero frame yields 1.
double compensation_gain_raw(const BandPowers& powers, const FrameSideInfo& side);

/// Stateful per-stream downmix stage: cardioid mixing with inter-frame
/// gain interpolation, plus broadband energy compensation (gain clamped
/// to [1, 2], one-pole smoothed with coefficient 0.8, interpolated
/// per-sample across the frame).
class DownmixProcessor {
 public:
  explicit DownmixProcessor(int num_objects);

  /// directions must already be dequantized so the encoder applies the
  /// same gains the decoder will reconstruct from the bitstream.
  StereoDownmix process(const std::vector<Eigen::VectorXd>& objects,
                        const std::vector<ObjectMetadataFrame>& directions,
                        const BandPowers& powers, const FrameSideInfo& side);

  double smoothed_compensation() const { return comp_smooth_; }

 private:
  int num_objects_;
  bool first_frame_ = true;
  std::vector<std::pair<double, double>> prev_gains_;
  double comp_smooth_ = 1.0;
  double comp_applied_prev_ = 1.0;
};

}  // namespace pism
