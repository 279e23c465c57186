#include "pism/downmix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pism {

std::pair<double, double> cardioid_gains(double azimuth_deg) {
  const double theta = wrap_azimuth_deg(azimuth_deg) * std::numbers::pi / 180.0;
  const double wl = 0.5 + 0.5 * std::cos(theta - std::numbers::pi / 2.0);
  return {wl, 1.0 - wl};
}

StereoDownmix mix_frame(const std::vector<Eigen::VectorXd>& objects,
                        const std::vector<std::pair<double, double>>& gains,
                        const std::vector<std::pair<double, double>>& prev_gains) {
  if (objects.size() != gains.size() || objects.size() != prev_gains.size())
    throw std::invalid_argument("mix_frame: object count mismatch");

  StereoDownmix dmx{Eigen::VectorXd::Zero(kFrameLength),
                    Eigen::VectorXd::Zero(kFrameLength)};
  Eigen::ArrayXd ramp =
      Eigen::ArrayXd::LinSpaced(kFrameLength, 1.0, static_cast<double>(kFrameLength)) /
      kFrameLength;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].size() != kFrameLength)
      throw std::invalid_argument("mix_frame: frame must hold 960 samples");
    Eigen::ArrayXd wl = prev_gains[i].first + ramp * (gains[i].first - prev_gains[i].first);
    Eigen::ArrayXd wr = prev_gains[i].second + ramp * (gains[i].second - prev_gains[i].second);
    dmx.left.array() += objects[i].array() * wl;
    dmx.right.array() += objects[i].array() * wr;
  }
  return dmx;
}

double compensation_gain_raw(const BandPowers& powers, const FrameSideInfo& side) {
  double total = powers.sum();
  double dominant = 0.0;
  for (int l = 0; l < kNumBands; ++l)
    dominant += powers(side.bands[l].idx1, l) + powers(side.bands[l].idx2, l);
  if (total <= 0.0 || dominant <= 0.0) return 1.0;
  return std::sqrt(total / dominant);
}

DownmixProcessor::DownmixProcessor(int num_objects)
    : num_objects_(num_objects), prev_gains_(num_objects, {0.5, 0.5}) {
  if (num_objects < 2 || num_objects > 4)
    throw std::invalid_argument("DownmixProcessor: num_objects must be in [2, 4]");
}

StereoDownmix DownmixProcessor::process(const std::vector<Eigen::VectorXd>& objects,
                                        const std::vector<ObjectMetadataFrame>& directions,
                                        const BandPowers& powers,
                                        const FrameSideInfo& side) {
  if (static_cast<int>(objects.size()) != num_objects_ ||
      static_cast<int>(directions.size()) != num_objects_)
    throw std::invalid_argument("DownmixProcessor: object count mismatch");

  std::vector<std::pair<double, double>> gains(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    gains[i] = cardioid_gains(directions[i].azimuth_deg);
  if (first_frame_) {
    prev_gains_ = gains;  // no ramp from the silent past
    first_frame_ = false;
  }

  StereoDownmix dmx = mix_frame(objects, gains, prev_gains_);
  prev_gains_ = gains;

  const double g = std::clamp(compensation_gain_raw(powers, side), 1.0, 2.0);
  comp_smooth_ = 0.8 * comp_smooth_ + 0.2 * g;

  Eigen::ArrayXd ramp =
      Eigen::ArrayXd::LinSpaced(kFrameLength, 1.0, static_cast<double>(kFrameLength)) /
      kFrameLength;
  Eigen::ArrayXd comp = comp_applied_prev_ + ramp * (comp_smooth_ - comp_applied_prev_);
  dmx.left.array() *= comp;
  dmx.right.array() *= comp;
  comp_applied_prev_ = comp_smooth_;
  return dmx;
}

}  // namespace pism
