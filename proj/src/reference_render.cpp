#include "pism/reference_render.hpp"

#include <stdexcept>

namespace pism {

ReferenceRenderer::ReferenceRenderer(const SpeakerLayout& layout, int num_objects)
    : layout_(layout), panner_(layout), prev_gains_(num_objects) {}

Eigen::MatrixXd ReferenceRenderer::render_frame(
    const std::vector<Eigen::VectorXd>& objects,
    const std::vector<ObjectMetadataFrame>& metadata) {
  if (objects.size() != prev_gains_.size() || metadata.size() != prev_gains_.size())
    throw std::invalid_argument("ReferenceRenderer: object count mismatch");

  const auto panned = layout_.panned_indices();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(kFrameLength, layout_.num_channels());
  const Eigen::ArrayXd ramp =
      Eigen::ArrayXd::LinSpaced(kFrameLength, 1.0, static_cast<double>(kFrameLength)) /
      kFrameLength;

  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].size() != kFrameLength)
      throw std::invalid_argument("ReferenceRenderer: frame must hold 960 samples");
    const Eigen::VectorXd gains = panner_.gains(metadata[i]);
    const Eigen::VectorXd& prev = first_frame_ ? gains : prev_gains_[i];
    for (std::size_t ch = 0; ch < panned.size(); ++ch) {
      const Eigen::ArrayXd g = prev[ch] + ramp * (gains[ch] - prev[ch]);
      out.col(panned[ch]).array() += objects[i].array() * g;
    }
    prev_gains_[i] = gains;
  }
  first_frame_ = false;
  return out;
}

}  // namespace pism
