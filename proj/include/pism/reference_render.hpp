#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pism/layout.hpp"
#include "pism/panner.hpp"
#include "pism/scene.hpp"

namespace pism {

/// Direct panning of the original objects to a loudspeaker layout using
/// the unquantized metadata; the evaluation reference path. Gains are
/// interpolated per sample between frames.
class ReferenceRenderer {
 public:
  ReferenceRenderer(const SpeakerLayout& layout, int num_objects);

  /// objects: one 960-sample frame per object. Returns 960 x channels.
  Eigen::MatrixXd render_frame(const std::vector<Eigen::VectorXd>& objects,
                               const std::vector<ObjectMetadataFrame>& metadata);

  const SpeakerLayout& layout() const { return layout_; }

 private:
  SpeakerLayout layout_;
  EfapPanner panner_;
  std::vector<Eigen::VectorXd> prev_gains_;  // per object, over non-LFE speakers
  bool first_frame_ = true;
};

}  // namespace pism
