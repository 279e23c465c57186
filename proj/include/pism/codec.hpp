#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pism/bitstream.hpp"
#include "pism/downmix.hpp"
#include "pism/encoder.hpp"
#include "pism/filterbank.hpp"
#include "pism/renderer.hpp"

namespace pism {

/// Frame-by-frame encoder: analysis per object, side info, downmix.
class ParamIsmEncoder {
 public:
  ParamIsmEncoder(int num_objects, BandPartition bands);

  struct FrameOutput {
    FrameSideInfo side;
    StereoDownmix downmix;
  };

  /// objects: one 960-sample frame per object; metadata: one direction
  /// per object for this frame.
  FrameOutput encode_frame(const std::vector<Eigen::VectorXd>& objects,
                           const std::vector<ObjectMetadataFrame>& metadata);

  const BandPartition& bands() const { return bands_; }

 private:
  int num_objects_;
  BandPartition bands_;
  std::vector<EncoderAnalysis> analysis_;
  DownmixProcessor downmix_;
};

/// Frame-by-frame decoder: downmix analysis, covariance-synthesis
/// rendering, per-channel synthesis. Output is delayed by
/// kDecoderLatencySamples.
class ParamIsmDecoder {
 public:
  ParamIsmDecoder(const SpeakerLayout& layout, const BandPartition& bands);

  /// Returns one frame of output, 960 samples x num_channels (LFE
  /// channels silent).
  Eigen::MatrixXd decode_frame(const FrameSideInfo& side, const StereoDownmix& dmx);

  const SpeakerLayout& layout() const { return renderer_.layout(); }

 private:
  ParamIsmRenderer renderer_;
  DecoderAnalysis analysis_left_;
  DecoderAnalysis analysis_right_;
  std::vector<DecoderSynthesis> synthesis_;  // per non-LFE channel
};

}  // namespace pism
