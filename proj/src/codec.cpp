#include "pism/codec.hpp"

#include <stdexcept>

namespace pism {

ParamIsmEncoder::ParamIsmEncoder(int num_objects, BandPartition bands)
    : num_objects_(num_objects), bands_(bands), downmix_(num_objects) {
  bands_.validate();
  analysis_.resize(num_objects);
}

ParamIsmEncoder::FrameOutput ParamIsmEncoder::encode_frame(
    const std::vector<Eigen::VectorXd>& objects,
    const std::vector<ObjectMetadataFrame>& metadata) {
  if (static_cast<int>(objects.size()) != num_objects_ ||
      static_cast<int>(metadata.size()) != num_objects_)
    throw std::invalid_argument("ParamIsmEncoder: object count mismatch");

  std::vector<TileGrid> grids;
  grids.reserve(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i)
    grids.push_back(analysis_[i].analyze(objects[i]));

  FrameOutput out;
  out.side = build_side_info(grids, bands_, metadata);

  // The mixer sees the dequantized directions so encoder and decoder agree.
  std::vector<ObjectMetadataFrame> decoded_dirs;
  decoded_dirs.reserve(out.side.directions.size());
  for (const auto& q : out.side.directions) decoded_dirs.push_back(dequantize_direction(q));

  const BandPowers powers = band_powers(grids, bands_);
  out.downmix = downmix_.process(objects, decoded_dirs, powers, out.side);
  return out;
}

ParamIsmDecoder::ParamIsmDecoder(const SpeakerLayout& layout, const BandPartition& bands)
    : renderer_(layout, bands), synthesis_(layout.num_panned()) {}

Eigen::MatrixXd ParamIsmDecoder::decode_frame(const FrameSideInfo& side,
                                              const StereoDownmix& dmx) {
  const TileGrid left = analysis_left_.analyze(dmx.left);
  const TileGrid right = analysis_right_.analyze(dmx.right);
  const std::vector<TileGrid> rendered = renderer_.render(left, right, side);

  const auto& layout = renderer_.layout();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(kFrameLength, layout.num_channels());
  const auto panned = layout.panned_indices();
  for (std::size_t ch = 0; ch < panned.size(); ++ch)
    out.col(panned[ch]) = synthesis_[ch].synthesize(rendered[ch]);
  return out;
}

}  // namespace pism
