#pragma once

#include <Eigen/Dense>
#include <array>
#include <map>
#include <vector>

#include "pism/covariance_synthesis.hpp"
#include "pism/encoder.hpp"
#include "pism/filterbank.hpp"
#include "pism/layout.hpp"
#include "pism/panner.hpp"

namespace pism {

/// Power ratios from a 3-bit ratio index: r1 = index/14 + 0.5.
/// Throws on an out-of-range index.
std::pair<double, double> dequantize_ratio(int ratio_index);

/// Maps each decoder bin to a parameter band: the encoder borders divided
/// by four (floor), collided bands merged upward.
std::array<int, kDecoderBins> decoder_band_map(const BandPartition& bands);

/// Diagonal of the 2x2 input covariance for bin k, summed over the
/// frame's 16 slots.
Eigen::Vector2d input_covariance(const TileGrid& left, const TileGrid& right, int k);

/// Target covariance factor Ky (S x 2) for one bin: columns are the
/// panning gains of the band's two dominant objects scaled by
/// sqrt(r_i * P_dmx). Ky Ky^T is the rank <= 2 target covariance of
/// Eq. C_y = R E R^T form.
Eigen::MatrixXd target_covariance_factor(const Eigen::VectorXd& dr1,
                                         const Eigen::VectorXd& dr2, double r1,
                                         double r2, double p_dmx);

/// Per-frame covariance-synthesis renderer for one stream. Holds the
/// previous frame's mixing matrices for the per-slot cross-fade.
class ParamIsmRenderer {
 public:
  ParamIsmRenderer(const SpeakerLayout& layout, const BandPartition& bands);

  /// Renders one frame of decoder-domain downmix (two 60x16 grids) to
  /// one 60x16 grid per non-LFE output channel.
  std::vector<TileGrid> render(const TileGrid& dmx_left, const TileGrid& dmx_right,
                               const FrameSideInfo& side);

  const SpeakerLayout& layout() const { return layout_; }

 private:
  const Eigen::VectorXd& panner_gains(const QuantizedDirection& q);

  SpeakerLayout layout_;
  EfapPanner panner_;
  Eigen::MatrixXd prototype_;
  std::array<int, kDecoderBins> band_of_bin_;
  std::vector<Eigen::MatrixXd> prev_mix_;  // per bin, S' x 2
  bool first_frame_ = true;
  std::map<std::pair<int, int>, Eigen::VectorXd> gain_cache_;
};

}  // namespace pism
