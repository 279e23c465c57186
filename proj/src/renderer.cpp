#include "pism/renderer.hpp"

#include <stdexcept>

#include "pism/downmix.hpp"

namespace pism {

namespace {

/// Fraction of an object's power that survives the cardioid downmix:
/// wL^2 + wR^2, in [0.5, 1]. The decoder knows the transmitted azimuth,
/// so the loss can be undone when reconstructing the object powers.
double cardioid_power_loss(const QuantizedDirection& q) {
  const auto [wl, wr] = cardioid_gains(dequantize_direction(q).azimuth_deg);
  return wl * wl + wr * wr;
}

}  // namespace

std::pair<double, double> dequantize_ratio(int ratio_index) {
  if (ratio_index < 0 || ratio_index > 7)
    throw std::runtime_error("dequantize_ratio: index out of range (corrupt stream)");
  const double r1 = ratio_index / 14.0 + 0.5;
  return {r1, 1.0 - r1};
}

std::array<int, kDecoderBins> decoder_band_map(const BandPartition& bands) {
  std::array<int, kDecoderBins> map{};
  for (int k = 0; k < kDecoderBins; ++k) {
    int band = 0;
    for (int l = 0; l < kNumBands; ++l)
      if (bands.borders[l] / 4 <= k) band = l;
    map[k] = band;
  }
  return map;
}

Eigen::Vector2d input_covariance(const TileGrid& left, const TileGrid& right, int k) {
  return {left.row(k).squaredNorm(), right.row(k).squaredNorm()};
}

Eigen::MatrixXd target_covariance_factor(const Eigen::VectorXd& dr1,
                                         const Eigen::VectorXd& dr2, double r1,
                                         double r2, double p_dmx) {
  Eigen::MatrixXd ky(dr1.size(), 2);
  ky.col(0) = std::sqrt(r1 * p_dmx) * dr1;
  ky.col(1) = std::sqrt(r2 * p_dmx) * dr2;
  return ky;
}

ParamIsmRenderer::ParamIsmRenderer(const SpeakerLayout& layout, const BandPartition& bands)
    : layout_(layout),
      panner_(layout),
      prototype_(prototype_matrix(layout)),
      band_of_bin_(decoder_band_map(bands)),
      prev_mix_(kDecoderBins) {}

const Eigen::VectorXd& ParamIsmRenderer::panner_gains(const QuantizedDirection& q) {
  const auto key = std::make_pair<int, int>(q.azimuth_index, q.elevation_index);
  auto it = gain_cache_.find(key);
  if (it == gain_cache_.end())
    it = gain_cache_.emplace(key, panner_.gains(dequantize_direction(q))).first;
  return it->second;
}

std::vector<TileGrid> ParamIsmRenderer::render(const TileGrid& dmx_left,
                                               const TileGrid& dmx_right,
                                               const FrameSideInfo& side) {
  if (dmx_left.rows() != kDecoderBins || dmx_left.cols() != kDecoderSlots ||
      dmx_right.rows() != kDecoderBins || dmx_right.cols() != kDecoderSlots)
    throw std::invalid_argument("ParamIsmRenderer: grid must be 60x16");

  const int s = static_cast<int>(prototype_.rows());
  std::vector<TileGrid> out(s, TileGrid::Zero(kDecoderBins, kDecoderSlots));

  for (int k = 0; k < kDecoderBins; ++k) {
    const auto& band = side.bands[band_of_bin_[k]];
    const auto [r1, r2] = dequantize_ratio(band.ratio_index);
    const Eigen::VectorXd& dr1 = panner_gains(side.directions[band.idx1]);
    const Eigen::VectorXd& dr2 = panner_gains(side.directions[band.idx2]);

    const Eigen::Vector2d cx = input_covariance(dmx_left, dmx_right, k);
    const double p_dmx = cx.sum();
    // Reconstructed object powers: the ratio split of the downmix power,
    // reweighted by each object's cardioid loss so central objects are
    // restored to their pre-downmix level.
    const double r1_eff = r1 / cardioid_power_loss(side.directions[band.idx1]);
    const double r2_eff = r2 / cardioid_power_loss(side.directions[band.idx2]);
    const Eigen::MatrixXd ky = target_covariance_factor(dr1, dr2, r1_eff, r2_eff, p_dmx);
    Eigen::MatrixXd mix = mixing_matrix(cx, ky, prototype_);

    // The mixing matrix is designed against the diagonal input covariance,
    // but the downmix channels are correlated (every object feeds both),
    // so the realized tile energy deviates from trace(Cy). Normalize the
    // matrix against the actual tiles to make the band energy exact.
    double e_actual = 0.0;
    for (int n = 0; n < kDecoderSlots; ++n) {
      const Eigen::Vector2cd x(dmx_left(k, n), dmx_right(k, n));
      e_actual += (mix * x).squaredNorm();
    }
    const double e_target = p_dmx * (r1_eff + r2_eff);
    if (e_actual > 0.0) mix *= std::sqrt(e_target / e_actual);

    const Eigen::MatrixXd& prev = first_frame_ ? mix : prev_mix_[k];
    for (int n = 0; n < kDecoderSlots; ++n) {
      // Linear cross-fade from the previous frame's matrix over the slots.
      const double a = static_cast<double>(n + 1) / kDecoderSlots;
      const Eigen::MatrixXd m = (1.0 - a) * prev + a * mix;
      const Eigen::Vector2cd x(dmx_left(k, n), dmx_right(k, n));
      for (int ch = 0; ch < s; ++ch)
        out[ch](k, n) = m(ch, 0) * x[0] + m(ch, 1) * x[1];
    }
    prev_mix_[k] = mix;
  }
  first_frame_ = false;
  return out;
}

}  // namespace pism
