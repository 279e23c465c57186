#include "pism/eval.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "pism/filterbank.hpp"
#include "pism/renderer.hpp"

namespace pism {

namespace {

constexpr double kEnergyFloor = 1e-12;

double to_db(double ratio) { return 10.0 * std::log10(ratio); }

/// Per-band energies of one channel via the decoder analysis bank,
/// accumulated over whole frames (plus one zero flush frame).
Eigen::VectorXd channel_band_energy(const Eigen::VectorXd& x,
                                    const std::array<int, kDecoderBins>& band_map) {
  DecoderAnalysis analysis;
  Eigen::VectorXd bands = Eigen::VectorXd::Zero(kNumBands);
  const int num_frames = static_cast<int>(x.size()) / kFrameLength;
  for (int f = 0; f <= num_frames; ++f) {
    Eigen::VectorXd frame = Eigen::VectorXd::Zero(kFrameLength);
    if (f < num_frames) frame = x.segment(static_cast<Eigen::Index>(f) * kFrameLength, kFrameLength);
    const TileGrid grid = analysis.analyze(frame);
    for (int k = 0; k < kDecoderBins; ++k) bands[band_map[k]] += grid.row(k).squaredNorm();
  }
  return bands;
}

}  // namespace

int estimate_delay(const Eigen::MatrixXd& decoded, const Eigen::MatrixXd& reference,
                   int max_lag) {
  const Eigen::VectorXd d = decoded.rowwise().sum();
  const Eigen::VectorXd r = reference.rowwise().sum();
  const int n = static_cast<int>(std::min(d.size(), r.size()));
  int best_lag = 0;
  double best = -1.0;
  for (int lag = 0; lag <= std::min(max_lag, n - 1); ++lag) {
    const double c = std::abs(d.segment(lag, n - lag).dot(r.head(n - lag)));
    if (c > best) {
      best = c;
      best_lag = lag;
    }
  }
  return best_lag;
}

EvalReport evaluate(const Eigen::MatrixXd& decoded, const Eigen::MatrixXd& reference,
                    const BandPartition& bands) {
  if (decoded.cols() != reference.cols())
    throw std::invalid_argument("evaluate: channel layout mismatch");

  EvalReport report;
  report.delay_samples = estimate_delay(decoded, reference);
  const int n = static_cast<int>(
      std::min<Eigen::Index>(decoded.rows() - report.delay_samples, reference.rows()));
  const Eigen::MatrixXd d = decoded.middleRows(report.delay_samples, n);
  const Eigen::MatrixXd r = reference.topRows(n);
  const int channels = static_cast<int>(d.cols());

  const double ed = d.squaredNorm(), er = r.squaredNorm();
  report.broadband_error_db = to_db((ed + kEnergyFloor) / (er + kEnergyFloor));

  // Overlap of the per-channel energy distributions.
  Eigen::VectorXd fd(channels), fr(channels);
  for (int c = 0; c < channels; ++c) {
    fd[c] = d.col(c).squaredNorm() / std::max(ed, kEnergyFloor);
    fr[c] = r.col(c).squaredNorm() / std::max(er, kEnergyFloor);
  }
  if (ed <= kEnergyFloor && er <= kEnergyFloor)
    report.localization_fraction = 1.0;
  else
    report.localization_fraction = fd.cwiseMin(fr).sum();

  const auto band_map = decoder_band_map(bands);
  report.band_error_db.resize(channels, kNumBands);
  for (int c = 0; c < channels; ++c) {
    const Eigen::VectorXd bd = channel_band_energy(d.col(c), band_map);
    const Eigen::VectorXd br = channel_band_energy(r.col(c), band_map);
    for (int l = 0; l < kNumBands; ++l)
      report.band_error_db(c, l) = to_db((bd[l] + kEnergyFloor) / (br[l] + kEnergyFloor));
  }
  return report;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  j["delay_samples"] = delay_samples;
  j["broadband_error_db"] = broadband_error_db;
  j["localization_fraction"] = localization_fraction;
  j["encode_realtime_factor"] = encode_realtime_factor;
  j["decode_realtime_factor"] = decode_realtime_factor;
  auto& bands = j["band_error_db"];
  for (int c = 0; c < band_error_db.rows(); ++c) {
    nlohmann::json row = nlohmann::json::array();
    for (int l = 0; l < band_error_db.cols(); ++l) row.push_back(band_error_db(c, l));
    bands.push_back(row);
  }
  return j.dump(2);
}

}  // namespace pism
