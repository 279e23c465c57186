#pragma once

#include <Eigen/Dense>
#include <string>

#include "pism/encoder.hpp"

namespace pism {

struct EvalReport {
  int delay_samples = 0;
  double broadband_error_db = 0.0;
  /// Fraction of energy placed on matching channels, in [0, 1]; 1 for
  /// identical spatial distributions.
  double localization_fraction = 0.0;
  /// channels x bands energy ratios decoded/reference in dB.
  Eigen::MatrixXd band_error_db;
  double encode_realtime_factor = 0.0;
  double decode_realtime_factor = 0.0;

  std::string to_json() const;
};

/// Delay of decoded relative to reference, estimated by cross-correlating
/// the channel sums over lags [0, max_lag].
int estimate_delay(const Eigen::MatrixXd& decoded, const Eigen::MatrixXd& reference,
                   int max_lag = 2048);

/// Compares a decoded multichannel signal against a reference of the same
/// layout. Delay-aligns internally.
EvalReport evaluate(const Eigen::MatrixXd& decoded, const Eigen::MatrixXd& reference,
                    const BandPartition& bands = BandPartition::default_partition());

}  // namespace pism
