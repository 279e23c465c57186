#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace pism {

struct Speaker {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
  bool is_lfe = false;
};

/// CICP loudspeaker setup (ISO/IEC 23091-3 channel ordering). LFE
/// channels are excluded from panning and rendered as silence.
struct SpeakerLayout {
  std::string name;
  std::vector<Speaker> speakers;

  /// name is one of 5_1, 5_1_4, 7_1, 7_1_4.
  static SpeakerLayout from_name(const std::string& name);

  int num_channels() const { return static_cast<int>(speakers.size()); }
  int num_panned() const;
  /// Indices of the non-LFE speakers in channel order.
  std::vector<int> panned_indices() const;
};

/// Default downmix-to-speaker mapping, one row per non-LFE speaker:
/// left hemisphere (az > 0) -> (1, 0), right (az < 0) -> (0, 1), center
/// and rear center (az == 0 or +-180) -> (0.5, 0.5).
Eigen::MatrixXd prototype_matrix(const SpeakerLayout& layout);

}  // namespace pism
