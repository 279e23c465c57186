#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pism/layout.hpp"
#include "pism/scene.hpp"

namespace pism {

/// Edge-fading amplitude panner over the speaker rings of a CICP layout.
///
/// Within an elevation ring, a direction fades between the two adjacent
/// speakers along the azimuth arc with a power-preserving cosine law;
/// for layouts with a height ring, gains fade between the two rings by
/// elevation the same way. Directions below the bed ring or above the
/// height ring collapse onto the nearest ring. The resulting gain vector
/// always satisfies sum(dr^2) = 1.
class EfapPanner {
 public:
  explicit EfapPanner(const SpeakerLayout& layout);

  /// Gains over the non-LFE speakers, in layout channel order with LFE
  /// channels skipped.
  Eigen::VectorXd gains(const ObjectMetadataFrame& direction) const;

 private:
  struct Ring {
    double elevation_deg = 0.0;
    std::vector<int> members;      // indices into the panned gain vector
    std::vector<double> azimuths;  // sorted ascending
  };

  Eigen::VectorXd ring_gains(const Ring& ring, double az) const;

  std::vector<Ring> rings_;  // sorted by elevation
  int num_panned_ = 0;
};

}  // namespace pism
