#include "pism/panner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace pism {

EfapPanner::EfapPanner(const SpeakerLayout& layout) {
  const auto panned = layout.panned_indices();
  num_panned_ = static_cast<int>(panned.size());
  if (num_panned_ < 3)
    throw std::runtime_error("EfapPanner: layout needs at least 3 non-LFE speakers");

  std::map<double, Ring> by_elevation;
  for (int r = 0; r < num_panned_; ++r) {
    const Speaker& s = layout.speakers[panned[r]];
    Ring& ring = by_elevation[s.elevation_deg];
    ring.elevation_deg = s.elevation_deg;
    ring.members.push_back(r);
    ring.azimuths.push_back(wrap_azimuth_deg(s.azimuth_deg));
  }
  for (auto& [el, ring] : by_elevation) {
    std::vector<int> order(ring.members.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ring.azimuths[a] < ring.azimuths[b]; });
    Ring sorted = ring;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.members[i] = ring.members[order[i]];
      sorted.azimuths[i] = ring.azimuths[order[i]];
    }
    rings_.push_back(std::move(sorted));
  }
}

Eigen::VectorXd EfapPanner::ring_gains(const Ring& ring, double az) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(num_panned_);
  const int m = static_cast<int>(ring.members.size());
  if (m == 1) {
    g[ring.members[0]] = 1.0;
    return g;
  }

  // Adjacent pair surrounding az on the circle, then a power-preserving
  // cosine fade along the arc between them.
  int lo = m - 1;
  for (int i = 0; i < m; ++i) {
    if (ring.azimuths[i] <= az) lo = i;
  }
  if (az < ring.azimuths.front()) lo = m - 1;
  const int hi = (lo + 1) % m;
  double span = ring.azimuths[hi] - ring.azimuths[lo];
  double offset = az - ring.azimuths[lo];
  if (span <= 0.0) span += 360.0;
  if (offset < 0.0) offset += 360.0;
  const double t = std::clamp(offset / span, 0.0, 1.0);
  g[ring.members[lo]] = std::cos(t * std::numbers::pi / 2.0);
  g[ring.members[hi]] = std::sin(t * std::numbers::pi / 2.0);
  return g;
}

Eigen::VectorXd EfapPanner::gains(const ObjectMetadataFrame& direction) const {
  const double az = direction.azimuth_deg;
  const double el = direction.elevation_deg;

  if (rings_.size() == 1 || el <= rings_.front().elevation_deg)
    return ring_gains(rings_.front(), az);
  if (el >= rings_.back().elevation_deg) return ring_gains(rings_.back(), az);

  const Ring& lower = rings_.front();
  const Ring& upper = rings_.back();
  const double f =
      (el - lower.elevation_deg) / (upper.elevation_deg - lower.elevation_deg);
  const double c = std::cos(f * std::numbers::pi / 2.0);
  const double s = std::sin(f * std::numbers::pi / 2.0);
  return c * ring_gains(lower, az) + s * ring_gains(upper, az);
}

}  // namespace pism
