#include "pism/layout.hpp"

#include <cmath>
#include <stdexcept>

namespace pism {

SpeakerLayout SpeakerLayout::from_name(const std::string& name) {
  // CICP 6 / 16 / 12 / 19 angle tables; heights at 35 degrees elevation.
  if (name == "5_1")
    return {name,
            {{30, 0, false},
             {-30, 0, false},
             {0, 0, false},
             {0, 0, true},
             {110, 0, false},
             {-110, 0, false}}};
  if (name == "5_1_4")
    return {name,
            {{30, 0, false},
             {-30, 0, false},
             {0, 0, false},
             {0, 0, true},
             {110, 0, false},
             {-110, 0, false},
             {30, 35, false},
             {-30, 35, false},
             {110, 35, false},
             {-110, 35, false}}};
  if (name == "7_1")
    return {name,
            {{30, 0, false},
             {-30, 0, false},
             {0, 0, false},
             {0, 0, true},
             {90, 0, false},
             {-90, 0, false},
             {135, 0, false},
             {-135, 0, false}}};
  if (name == "7_1_4")
    return {name,
            {{30, 0, false},
             {-30, 0, false},
             {0, 0, false},
             {0, 0, true},
             {90, 0, false},
             {-90, 0, false},
             {135, 0, false},
             {-135, 0, false},
             {45, 35, false},
             {-45, 35, false},
             {135, 35, false},
             {-135, 35, false}}};
  throw std::runtime_error("SpeakerLayout: unknown layout " + name);
}

int SpeakerLayout::num_panned() const {
  int n = 0;
  for (const auto& s : speakers) n += s.is_lfe ? 0 : 1;
  return n;
}

std::vector<int> SpeakerLayout::panned_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < num_channels(); ++i)
    if (!speakers[i].is_lfe) idx.push_back(i);
  return idx;
}

Eigen::MatrixXd prototype_matrix(const SpeakerLayout& layout) {
  const auto panned = layout.panned_indices();
  Eigen::MatrixXd q(panned.size(), 2);
  for (std::size_t r = 0; r < panned.size(); ++r) {
    const double az = layout.speakers[panned[r]].azimuth_deg;
    if (std::abs(az) < 1e-9 || std::abs(std::abs(az) - 180.0) < 1e-9)
      q.row(r) << 0.5, 0.5;
    else if (az > 0.0)
      q.row(r) << 1.0, 0.0;
    else
      q.row(r) << 0.0, 1.0;
  }
  return q;
}

}  // namespace pism
