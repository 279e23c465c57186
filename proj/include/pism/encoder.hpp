#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pism/filterbank.hpp"
#include "pism/scene.hpp"

namespace pism {

inline constexpr int kNumBands = 11;

/// Band borders over the 240 encoder bins: 12 strictly increasing
/// integers, first 0, last 240, defining 11 half-open bands
/// [B(l), B(l+1)).
struct BandPartition {
  std::array<int, kNumBands + 1> borders;

  static BandPartition default_partition();
  /// Loads 12 whitespace-separated integers from a text file.
  static BandPartition load(const std::string& path);

  void validate() const;
  int band_of_bin(int k) const;
};

/// Per-object per-band summed squared magnitudes, objects x bands.
using BandPowers = Eigen::MatrixXd;

BandPowers band_powers(const std::vector<TileGrid>& grids, const BandPartition& bands);

/// Indices of the two objects with the greatest power in band l,
/// most dominant first. Ties go to the lower object index.
std::pair<int, int> select_dominant(const BandPowers& powers, int band);

/// 3-bit quantizer of r1 = P1/(P1+P2): floor(2(r1-0.5)*7), clamped to
/// [0, 7]. A zero-power band maps to index 0. Requires P1 >= P2 >= 0.
int quantize_ratio(double p1, double p2);

struct FrameSideInfo {
  struct BandParams {
    std::uint8_t idx1 = 0;  // most dominant object, 2 bits
    std::uint8_t idx2 = 1;  // second object, 2 bits
    std::uint8_t ratio_index = 0;  // 3 bits

    bool operator==(const BandParams&) const = default;
  };

  std::array<BandParams, kNumBands> bands;
  std::vector<QuantizedDirection> directions;  // one per object

  int num_objects() const { return static_cast<int>(directions.size()); }
  bool operator==(const FrameSideInfo&) const = default;
};

/// Side-information bit cost per frame: 4L + 3L + 13*num_objects.
int side_info_bits(int num_objects, int num_bands = kNumBands);

FrameSideInfo build_side_info(const std::vector<TileGrid>& grids,
                              const BandPartition& bands,
                              const std::vector<ObjectMetadataFrame>& metadata);

}  // namespace pism
