#include "pism/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace pism {

BandPartition BandPartition::default_partition() {
  // Approximately logarithmic split of the 240 encoder bins.
  return BandPartition{{0, 2, 4, 7, 11, 17, 26, 40, 61, 93, 142, 240}};
}

BandPartition BandPartition::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("BandPartition: cannot open " + path);
  BandPartition p{};
  for (auto& b : p.borders)
    if (!(in >> b)) throw std::runtime_error("BandPartition: expected 12 integers in " + path);
  p.validate();
  return p;
}

void BandPartition::validate() const {
  if (borders.front() != 0 || borders.back() != kEncoderBins)
    throw std::runtime_error("BandPartition: borders must start at 0 and end at 240");
  for (int l = 0; l < kNumBands; ++l)
    if (borders[l] >= borders[l + 1])
      throw std::runtime_error("BandPartition: borders must be strictly increasing");
}

int BandPartition::band_of_bin(int k) const {
  for (int l = kNumBands - 1; l >= 0; --l)
    if (k >= borders[l]) return l;
  throw std::out_of_range("BandPartition: bin index out of range");
}

BandPowers band_powers(const std::vector<TileGrid>& grids, const BandPartition& bands) {
  if (grids.empty()) throw std::invalid_argument("band_powers: no grids");
  for (const auto& g : grids)
    if (g.rows() != kEncoderBins || g.cols() != kEncoderSlots)
      throw std::invalid_argument("band_powers: grid geometry mismatch");

  const int num_objects = static_cast<int>(grids.size());
  BandPowers P = BandPowers::Zero(num_objects, kNumBands);
  for (int i = 0; i < num_objects; ++i)
    for (int l = 0; l < kNumBands; ++l)
      P(i, l) = grids[i]
                    .middleRows(bands.borders[l], bands.borders[l + 1] - bands.borders[l])
                    .squaredNorm();
  return P;
}

std::pair<int, int> select_dominant(const BandPowers& powers, int band) {
  const int n = static_cast<int>(powers.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return powers(a, band) > powers(b, band);
  });
  return {order[0], order[1]};
}

int quantize_ratio(double p1, double p2) {
  if (p1 < 0.0 || p2 < 0.0) throw std::invalid_argument("quantize_ratio: negative power");
  if (p2 > p1) throw std::invalid_argument("quantize_ratio: requires P1 >= P2");
  const double sum = p1 + p2;
  const double r1 = sum > 0.0 ? p1 / sum : 0.5;
  // The epsilon keeps the reconstruction levels idx/14 + 0.5 fixed points
  // of the quantizer despite floating-point rounding in r1.
  const int idx = static_cast<int>(std::floor(2.0 * (r1 - 0.5) * 7.0 + 1e-9));
  return std::clamp(idx, 0, 7);
}

int side_info_bits(int num_objects, int num_bands) {
  return 4 * num_bands + 3 * num_bands + (kAzimuthBits + kElevationBits) * num_objects;
}

FrameSideInfo build_side_info(const std::vector<TileGrid>& grids,
                              const BandPartition& bands,
                              const std::vector<ObjectMetadataFrame>& metadata) {
  if (grids.size() != metadata.size())
    throw std::invalid_argument("build_side_info: object count mismatch");

  const BandPowers P = band_powers(grids, bands);
  FrameSideInfo side;
  for (int l = 0; l < kNumBands; ++l) {
    auto [i1, i2] = select_dominant(P, l);
    side.bands[l].idx1 = static_cast<std::uint8_t>(i1);
    side.bands[l].idx2 = static_cast<std::uint8_t>(i2);
    side.bands[l].ratio_index =
        static_cast<std::uint8_t>(quantize_ratio(P(i1, l), P(i2, l)));
  }
  side.directions.reserve(metadata.size());
  for (const auto& md : metadata) side.directions.push_back(quantize_direction(md));
  return side;
}

}  // namespace pism
