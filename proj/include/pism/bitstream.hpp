#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "pism/downmix.hpp"
#include "pism/encoder.hpp"

namespace pism {

/// MSB-first bit packer.
class BitWriter {
 public:
  void put(std::uint32_t value, int bits);
  /// Zero-pads to a byte boundary and returns the buffer.
  std::vector<std::uint8_t> finish();
  int bits_written() const { return bits_written_; }

 private:
  std::vector<std::uint8_t> bytes_;
  int bit_pos_ = 0;  // within the current byte
  int bits_written_ = 0;
};

class BitReader {
 public:
  explicit BitReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}
  std::uint32_t get(int bits);

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;  // bit position
};

struct StreamHeader {
  static constexpr std::array<char, 4> kMagic = {'P', 'I', 'S', 'M'};
  static constexpr std::uint8_t kVersion = 1;

  std::uint8_t num_objects = 4;
  std::uint8_t num_bands = kNumBands;
  std::uint8_t downmix_bits = 24;  // PCM word size: 16 or 24
  std::uint32_t sample_rate = kSampleRateHz;
  std::array<std::uint16_t, kNumBands + 1> band_borders{};
  std::uint32_t frame_count = 0;

  void validate() const;
  int side_info_bytes() const;
  int frame_bytes() const;
};

/// Packs side info to the fixed field order: per band {idx1(2), idx2(2)},
/// then per band {ratio_index(3)}, then per object {azimuth(7),
/// elevation(6)}, zero-padded to a byte boundary.
std::vector<std::uint8_t> pack_side_info(const FrameSideInfo& side);
FrameSideInfo unpack_side_info(const std::vector<std::uint8_t>& bytes, int num_objects);

/// Interleaved little-endian signed PCM for 2x960 samples.
std::vector<std::uint8_t> pack_downmix(const StereoDownmix& dmx, int bits);
StereoDownmix unpack_downmix(const std::vector<std::uint8_t>& bytes, int bits);

std::vector<std::uint8_t> pack_frame(const FrameSideInfo& side, const StereoDownmix& dmx,
                                     int downmix_bits);

/// Side-information rate in bits per second.
int side_info_bitrate(int num_objects, int num_bands, int frame_rate);

/// Writes a .pism container; finish() patches the frame count.
class PismWriter {
 public:
  PismWriter(const std::string& path, const StreamHeader& header);
  void write_frame(const FrameSideInfo& side, const StereoDownmix& dmx);
  void finish();

 private:
  std::ofstream out_;
  StreamHeader header_;
  std::uint32_t frames_ = 0;
};

class PismReader {
 public:
  explicit PismReader(const std::string& path);
  const StreamHeader& header() const { return header_; }
  /// Reads the next frame; false at end of stream. Throws on truncation
  /// or corrupt fields.
  bool read_frame(FrameSideInfo& side, StereoDownmix& dmx);

 private:
  std::ifstream in_;
  StreamHeader header_;
  std::uint32_t frames_read_ = 0;
};

}  // namespace pism
