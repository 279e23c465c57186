#include "pism/bitstream.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace pism {

namespace {

void write_u32le(std::ostream& out, std::uint32_t v) {
  const std::uint8_t b[4] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8),
                             static_cast<std::uint8_t>(v >> 16),
                             static_cast<std::uint8_t>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u16le(std::ostream& out, std::uint16_t v) {
  const std::uint8_t b[2] = {static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(v >> 8)};
  out.write(reinterpret_cast<const char*>(b), 2);
}

std::uint32_t read_u32le(std::istream& in) {
  std::uint8_t b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16le(std::istream& in) {
  std::uint8_t b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

constexpr int kHeaderBytes = 4 + 1 + 1 + 1 + 1 + 4 + 2 * (kNumBands + 1) + 4;

}  // namespace

void BitWriter::put(std::uint32_t value, int bits) {
  if (bits < 1 || bits > 32 || (bits < 32 && value >> bits))
    throw std::invalid_argument("BitWriter: value does not fit field");
  for (int i = bits - 1; i >= 0; --i) {
    if (bit_pos_ == 0) bytes_.push_back(0);
    bytes_.back() |= static_cast<std::uint8_t>(((value >> i) & 1u) << (7 - bit_pos_));
    bit_pos_ = (bit_pos_ + 1) & 7;
  }
  bits_written_ += bits;
}

std::vector<std::uint8_t> BitWriter::finish() {
  bit_pos_ = 0;
  return std::move(bytes_);
}

std::uint32_t BitReader::get(int bits) {
  std::uint32_t v = 0;
  for (int i = 0; i < bits; ++i) {
    const std::size_t byte = pos_ >> 3;
    if (byte >= bytes_.size()) throw std::runtime_error("BitReader: read past end");
    v = (v << 1) | ((bytes_[byte] >> (7 - (pos_ & 7))) & 1u);
    ++pos_;
  }
  return v;
}

void StreamHeader::validate() const {
  if (num_objects < 2 || num_objects > 4)
    throw std::runtime_error("StreamHeader: num_objects out of range");
  if (num_bands != kNumBands) throw std::runtime_error("StreamHeader: unsupported band count");
  if (downmix_bits != 16 && downmix_bits != 24)
    throw std::runtime_error("StreamHeader: downmix_bits must be 16 or 24");
  if (sample_rate != kSampleRateHz)
    throw std::runtime_error("StreamHeader: only 48 kHz is supported");
  if (band_borders.front() != 0 || band_borders.back() != kEncoderBins)
    throw std::runtime_error("StreamHeader: band borders must span [0, 240]");
  for (int l = 0; l < kNumBands; ++l)
    if (band_borders[l] >= band_borders[l + 1])
      throw std::runtime_error("StreamHeader: band borders must be strictly increasing");
}

int StreamHeader::side_info_bytes() const {
  return (side_info_bits(num_objects, num_bands) + 7) / 8;
}

int StreamHeader::frame_bytes() const {
  return side_info_bytes() + 2 * kFrameLength * (downmix_bits / 8);
}

std::vector<std::uint8_t> pack_side_info(const FrameSideInfo& side) {
  BitWriter w;
  for (const auto& b : side.bands) {
    w.put(b.idx1, 2);
    w.put(b.idx2, 2);
  }
  for (const auto& b : side.bands) w.put(b.ratio_index, 3);
  for (const auto& d : side.directions) {
    w.put(d.azimuth_index, kAzimuthBits);
    w.put(d.elevation_index, kElevationBits);
  }
  return w.finish();
}

FrameSideInfo unpack_side_info(const std::vector<std::uint8_t>& bytes, int num_objects) {
  BitReader r(bytes);
  FrameSideInfo side;
  for (auto& b : side.bands) {
    b.idx1 = static_cast<std::uint8_t>(r.get(2));
    b.idx2 = static_cast<std::uint8_t>(r.get(2));
    if (b.idx1 == b.idx2)
      throw std::runtime_error("unpack_side_info: idx1 == idx2 (corrupt stream)");
    if (b.idx1 >= num_objects || b.idx2 >= num_objects)
      throw std::runtime_error("unpack_side_info: object index out of range");
  }
  for (auto& b : side.bands) b.ratio_index = static_cast<std::uint8_t>(r.get(3));
  side.directions.resize(num_objects);
  for (auto& d : side.directions) {
    d.azimuth_index = static_cast<std::uint8_t>(r.get(kAzimuthBits));
    d.elevation_index = static_cast<std::uint8_t>(r.get(kElevationBits));
  }
  return side;
}

namespace {

std::int32_t quantize_sample(double x, int bits) {
  const double full = (1 << (bits - 1)) - 1;
  return static_cast<std::int32_t>(std::lround(std::clamp(x, -1.0, 1.0) * full));
}

void append_sample(std::vector<std::uint8_t>& out, std::int32_t v, int bits) {
  for (int i = 0; i < bits / 8; ++i)
    out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

std::int32_t read_sample(const std::uint8_t* p, int bits) {
  std::int32_t v = 0;
  for (int i = 0; i < bits / 8; ++i) v |= static_cast<std::int32_t>(p[i]) << (8 * i);
  const std::int32_t sign_bit = 1 << (bits - 1);
  if (v & sign_bit) v -= (1 << bits);
  return v;
}

}  // namespace

std::vector<std::uint8_t> pack_downmix(const StereoDownmix& dmx, int bits) {
  if (dmx.left.size() != kFrameLength || dmx.right.size() != kFrameLength)
    throw std::invalid_argument("pack_downmix: frame must hold 960 samples per channel");
  std::vector<std::uint8_t> out;
  out.reserve(2 * kFrameLength * (bits / 8));
  for (int t = 0; t < kFrameLength; ++t) {
    append_sample(out, quantize_sample(dmx.left[t], bits), bits);
    append_sample(out, quantize_sample(dmx.right[t], bits), bits);
  }
  return out;
}

StereoDownmix unpack_downmix(const std::vector<std::uint8_t>& bytes, int bits) {
  const int word = bits / 8;
  if (bytes.size() != static_cast<std::size_t>(2 * kFrameLength * word))
    throw std::runtime_error("unpack_downmix: truncated payload");
  const double full = (1 << (bits - 1)) - 1;
  StereoDownmix dmx{Eigen::VectorXd(kFrameLength), Eigen::VectorXd(kFrameLength)};
  for (int t = 0; t < kFrameLength; ++t) {
    dmx.left[t] = read_sample(&bytes[2 * t * word], bits) / full;
    dmx.right[t] = read_sample(&bytes[(2 * t + 1) * word], bits) / full;
  }
  return dmx;
}

std::vector<std::uint8_t> pack_frame(const FrameSideInfo& side, const StereoDownmix& dmx,
                                     int downmix_bits) {
  std::vector<std::uint8_t> frame = pack_side_info(side);
  std::vector<std::uint8_t> pcm = pack_downmix(dmx, downmix_bits);
  frame.insert(frame.end(), pcm.begin(), pcm.end());
  return frame;
}

int side_info_bitrate(int num_objects, int num_bands, int frame_rate) {
  return side_info_bits(num_objects, num_bands) * frame_rate;
}

PismWriter::PismWriter(const std::string& path, const StreamHeader& header)
    : out_(path, std::ios::binary), header_(header) {
  header_.validate();
  if (!out_) throw std::runtime_error("PismWriter: cannot open " + path);
  out_.write(StreamHeader::kMagic.data(), 4);
  out_.put(static_cast<char>(StreamHeader::kVersion));
  out_.put(static_cast<char>(header_.num_objects));
  out_.put(static_cast<char>(header_.num_bands));
  out_.put(static_cast<char>(header_.downmix_bits));
  write_u32le(out_, header_.sample_rate);
  for (auto b : header_.band_borders) write_u16le(out_, b);
  write_u32le(out_, 0);  // frame count, patched by finish()
}

void PismWriter::write_frame(const FrameSideInfo& side, const StereoDownmix& dmx) {
  if (side.num_objects() != header_.num_objects)
    throw std::invalid_argument("PismWriter: object count mismatch");
  const auto bytes = pack_frame(side, dmx, header_.downmix_bits);
  out_.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  ++frames_;
}

void PismWriter::finish() {
  out_.seekp(kHeaderBytes - 4);
  write_u32le(out_, frames_);
  out_.close();
  if (!out_) throw std::runtime_error("PismWriter: write failed");
}

PismReader::PismReader(const std::string& path) : in_(path, std::ios::binary) {
  if (!in_) throw std::runtime_error("PismReader: cannot open " + path);
  std::array<char, 4> magic{};
  in_.read(magic.data(), 4);
  if (!in_ || magic != StreamHeader::kMagic)
    throw std::runtime_error("PismReader: bad magic");
  if (in_.get() != StreamHeader::kVersion)
    throw std::runtime_error("PismReader: unsupported version");
  header_.num_objects = static_cast<std::uint8_t>(in_.get());
  header_.num_bands = static_cast<std::uint8_t>(in_.get());
  header_.downmix_bits = static_cast<std::uint8_t>(in_.get());
  header_.sample_rate = read_u32le(in_);
  for (auto& b : header_.band_borders) b = read_u16le(in_);
  header_.frame_count = read_u32le(in_);
  if (!in_) throw std::runtime_error("PismReader: truncated header");
  header_.validate();
}

bool PismReader::read_frame(FrameSideInfo& side, StereoDownmix& dmx) {
  if (frames_read_ >= header_.frame_count) return false;
  std::vector<std::uint8_t> side_bytes(header_.side_info_bytes());
  in_.read(reinterpret_cast<char*>(side_bytes.data()),
           static_cast<std::streamsize>(side_bytes.size()));
  std::vector<std::uint8_t> pcm(2 * kFrameLength * (header_.downmix_bits / 8));
  in_.read(reinterpret_cast<char*>(pcm.data()), static_cast<std::streamsize>(pcm.size()));
  if (!in_) {
    const auto offset = kHeaderBytes + static_cast<std::int64_t>(frames_read_) * header_.frame_bytes();
    throw std::runtime_error("PismReader: truncated frame at byte offset " +
                             std::to_string(offset));
  }
  side = unpack_side_info(side_bytes, header_.num_objects);
  dmx = unpack_downmix(pcm, header_.downmix_bits);
  ++frames_read_;
  return true;
}

}  // namespace pism
