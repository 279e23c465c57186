#include "pism/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace pism {

namespace {

std::uint32_t u32le(const std::uint8_t* p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
std::uint16_t u16le(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32le(std::vector<std::uint8_t>& v, std::uint32_t x) {
  v.push_back(static_cast<std::uint8_t>(x));
  v.push_back(static_cast<std::uint8_t>(x >> 8));
  v.push_back(static_cast<std::uint8_t>(x >> 16));
  v.push_back(static_cast<std::uint8_t>(x >> 24));
}
void put_u16le(std::vector<std::uint8_t>& v, std::uint16_t x) {
  v.push_back(static_cast<std::uint8_t>(x));
  v.push_back(static_cast<std::uint8_t>(x >> 8));
}

}  // namespace

WavData read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_wav: cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (data.size() < 44 || std::memcmp(data.data(), "RIFF", 4) != 0 ||
      std::memcmp(data.data() + 8, "WAVE", 4) != 0)
    throw std::runtime_error("read_wav: not a RIFF/WAVE file: " + path);

  int format = 0, channels = 0, bits = 0, sample_rate = 0;
  std::size_t data_pos = 0, data_len = 0;
  std::size_t pos = 12;
  while (pos + 8 <= data.size()) {
    const std::uint32_t chunk_len = u32le(&data[pos + 4]);
    if (std::memcmp(&data[pos], "fmt ", 4) == 0 && chunk_len >= 16) {
      format = u16le(&data[pos + 8]);
      channels = u16le(&data[pos + 10]);
      sample_rate = static_cast<int>(u32le(&data[pos + 12]));
      bits = u16le(&data[pos + 22]);
    } else if (std::memcmp(&data[pos], "data", 4) == 0) {
      data_pos = pos + 8;
      data_len = std::min<std::size_t>(chunk_len, data.size() - data_pos);
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }
  if (channels <= 0 || data_pos == 0)
    throw std::runtime_error("read_wav: missing fmt or data chunk: " + path);

  const bool is_float = format == 3;
  if (!(format == 1 || is_float))
    throw std::runtime_error("read_wav: unsupported format tag");
  if (is_float && bits != 32)
    throw std::runtime_error("read_wav: only 32-bit float supported");
  if (!is_float && bits != 16 && bits != 24 && bits != 32)
    throw std::runtime_error("read_wav: unsupported PCM word size");

  const int word = bits / 8;
  const std::size_t frames = data_len / (static_cast<std::size_t>(word) * channels);
  WavData wav;
  wav.sample_rate = sample_rate;
  wav.samples.resize(frames, channels);
  const std::uint8_t* p = &data[data_pos];
  for (std::size_t t = 0; t < frames; ++t) {
    for (int c = 0; c < channels; ++c, p += word) {
      double x;
      if (is_float) {
        float f;
        std::memcpy(&f, p, 4);
        x = f;
      } else {
        std::int32_t v = 0;
        for (int i = 0; i < word; ++i) v |= static_cast<std::int32_t>(p[i]) << (8 * i);
        const std::int32_t sign_bit = 1 << (bits - 1);
        if (v & sign_bit) v -= static_cast<std::int64_t>(1) << bits;
        x = v / static_cast<double>(sign_bit - 1);
      }
      wav.samples(t, c) = x;
    }
  }
  return wav;
}

void write_wav(const std::string& path, const Eigen::MatrixXd& samples, int sample_rate,
               int bits) {
  if (bits != 16 && bits != 24) throw std::invalid_argument("write_wav: bits must be 16 or 24");
  const int channels = static_cast<int>(samples.cols());
  const int word = bits / 8;
  const std::uint32_t data_len =
      static_cast<std::uint32_t>(samples.rows() * channels * word);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_len);
  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32le(out, 36 + data_len);
  out.insert(out.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32le(out, 16);
  put_u16le(out, 1);  // PCM
  put_u16le(out, static_cast<std::uint16_t>(channels));
  put_u32le(out, static_cast<std::uint32_t>(sample_rate));
  put_u32le(out, static_cast<std::uint32_t>(sample_rate * channels * word));
  put_u16le(out, static_cast<std::uint16_t>(channels * word));
  put_u16le(out, static_cast<std::uint16_t>(bits));
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32le(out, data_len);

  const double full = (1 << (bits - 1)) - 1;
  for (Eigen::Index t = 0; t < samples.rows(); ++t)
    for (int c = 0; c < channels; ++c) {
      const auto v = static_cast<std::int32_t>(
          std::lround(std::clamp(samples(t, c), -1.0, 1.0) * full));
      for (int i = 0; i < word; ++i)
        out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
    }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_wav: cannot open " + path);
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw std::runtime_error("write_wav: write failed");
}

}  // namespace pism
