#pragma once

#include <Eigen/Dense>
#include <string>

namespace pism {

struct WavData {
  int sample_rate = 0;
  Eigen::MatrixXd samples;  // frames x channels, in [-1, 1]
};

/// Reads a RIFF/WAVE file (PCM 16/24/32 bit or IEEE float 32).
WavData read_wav(const std::string& path);

/// Writes PCM RIFF/WAVE; bits is 16 or 24. Samples are clamped.
void write_wav(const std::string& path, const Eigen::MatrixXd& samples, int sample_rate,
               int bits = 24);

}  // namespace pism
