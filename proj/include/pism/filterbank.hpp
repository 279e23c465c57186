#pragma once

#include <Eigen/Dense>
#include <complex>

namespace pism {

/// Complex time-frequency grid, bins x slots, for one 20 ms frame.
using TileGrid = Eigen::MatrixXcd;

inline constexpr int kEncoderBins = 240;
inline constexpr int kEncoderSlots = 4;
inline constexpr int kDecoderBins = 60;
inline constexpr int kDecoderSlots = 16;

/// Analysis+synthesis delay of the decoder filterbank pair, in samples.
inline constexpr int kDecoderLatencySamples = 60;

/// Encoder-side analysis bank: oddly-stacked modified DFT with a sine
/// window, 50% overlap, 240-sample hop. One 960-sample frame yields a
/// 240x4 grid. Bin k is centered at (k + 0.5) * 100 Hz.
///
/// Scaled so that summed grid energy equals windowed time-domain energy
/// (the sine-squared windows overlap-add to one).
class EncoderAnalysis {
 public:
  EncoderAnalysis();

  /// frame must hold exactly 960 samples.
  TileGrid analyze(const Eigen::VectorXd& frame);

  void reset();

 private:
  Eigen::VectorXd history_;     // last 240 samples of the previous frame
  Eigen::VectorXd window_;      // 480-tap sine window
  Eigen::VectorXcd modulator_;  // half-bin frequency shift, fused with window
};

/// Decoder-side analysis bank: 60-subband complex-modulated bank with a
/// 120-tap sine-window prototype and 60-sample hop. One 960-sample frame
/// yields a 60x16 grid. Bin k is centered at k * 400 Hz; the DC and
/// Nyquist components are packed into the real and imaginary parts of
/// bin 0 so reconstruction is exact.
class DecoderAnalysis {
 public:
  DecoderAnalysis();

  TileGrid analyze(const Eigen::VectorXd& frame);

  void reset();

 private:
  Eigen::VectorXd history_;  // last 60 samples
  Eigen::VectorXd window_;   // 120-tap sine window
};

/// Inverse of DecoderAnalysis. synthesize(analyze(x)) equals x delayed by
/// kDecoderLatencySamples, to numerical precision.
class DecoderSynthesis {
 public:
  DecoderSynthesis();

  /// grid must be 60x16; returns 960 samples.
  Eigen::VectorXd synthesize(const TileGrid& grid);

  void reset();

 private:
  Eigen::VectorXd window_;
  Eigen::VectorXd carry_;  // 60-sample overlap spill into the next frame
};

}  // namespace pism
