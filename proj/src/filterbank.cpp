#include "pism/filterbank.hpp"

#include "pism/scene.hpp"

#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/FFT>

namespace pism {

namespace {

constexpr int kEncWin = 2 * kEncoderBins;  // 480
constexpr int kEncHop = kEncoderBins;      // 240
constexpr int kDecWin = 2 * kDecoderBins;  // 120
constexpr int kDecHop = kDecoderBins;      // 60

Eigen::VectorXd sine_window(int length) {
  Eigen::VectorXd w(length);
  for (int t = 0; t < length; ++t)
    w[t] = std::sin(std::numbers::pi * (t + 0.5) / length);
  return w;
}

}  // namespace

EncoderAnalysis::EncoderAnalysis()
    : history_(Eigen::VectorXd::Zero(kEncWin - kEncHop)),
      window_(sine_window(kEncWin)),
      modulator_(kEncWin) {
  for (int t = 0; t < kEncWin; ++t) {
    // e^{-i pi t / W} shifts the DFT grid by half a bin (odd stacking).
    modulator_[t] = window_[t] * std::polar(1.0, -std::numbers::pi * t / kEncWin);
  }
}

void EncoderAnalysis::reset() { history_.setZero(); }

TileGrid EncoderAnalysis::analyze(const Eigen::VectorXd& frame) {
  if (frame.size() != kFrameLength)
    throw std::invalid_argument("EncoderAnalysis: frame must hold 960 samples");

  Eigen::VectorXd buf(history_.size() + frame.size());
  buf << history_, frame;

  const double scale = std::sqrt(2.0 / kEncWin);
  Eigen::FFT<double> fft;
  TileGrid grid(kEncoderBins, kEncoderSlots);
  Eigen::VectorXcd seg(kEncWin), spec(kEncWin);
  for (int n = 0; n < kEncoderSlots; ++n) {
    seg = buf.segment(n * kEncHop, kEncWin).cast<std::complex<double>>().cwiseProduct(modulator_);
    fft.fwd(spec, seg);
    grid.col(n) = scale * spec.head(kEncoderBins);
  }
  history_ = frame.tail(kEncWin - kEncHop);
  return grid;
}

DecoderAnalysis::DecoderAnalysis()
    : history_(Eigen::VectorXd::Zero(kDecWin - kDecHop)),
      window_(sine_window(kDecWin)) {}

void DecoderAnalysis::reset() { history_.setZero(); }

TileGrid DecoderAnalysis::analyze(const Eigen::VectorXd& frame) {
  if (frame.size() != kFrameLength)
    throw std::invalid_argument("DecoderAnalysis: frame must hold 960 samples");

  Eigen::VectorXd buf(history_.size() + frame.size());
  buf << history_, frame;

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  TileGrid grid(kDecoderBins, kDecoderSlots);
  Eigen::VectorXd seg(kDecWin);
  Eigen::VectorXcd spec(kDecWin / 2 + 1);
  const double pair_scale = std::sqrt(2.0 / kDecWin);
  const double edge_scale = std::sqrt(1.0 / kDecWin);
  for (int n = 0; n < kDecoderSlots; ++n) {
    seg = buf.segment(n * kDecHop, kDecWin).cwiseProduct(window_);
    fft.fwd(spec, seg);
    grid.col(n) = pair_scale * spec.head(kDecoderBins);
    // DC and Nyquist are real-valued; pack them into bin 0 so the 60
    // complex bins carry the full spectrum and Parseval holds exactly.
    grid(0, n) = edge_scale *
                 std::complex<double>(spec[0].real(), spec[kDecoderBins].real());
  }
  history_ = frame.tail(kDecWin - kDecHop);
  return grid;
}

DecoderSynthesis::DecoderSynthesis()
    : window_(sine_window(kDecWin)), carry_(Eigen::VectorXd::Zero(kDecHop)) {}

void DecoderSynthesis::reset() { carry_.setZero(); }

Eigen::VectorXd DecoderSynthesis::synthesize(const TileGrid& grid) {
  if (grid.rows() != kDecoderBins || grid.cols() != kDecoderSlots)
    throw std::invalid_argument("DecoderSynthesis: grid must be 60x16");

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  Eigen::VectorXcd spec(kDecWin / 2 + 1);
  Eigen::VectorXd seg(kDecWin);
  const double pair_scale = std::sqrt(2.0 / kDecWin);
  const double edge_scale = std::sqrt(1.0 / kDecWin);

  Eigen::VectorXd acc = Eigen::VectorXd::Zero(kFrameLength + kDecHop);
  acc.head(kDecHop) = carry_;
  for (int n = 0; n < kDecoderSlots; ++n) {
    spec.head(kDecoderBins) = grid.col(n) / pair_scale;
    spec[0] = grid(0, n).real() / edge_scale;
    spec[kDecoderBins] = grid(0, n).imag() / edge_scale;
    fft.inv(seg, spec);
    acc.segment(n * kDecHop, kDecWin) += seg.cwiseProduct(window_);
  }
  carry_ = acc.tail(kDecHop);
  return acc.head(kFrameLength);
}

}  // namespace pism
