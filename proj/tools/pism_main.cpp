#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "pism/codec.hpp"
#include "pism/eval.hpp"
#include "pism/metadata_io.hpp"
#include "pism/presets.hpp"
#include "pism/reference_render.hpp"
#include "pism/wav.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct SceneInput {
  std::vector<Eigen::VectorXd> objects;  // equal-length mono signals
  std::vector<std::vector<pism::ObjectMetadataFrame>> metadata;
  int num_frames = 0;
};

SceneInput load_scene(const std::vector<std::string>& wav_paths,
                      const std::vector<std::string>& csv_paths) {
  if (wav_paths.size() < 2 || wav_paths.size() > 4)
    throw std::runtime_error("expected 2 to 4 input objects");
  if (csv_paths.size() != wav_paths.size())
    throw std::runtime_error("need one metadata CSV per input WAV");

  SceneInput scene;
  Eigen::Index length = -1;
  for (const auto& path : wav_paths) {
    pism::WavData wav = pism::read_wav(path);
    if (wav.sample_rate != pism::kSampleRateHz)
      throw std::runtime_error(path + ": sample rate must be 48000 Hz");
    if (wav.samples.cols() != 1)
      throw std::runtime_error(path + ": input objects must be mono");
    if (length >= 0 && wav.samples.rows() != length)
      throw std::runtime_error(path + ": input lengths differ");
    length = wav.samples.rows();
    scene.objects.push_back(wav.samples.col(0));
  }
  for (const auto& path : csv_paths) scene.metadata.push_back(pism::read_metadata_csv(path));
  scene.num_frames = static_cast<int>((length + pism::kFrameLength - 1) / pism::kFrameLength);
  return scene;
}

Eigen::VectorXd object_frame(const Eigen::VectorXd& x, int frame) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(pism::kFrameLength);
  const Eigen::Index start = static_cast<Eigen::Index>(frame) * pism::kFrameLength;
  const Eigen::Index n = std::min<Eigen::Index>(pism::kFrameLength, x.size() - start);
  if (n > 0) out.head(n) = x.segment(start, n);
  return out;
}

int run_encode(const std::vector<std::string>& wavs, const std::vector<std::string>& csvs,
               const std::string& out_path, const std::string& bands_path, int downmix_bits) {
  SceneInput scene = load_scene(wavs, csvs);
  const int num_objects = static_cast<int>(scene.objects.size());
  const pism::BandPartition bands = bands_path.empty()
                                        ? pism::BandPartition::default_partition()
                                        : pism::BandPartition::load(bands_path);

  pism::StreamHeader header;
  header.num_objects = static_cast<std::uint8_t>(num_objects);
  header.downmix_bits = static_cast<std::uint8_t>(downmix_bits);
  for (std::size_t l = 0; l < header.band_borders.size(); ++l)
    header.band_borders[l] = static_cast<std::uint16_t>(bands.borders[l]);

  const auto t0 = Clock::now();
  pism::PismWriter writer(out_path, header);
  pism::ParamIsmEncoder encoder(num_objects, bands);
  std::vector<Eigen::VectorXd> frames(num_objects);
  std::vector<pism::ObjectMetadataFrame> dirs(num_objects);
  for (int f = 0; f < scene.num_frames; ++f) {
    for (int i = 0; i < num_objects; ++i) {
      frames[i] = object_frame(scene.objects[i], f);
      dirs[i] = pism::metadata_for_frame(scene.metadata[i], f);
    }
    const auto out = encoder.encode_frame(frames, dirs);
    writer.write_frame(out.side, out.downmix);
  }
  writer.finish();

  const double elapsed = seconds_since(t0);
  const double audio_seconds = static_cast<double>(scene.num_frames) / pism::kFramesPerSecond;
  std::printf("encoded %d frames (%d objects) to %s\n", scene.num_frames, num_objects,
              out_path.c_str());
  std::printf("side-info rate: %d bit/s\n",
              pism::side_info_bitrate(num_objects, pism::kNumBands, pism::kFramesPerSecond));
  std::printf("encode realtime factor: %.1fx\n", audio_seconds / elapsed);
  return 0;
}

int run_decode(const std::string& in_path, const std::string& layout_name,
               const std::string& out_path) {
  const auto t0 = Clock::now();
  pism::PismReader reader(in_path);
  const pism::SpeakerLayout layout = pism::SpeakerLayout::from_name(layout_name);
  pism::BandPartition bands{};
  for (std::size_t l = 0; l < bands.borders.size(); ++l)
    bands.borders[l] = reader.header().band_borders[l];

  pism::ParamIsmDecoder decoder(layout, bands);
  Eigen::MatrixXd out(static_cast<Eigen::Index>(reader.header().frame_count) * pism::kFrameLength,
                      layout.num_channels());
  pism::FrameSideInfo side;
  pism::StereoDownmix dmx;
  Eigen::Index row = 0;
  while (reader.read_frame(side, dmx)) {
    out.middleRows(row, pism::kFrameLength) = decoder.decode_frame(side, dmx);
    row += pism::kFrameLength;
  }
  pism::write_wav(out_path, out, pism::kSampleRateHz);

  const double elapsed = seconds_since(t0);
  const double audio_seconds = static_cast<double>(reader.header().frame_count) /
                               pism::kFramesPerSecond;
  std::printf("decoded %u frames to %s (%d channels, layout %s)\n",
              reader.header().frame_count, out_path.c_str(), layout.num_channels(),
              layout_name.c_str());
  std::printf("filterbank latency: %d samples\n", pism::kDecoderLatencySamples);
  std::printf("decode realtime factor: %.1fx\n", audio_seconds / elapsed);
  return 0;
}

int run_reference(const std::vector<std::string>& wavs, const std::vector<std::string>& csvs,
                  const std::string& layout_name, const std::string& out_path) {
  SceneInput scene = load_scene(wavs, csvs);
  const int num_objects = static_cast<int>(scene.objects.size());
  const pism::SpeakerLayout layout = pism::SpeakerLayout::from_name(layout_name);
  pism::ReferenceRenderer renderer(layout, num_objects);

  Eigen::MatrixXd out(static_cast<Eigen::Index>(scene.num_frames) * pism::kFrameLength,
                      layout.num_channels());
  std::vector<Eigen::VectorXd> frames(num_objects);
  std::vector<pism::ObjectMetadataFrame> dirs(num_objects);
  for (int f = 0; f < scene.num_frames; ++f) {
    for (int i = 0; i < num_objects; ++i) {
      frames[i] = object_frame(scene.objects[i], f);
      dirs[i] = pism::metadata_for_frame(scene.metadata[i], f);
    }
    out.middleRows(static_cast<Eigen::Index>(f) * pism::kFrameLength, pism::kFrameLength) =
        renderer.render_frame(frames, dirs);
  }
  pism::write_wav(out_path, out, pism::kSampleRateHz);
  std::printf("rendered reference to %s (%d channels)\n", out_path.c_str(),
              layout.num_channels());
  return 0;
}

int run_eval(const std::string& decoded_path, const std::string& reference_path,
             const std::string& json_path) {
  const pism::WavData decoded = pism::read_wav(decoded_path);
  const pism::WavData reference = pism::read_wav(reference_path);
  if (decoded.sample_rate != reference.sample_rate)
    throw std::runtime_error("eval: sample rates differ");

  const pism::EvalReport report = pism::evaluate(decoded.samples, reference.samples);
  std::printf("delay: %d samples\n", report.delay_samples);
  std::printf("broadband energy error: %+.2f dB\n", report.broadband_error_db);
  std::printf("localization fraction: %.4f\n", report.localization_fraction);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report.to_json() << '\n';
    std::printf("report written to %s\n", json_path.c_str());
  }
  return 0;
}

int run_presets(const std::string& out_dir, double duration_s) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const int num_samples =
      static_cast<int>(duration_s * pism::kSampleRateHz) / pism::kFrameLength *
      pism::kFrameLength;
  const int num_frames = num_samples / pism::kFrameLength;
  for (const auto& preset : pism::scene_presets()) {
    for (int i = 0; i < 4; ++i) {
      const Eigen::VectorXd x = pism::make_object_source(i, num_samples);
      pism::write_wav((fs::path(out_dir) / (preset.name + "_obj" + std::to_string(i) + ".wav")).string(),
                      x, pism::kSampleRateHz);
      pism::write_metadata_csv(
          (fs::path(out_dir) / (preset.name + "_obj" + std::to_string(i) + ".csv")).string(),
          preset.trajectory(i, num_frames));
    }
  }
  std::printf("wrote %zu preset scenes to %s\n", pism::scene_presets().size(), out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ParamISM parametric object audio codec"};
  app.require_subcommand(1);

  std::vector<std::string> wavs, csvs;
  std::string out_path, in_path, bands_path, layout_name = "7_1_4";
  std::string decoded_path, reference_path, json_path, preset_dir = "presets";
  int downmix_bits = 24;
  double duration_s = 4.0;

  auto* encode = app.add_subcommand("encode", "Encode objects to a .pism stream");
  encode->add_option("-i,--input", wavs, "Mono 48 kHz object WAVs (2-4)")->required();
  encode->add_option("-m,--metadata", csvs, "Per-object metadata CSVs")->required();
  encode->add_option("-o,--output", out_path, "Output .pism path")->required();
  encode->add_option("--bands", bands_path, "Band-partition config (12 integers)");
  encode->add_option("--downmix-bits", downmix_bits, "Downmix PCM word size")
      ->check(CLI::IsMember({16, 24}));

  auto* decode = app.add_subcommand("decode", "Decode a .pism stream to loudspeakers");
  decode->add_option("-i,--input", in_path, "Input .pism path")->required();
  decode->add_option("--layout", layout_name, "5_1, 5_1_4, 7_1, or 7_1_4")->required();
  decode->add_option("-o,--output", out_path, "Output WAV path")->required();

  auto* reference = app.add_subcommand("reference", "Render the uncoded reference");
  reference->add_option("-i,--input", wavs, "Mono 48 kHz object WAVs (2-4)")->required();
  reference->add_option("-m,--metadata", csvs, "Per-object metadata CSVs")->required();
  reference->add_option("--layout", layout_name, "5_1, 5_1_4, 7_1, or 7_1_4")->required();
  reference->add_option("-o,--output", out_path, "Output WAV path")->required();

  auto* eval = app.add_subcommand("eval", "Compare decoded output against a reference");
  eval->add_option("--decoded", decoded_path, "Decoded WAV")->required();
  eval->add_option("--reference", reference_path, "Reference WAV")->required();
  eval->add_option("--json", json_path, "Write the report as JSON");

  auto* presets = app.add_subcommand("presets", "Materialize the evaluation scene presets");
  presets->add_option("--out", preset_dir, "Output directory");
  presets->add_option("--duration", duration_s, "Scene duration in seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode->parsed()) return run_encode(wavs, csvs, out_path, bands_path, downmix_bits);
    if (decode->parsed()) return run_decode(in_path, layout_name, out_path);
    if (reference->parsed()) return run_reference(wavs, csvs, layout_name, out_path);
    if (eval->parsed()) return run_eval(decoded_path, reference_path, json_path);
    if (presets->parsed()) return run_presets(preset_dir, duration_s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
