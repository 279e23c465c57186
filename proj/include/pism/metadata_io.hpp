#pragma once

#include <string>
#include <vector>

#include "pism/scene.hpp"

namespace pism {

/// Reads per-frame metadata from a CSV file with `azimuth_deg,elevation_deg`
/// rows (an optional header row is skipped).
std::vector<ObjectMetadataFrame> read_metadata_csv(const std::string& path);

void write_metadata_csv(const std::string& path,
                        const std::vector<ObjectMetadataFrame>& rows);

/// Metadata for frame index f: rows repeat per frame and the last row is
/// held if the file is shorter than the audio.
const ObjectMetadataFrame& metadata_for_frame(const std::vector<ObjectMetadataFrame>& rows,
                                              int frame);

}  // namespace pism
