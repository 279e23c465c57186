#include "pism/metadata_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pism {

std::vector<ObjectMetadataFrame> read_metadata_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_metadata_csv: cannot open " + path);
  std::vector<ObjectMetadataFrame> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double az, el;
    if (!(ss >> az >> el)) {
      if (rows.empty()) continue;  // header row
      throw std::runtime_error("read_metadata_csv: malformed row in " + path);
    }
    rows.emplace_back(az, el);
  }
  if (rows.empty()) throw std::runtime_error("read_metadata_csv: no rows in " + path);
  return rows;
}

void write_metadata_csv(const std::string& path,
                        const std::vector<ObjectMetadataFrame>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_metadata_csv: cannot open " + path);
  out << "azimuth_deg,elevation_deg\n";
  for (const auto& r : rows) out << r.azimuth_deg << ',' << r.elevation_deg << '\n';
}

const ObjectMetadataFrame& metadata_for_frame(const std::vector<ObjectMetadataFrame>& rows,
                                              int frame) {
  if (rows.empty()) throw std::invalid_argument("metadata_for_frame: empty metadata");
  const std::size_t i = std::min<std::size_t>(frame, rows.size() - 1);
  return rows[i];
}

}  // namespace pism
