#include "subrosa/patch_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace subrosa {

using Json = nlohmann::ordered_json;

std::string to_json(const PatchDocument& doc) {
  Json j;
  j["n"] = doc.patch.n();
  j["generation"] = doc.generation ? Json(*doc.generation) : Json(nullptr);
  Json tiles = Json::array();
  for (const auto& t : doc.patch.tiles()) {
    Json e;
    e["k"] = t.k;
    e["rot"] = t.rot;
    e["pos"] = std::vector<std::int64_t>(t.pos.coeffs().begin(), t.pos.coeffs().end());
    tiles.push_back(std::move(e));
  }
  j["tiles"] = std::move(tiles);
  j["meta"] = {{"tool_version", doc.tool_version},
               {"command_line", doc.command_line},
               {"tile_count", doc.patch.size()}};
  return j.dump() + "\n";
}

PatchDocument patch_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("patch document: ") + e.what());
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 2) throw std::invalid_argument("patch document: n must be >= 2");
    PatchDocument doc;
    if (!j.at("generation").is_null()) doc.generation = j.at("generation").get<int>();
    std::vector<PlacedRhombus> tiles;
    for (const auto& e : j.at("tiles")) {
      const int k = e.at("k").get<int>();
      const int rot = e.at("rot").get<int>();
      auto pos = e.at("pos").get<std::vector<std::int64_t>>();
      if (k < 1 || 2 * k > n) throw std::invalid_argument("patch document: tile k out of range");
      if (rot < 0 || rot >= 4 * n) throw std::invalid_argument("patch document: tile rot out of range");
      if (pos.size() != static_cast<std::size_t>(4 * n)) {
        throw std::invalid_argument("patch document: pos must have 4n entries");
      }
      tiles.push_back(PlacedRhombus::from_corner(n, CycloVector(std::move(pos)), rot, k));
    }
    doc.patch = Patch(n, std::move(tiles));
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      doc.tool_version = m.value("tool_version", std::string(kToolVersion));
      doc.command_line = m.value("command_line", std::string());
    }
    return doc;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("patch document: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace subrosa
