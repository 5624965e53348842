#pragma once

// PatchDocument: the JSON file format for patches. Geometry is stored as
// integer lattice coefficients, tiles in (pos, rot, k) order.

#include <optional>
#include <string>
#include <string_view>

#include "subrosa/patch.hpp"

namespace subrosa {

inline constexpr const char* kToolVersion = "subrosa 1.0.0";

struct PatchDocument {
  std::optional<int> generation;
  Patch patch;
  std::string tool_version = kToolVersion;
  std::string command_line;
};

/// Single-line JSON followed by a newline.
std::string to_json(const PatchDocument& doc);
/// Throws std::invalid_argument on malformed input.
PatchDocument patch_from_json(std::string_view text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace subrosa
