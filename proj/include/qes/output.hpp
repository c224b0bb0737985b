#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qes {

/// Shortest representation that round-trips (never more than 17 significant
/// digits); "nan", "inf", "-inf" for non-finite values.
std::string format_double(double value);

/// Writes to a temporary sibling and renames it over `path`, so readers never
/// see a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns);

/// Pretty-printed JSON with a trailing newline.
std::string to_text(const nlohmann::ordered_json& j);

}  // namespace qes
