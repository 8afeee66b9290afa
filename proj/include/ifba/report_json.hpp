#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace ifba::report {

using ojson = nlohmann::ordered_json;

// Deterministic rendering: insertion-ordered keys, 2-space indent, doubles
// printed with %.17g (round-trip exact for binary64). Reports are compared
// byte-for-byte in tests, so all formatting runs through here.
std::string to_canonical_text(const ojson& j);

// Write-temp-then-rename so readers never observe a partial report.
void write_atomic(const std::filesystem::path& path, const ojson& j);

ojson read_json_file(const std::filesystem::path& path);

// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

} // namespace ifba::report
