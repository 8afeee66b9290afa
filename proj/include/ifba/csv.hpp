#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ifba::csv {

// Reads a CSV file into trimmed cells. Blank lines are skipped; no quoting
// support (numeric data only in this project).
std::vector<std::vector<std::string>> read_cells(const std::filesystem::path& path);

// Parses one cell as a double. Throws ConfigError on garbage or non-finite
// values; `context` names the offending location in the message.
double parse_double(const std::string& cell, const std::string& context);

// Converts rows of cells to doubles, requiring a rectangular shape.
std::vector<std::vector<double>> as_numeric(
    const std::vector<std::vector<std::string>>& cells,
    const std::string& context);

} // namespace ifba::csv
