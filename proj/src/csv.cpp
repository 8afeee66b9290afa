#include "ifba/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "ifba/errors.hpp"

namespace ifba::csv {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<std::vector<std::string>> read_cells(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file: " + path.string());

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> row;
        std::string cell;
        for (char ch : line) {
            if (ch == ',') {
                row.push_back(trim(cell));
                cell.clear();
            } else {
                cell.push_back(ch);
            }
        }
        row.push_back(trim(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

double parse_double(const std::string& cell, const std::string& context) {
    if (cell.empty())
        throw ConfigError(context + ": empty cell where a number is required");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0' || errno == ERANGE)
        throw ConfigError(context + ": cannot parse '" + cell + "' as a number");
    if (!std::isfinite(v))
        throw ConfigError(context + ": non-finite value '" + cell + "'");
    return v;
}

std::vector<std::vector<double>> as_numeric(
    const std::vector<std::vector<std::string>>& cells,
    const std::string& context) {
    std::vector<std::vector<double>> out;
    out.reserve(cells.size());
    std::size_t width = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == 0) width = cells[i].size();
        if (cells[i].size() != width)
            throw ConfigError(context + ": ragged CSV (row " + std::to_string(i + 1) +
                              " has " + std::to_string(cells[i].size()) +
                              " cells, expected " + std::to_string(width) + ")");
        std::vector<double> row;
        row.reserve(width);
        for (std::size_t j = 0; j < cells[i].size(); ++j)
            row.push_back(parse_double(cells[i][j], context + " row " + std::to_string(i + 1) +
                                                        " col " + std::to_string(j + 1)));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace ifba::csv
