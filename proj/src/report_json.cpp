#include "ifba/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>

#include "ifba/errors.hpp"

namespace ifba::report {

namespace {

void append_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out.push_back(ch);
                }
        }
    }
    out.push_back('"');
}

void append_double(std::string& out, double v) {
    if (!std::isfinite(v)) throw DomainError("reports must not contain non-finite numbers");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
    // Keep a float marker so the value parses back as a float, not an int.
    if (out.find_first_of(".eE", out.size() - std::strlen(buf)) == std::string::npos)
        out += ".0";
}

void render(std::string& out, const ojson& j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case ojson::value_t::null:
            out += "null";
            break;
        case ojson::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case ojson::value_t::string:
            append_escaped(out, j.get<std::string>());
            break;
        case ojson::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case ojson::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case ojson::value_t::number_float:
            append_double(out, j.get<double>());
            break;
        case ojson::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                render(out, j[i], depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            break;
        }
        case ojson::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += pad_in;
                append_escaped(out, it.key());
                out += ": ";
                render(out, it.value(), depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            break;
        }
        default:
            throw DomainError("unsupported JSON value type in report");
    }
}

} // namespace

std::string to_canonical_text(const ojson& j) {
    std::string out;
    render(out, j, 0);
    out += "\n";
    return out;
}

void write_atomic(const std::filesystem::path& path, const ojson& j) {
    const auto text = to_canonical_text(j);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write report file: " + tmp);
        out << text;
        if (!out) throw IoError("short write to report file: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

ojson read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open JSON file: " + path.string());
    ojson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw IoError("cannot parse JSON file " + path.string() + ": " + e.what());
    }
    return j;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace ifba::report
