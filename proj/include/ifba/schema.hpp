#pragma once

#include <string>

#include <json.hpp>

namespace ifba::schema {

struct ValidationResult {
    bool valid = false;
    std::string error; // first failure, with a JSON-pointer-ish location
};

// Structural validator for the subset of JSON Schema the shipped schemas use:
// type, required, properties, additionalProperties (boolean), items, enum.
ValidationResult validate(const nlohmann::json& doc, const nlohmann::json& schema,
                          const std::string& where = "$");

} // namespace ifba::schema
