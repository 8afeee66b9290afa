#include "ifba/schema.hpp"

namespace ifba::schema {

namespace {

using nlohmann::json;

bool type_matches(const json& doc, const std::string& type) {
    if (type == "object") return doc.is_object();
    if (type == "array") return doc.is_array();
    if (type == "string") return doc.is_string();
    if (type == "boolean") return doc.is_boolean();
    if (type == "null") return doc.is_null();
    if (type == "integer") return doc.is_number_integer() || doc.is_number_unsigned();
    if (type == "number") return doc.is_number();
    return false;
}

} // namespace

ValidationResult validate(const json& doc, const json& schema, const std::string& where) {
    if (schema.contains("oneOf")) {
        for (const auto& alt : schema.at("oneOf"))
            if (validate(doc, alt, where).valid) return {true, ""};
        return {false, where + ": value matches no oneOf alternative"};
    }

    if (schema.contains("type")) {
        const auto& type = schema.at("type");
        if (type.is_string()) {
            if (!type_matches(doc, type.get<std::string>()))
                return {false, where + ": expected type " + type.get<std::string>()};
        } else if (type.is_array()) {
            bool any = false;
            for (const auto& t : type)
                if (type_matches(doc, t.get<std::string>())) any = true;
            if (!any) return {false, where + ": value matches none of the allowed types"};
        }
    }

    if (schema.contains("enum")) {
        bool any = false;
        for (const auto& candidate : schema.at("enum"))
            if (doc == candidate) any = true;
        if (!any) return {false, where + ": value not in enum"};
    }

    if (doc.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!doc.contains(key.get<std::string>()))
                    return {false, where + ": missing required key '" + key.get<std::string>() + "'"};
        const json empty = json::object();
        const json& props = schema.contains("properties") ? schema.at("properties") : empty;
        const bool closed = schema.contains("additionalProperties") &&
                            schema.at("additionalProperties").is_boolean() &&
                            !schema.at("additionalProperties").get<bool>();
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            if (props.contains(it.key())) {
                auto sub = validate(it.value(), props.at(it.key()), where + "." + it.key());
                if (!sub.valid) return sub;
            } else if (closed) {
                return {false, where + ": unexpected key '" + it.key() + "'"};
            }
        }
    }

    if (doc.is_array() && schema.contains("items")) {
        for (std::size_t i = 0; i < doc.size(); ++i) {
            auto sub = validate(doc[i], schema.at("items"), where + "[" + std::to_string(i) + "]");
            if (!sub.valid) return sub;
        }
    }

    return {true, ""};
}

} // namespace ifba::schema
