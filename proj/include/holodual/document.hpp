#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

#include "holodual/hopftowers.hpp"
#include "holodual/locfun.hpp"

namespace holodual {

/// A fully validated parsed input document. Tower invariants (injectivity,
/// surjectivity, morphism laws) are checked eagerly during parsing.
struct SpecDocument {
    std::variant<FiniteAbelianGroup, FiniteGroup, IndGroup, ProGroup, IndHopf, ProHopf, FDHopf,
                 LocallyConstantFunction>
        subject;
    std::string description;
};

/// Parse a document; throws ParseError for malformed text/schema and
/// ValidationError (or the specific domain error) for invalid content.
/// depth_override truncates towers built by builders or given explicitly.
SpecDocument parse_document(const std::string& text, std::optional<int> depth_override = {});
SpecDocument parse_document(const nlohmann::json& doc, std::optional<int> depth_override = {});
inline SpecDocument parse_document(const char* text, std::optional<int> depth_override = {}) {
    return parse_document(std::string(text), depth_override);
}

// Serialization helpers shared by the CLI and tests.
nlohmann::ordered_json rational_json(const mpq_class& q);
nlohmann::ordered_json cyclotomic_json(const Cyclotomic& c);
nlohmann::ordered_json group_json(const FiniteAbelianGroup& g);
nlohmann::ordered_json ind_tower_json(const IndGroup& g);
nlohmann::ordered_json pro_tower_json(const ProGroup& g);
nlohmann::ordered_json report_json(const Report& r);
std::string report_text(const Report& r);

} // namespace holodual
