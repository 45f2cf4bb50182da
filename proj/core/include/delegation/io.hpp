#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "delegation/instance.hpp"

namespace delegation {

inline constexpr int kSchemaVersion = 1;

/// Instance file layout (JSON):
///
///   {
///     "schema_version": 1,
///     "kind": "independent" | "correlated",
///     "actions": [{"label": "...", "bias": X, "support": [{"value": X, "prob": "p/q"}]}],
///     "outside": null | {"label": "...", "bias": X, "support": [...]},
///     "profiles": [{"prob": "p/q", "values": [X, ...]}]      // correlated only
///   }
///
/// where X is {"std": "p/q", "inf": "p/q"}. Correlated actions carry no
/// support. All rationals are canonical reduced strings.
nlohmann::ordered_json to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

std::string serialize(const Instance& instance);
/// Throws InputError (with the offending field path) on malformed text and
/// SemanticError on model violations.
Instance parse_instance(std::string_view text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

nlohmann::ordered_json to_json(const XNum& x);
XNum xnum_from_json(const nlohmann::json& j, const std::string& where);

/// Menu specification: "all", "empty", "threshold:<t>" or a comma-separated
/// list of 1-based indices.
Menu parse_menu(const Instance& instance, std::string_view spec);

}  // namespace delegation
