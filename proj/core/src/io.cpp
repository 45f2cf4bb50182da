#include "delegation/io.hpp"

#include <fstream>
#include <sstream>

#include "delegation/error.hpp"

namespace delegation {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational string \"p/q\"");
}

ordered_json to_json(const Rational& r) { return to_string(r); }

ordered_json to_json(const Action& a, bool with_support) {
  ordered_json j;
  j["label"] = a.label;
  j["bias"] = to_json(a.bias);
  if (with_support) {
    ordered_json support = ordered_json::array();
    for (const auto& o : a.support) {
      support.push_back({{"value", to_json(o.value)}, {"prob", to_json(o.prob)}});
    }
    j["support"] = std::move(support);
  }
  return j;
}

Action action_from_json(const json& j, const std::string& where, bool want_support) {
  Action a;
  if (!j.is_object()) throw InputError(where + ": expected an object");
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw InputError(where + ".label: expected a string");
    a.label = it->get<std::string>();
  }
  a.bias = xnum_from_json(field(j, "bias", where), where + ".bias");
  auto it = j.find("support");
  if (it == j.end() || it->is_null()) {
    if (want_support) throw InputError(where + ": missing field 'support'");
    return a;
  }
  if (!it->is_array()) throw InputError(where + ".support: expected an array");
  for (std::size_t k = 0; k < it->size(); ++k) {
    const std::string w = where + ".support[" + std::to_string(k) + "]";
    const json& o = (*it)[k];
    a.support.push_back(Outcome{xnum_from_json(field(o, "value", w), w + ".value"),
                                rational_from_json(field(o, "prob", w), w + ".prob")});
  }
  return a;
}

}  // namespace

ordered_json to_json(const XNum& x) {
  return ordered_json{{"std", to_string(x.std_part())}, {"inf", to_string(x.inf_part())}};
}

XNum xnum_from_json(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_xnum(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return XNum(Rational(j.get<long>()));
  if (!j.is_object()) throw InputError(where + ": expected {\"std\", \"inf\"}");
  Rational s = rational_from_json(field(j, "std", where), where + ".std");
  Rational i = 0;
  if (auto it = j.find("inf"); it != j.end()) i = rational_from_json(*it, where + ".inf");
  return XNum(std::move(s), std::move(i));
}

ordered_json to_json(const Instance& instance) {
  const bool independent = instance.is_independent();
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = std::string(to_string(instance.kind()));
  ordered_json actions = ordered_json::array();
  for (const auto& a : instance.actions()) actions.push_back(to_json(a, independent));
  j["actions"] = std::move(actions);
  if (instance.outside()) {
    const Action& o = *instance.outside();
    j["outside"] = to_json(o, independent || !o.support.empty());
  } else {
    j["outside"] = nullptr;
  }
  if (!independent) {
    ordered_json profiles = ordered_json::array();
    for (const auto& p : instance.profiles()) {
      ordered_json values = ordered_json::array();
      for (const auto& v : p.values) values.push_back(to_json(v));
      profiles.push_back({{"prob", to_json(p.prob)}, {"values", std::move(values)}});
    }
    j["profiles"] = std::move(profiles);
  }
  return j;
}

Instance instance_from_json(const json& doc) {
  const json& version = field(doc, "schema_version", "$");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    throw InputError("$.schema_version: unsupported version");
  }
  const json& kind_j = field(doc, "kind", "$");
  if (!kind_j.is_string()) throw InputError("$.kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind != "independent" && kind != "correlated") {
    throw InputError("$.kind: expected \"independent\" or \"correlated\", got \"" + kind + "\"");
  }
  const bool independent = kind == "independent";

  const json& actions_j = field(doc, "actions", "$");
  if (!actions_j.is_array()) throw InputError("$.actions: expected an array");
  std::vector<Action> actions;
  for (std::size_t i = 0; i < actions_j.size(); ++i) {
    actions.push_back(
        action_from_json(actions_j[i], "$.actions[" + std::to_string(i) + "]", independent));
  }

  std::optional<Action> outside;
  if (auto it = doc.find("outside"); it != doc.end() && !it->is_null()) {
    outside = action_from_json(*it, "$.outside", independent);
  }

  if (independent) return Instance::independent(std::move(actions), std::move(outside));

  const json& profiles_j = field(doc, "profiles", "$");
  if (!profiles_j.is_array()) throw InputError("$.profiles: expected an array");
  std::vector<Profile> profiles;
  for (std::size_t s = 0; s < profiles_j.size(); ++s) {
    const std::string w = "$.profiles[" + std::to_string(s) + "]";
    const json& p = profiles_j[s];
    Profile prof{rational_from_json(field(p, "prob", w), w + ".prob"), {}};
    const json& values = field(p, "values", w);
    if (!values.is_array()) throw InputError(w + ".values: expected an array");
    for (std::size_t k = 0; k < values.size(); ++k) {
      prof.values.push_back(
          xnum_from_json(values[k], w + ".values[" + std::to_string(k) + "]"));
    }
    profiles.push_back(std::move(prof));
  }
  return Instance::correlated(std::move(actions), std::move(profiles), std::move(outside));
}

std::string serialize(const Instance& instance) { return to_json(instance).dump(2) + "\n"; }

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  return instance_from_json(doc);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize(instance);
}

Menu parse_menu(const Instance& instance, std::string_view spec) {
  if (spec == "all") return Menu::all(instance.size());
  if (spec == "empty") {
    Menu m;
    check_menu(instance, m);
    return m;
  }
  if (spec.starts_with("threshold:")) {
    const XNum t = parse_xnum(spec.substr(10));
    Menu m = threshold_menu(instance, t);
    check_menu(instance, m);
    return m;
  }
  std::vector<std::size_t> idx;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = std::min(spec.find(',', pos), spec.size());
    const std::string_view tok = spec.substr(pos, comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("menu: invalid index '" + std::string(tok) + "'");
    }
    idx.push_back(std::stoul(std::string(tok)));
    pos = comma + 1;
  }
  Menu m(std::move(idx));
  check_menu(instance, m);
  return m;
}

}  // namespace delegation
