#include "wsmatch/profile.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include <json.hpp>

#include "wsmatch/errors.hpp"

namespace wsmatch {

namespace {

using nlohmann::json;

std::vector<ParameterSpec> parse_parameter_list(const json& doc,
                                                const std::string& key) {
  std::vector<ParameterSpec> params;
  if (!doc.contains(key)) return params;
  if (!doc[key].is_array())
    throw InputError("\"" + key + "\" must be an array");

  std::unordered_set<std::string> seen;
  for (const auto& entry : doc[key]) {
    if (!entry.is_object())
      throw InputError("entries of \"" + key + "\" must be objects");
    for (const char* field : {"name", "concept", "type"})
      if (!entry.contains(field) || !entry[field].is_string())
        throw InputError("parameter in \"" + key + "\" missing string \"" +
                         field + "\"");
    ParameterSpec p;
    p.name = entry["name"].get<std::string>();
    p.concept_id = entry["concept"].get<std::string>();
    p.type = datatype_from_string(entry["type"].get<std::string>());
    if (p.name.empty())
      throw InputError("parameter name in \"" + key + "\" must be non-empty");
    if (p.concept_id.empty())
      throw InputError("concept of parameter \"" + p.name +
                       "\" must be non-empty");
    if (!seen.insert(p.name).second)
      throw InputError("duplicate " + key.substr(0, key.size() - 1) +
                       " parameter name \"" + p.name + "\"");
    params.push_back(std::move(p));
  }
  return params;
}

ServiceProfile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("profile must be a JSON object");
  if (!doc.contains("id") || !doc["id"].is_string())
    throw InputError("profile missing string \"id\"");

  ServiceProfile p;
  p.id = doc["id"].get<std::string>();
  if (p.id.empty()) throw InputError("profile id must be non-empty");
  p.inputs = parse_parameter_list(doc, "inputs");
  p.outputs = parse_parameter_list(doc, "outputs");
  return p;
}

json parameter_to_json(const ParameterSpec& p) {
  return json{{"name", p.name},
              {"concept", p.concept_id},
              {"type", to_string(p.type)}};
}

json profile_to_json(const ServiceProfile& p) {
  json inputs = json::array();
  for (const auto& param : p.inputs) inputs.push_back(parameter_to_json(param));
  json outputs = json::array();
  for (const auto& param : p.outputs)
    outputs.push_back(parameter_to_json(param));
  return json{{"id", p.id}, {"inputs", inputs}, {"outputs", outputs}};
}

bool is_blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

ServiceProfile parse_profile(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profile document: ") + e.what());
  }
  return profile_from_json(doc);
}

std::string profile_to_json_text(const ServiceProfile& p) {
  return profile_to_json(p).dump(2) + "\n";
}

std::vector<ValidationIssue> validate_profile(const ServiceProfile& p,
                                              const Taxonomy& t) {
  std::vector<ValidationIssue> issues;
  for (const auto& param : p.inputs)
    if (!t.contains(param.concept_id))
      issues.push_back({"input", param.name, param.concept_id});
  for (const auto& param : p.outputs)
    if (!t.contains(param.concept_id))
      issues.push_back({"output", param.name, param.concept_id});
  return issues;
}

void Registry::add(ServiceProfile p) {
  if (find(p.id))
    throw ConflictError("duplicate service id \"" + p.id + "\"");
  services_.push_back(std::move(p));
}

void Registry::remove(const std::string& id) {
  auto it = std::find_if(services_.begin(), services_.end(),
                         [&](const ServiceProfile& s) { return s.id == id; });
  if (it == services_.end())
    throw ConflictError("no service with id \"" + id + "\"");
  services_.erase(it);
}

const ServiceProfile* Registry::find(const std::string& id) const {
  for (const auto& s : services_)
    if (s.id == id) return &s;
  return nullptr;
}

Registry Registry::from_json(const std::string& text) {
  Registry r;
  if (is_blank(text)) return r;

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed registry document: ") + e.what());
  }
  if (!doc.is_array())
    throw InputError("registry document must be a JSON array of profiles");
  for (const auto& entry : doc) {
    ServiceProfile p = profile_from_json(entry);
    // A duplicate inside the document is a broken file, not a conflict.
    if (r.find(p.id))
      throw InputError("duplicate service id \"" + p.id +
                       "\" in registry document");
    r.add(std::move(p));
  }
  return r;
}

std::string Registry::to_json_text() const {
  json doc = json::array();
  for (const auto& s : services_) doc.push_back(profile_to_json(s));
  return doc.dump(2) + "\n";
}

}  // namespace wsmatch
