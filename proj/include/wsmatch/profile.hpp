#ifndef WSMATCH_PROFILE_HPP
#define WSMATCH_PROFILE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "wsmatch/scoring.hpp"
#include "wsmatch/taxonomy.hpp"

namespace wsmatch {

/// One typed, concept-annotated input or output parameter.
struct ParameterSpec {
  std::string name;
  ConceptId concept_id;
  DataType type = DataType::String;

  bool operator==(const ParameterSpec&) const = default;
};

/// A service advertisement or request: identity plus IO parameter lists.
/// Requests and advertisements share this shape.
struct ServiceProfile {
  std::string id;
  std::vector<ParameterSpec> inputs;
  std::vector<ParameterSpec> outputs;

  bool operator==(const ServiceProfile&) const = default;
};

/// Parses the profile file format:
///   {"id":"getWeather",
///    "inputs":[{"name":"city","concept":"City","type":"String"}],
///    "outputs":[{"name":"temp","concept":"Temperature","type":"Real"}]}
/// Absent "inputs"/"outputs" mean empty lists. Throws InputError on
/// malformed documents, empty ids, duplicate parameter names within a
/// list, or datatypes outside the closed set.
ServiceProfile parse_profile(const std::string& text);

std::string profile_to_json_text(const ServiceProfile& p);

/// A parameter whose concept the taxonomy does not know.
struct ValidationIssue {
  std::string side;  // "input" or "output"
  std::string parameter;
  ConceptId concept_id;

  bool operator==(const ValidationIssue&) const = default;
};

/// Every parameter of `p` whose concept is missing from `t`; empty means
/// the profile is valid against that taxonomy.
std::vector<ValidationIssue> validate_profile(const ServiceProfile& p,
                                              const Taxonomy& t);

/// Ordered collection of advertised services. Insertion order is
/// preserved; ids are unique.
class Registry {
 public:
  /// Appends a profile; duplicate ids are a ConflictError.
  void add(ServiceProfile p);

  /// Removes by id; unknown ids are a ConflictError.
  void remove(const std::string& id);

  const ServiceProfile* find(const std::string& id) const;

  const std::vector<ServiceProfile>& services() const { return services_; }
  std::size_t size() const { return services_.size(); }
  bool empty() const { return services_.empty(); }

  /// Registry file format: a JSON array of profile objects. A blank
  /// document is an empty registry.
  static Registry from_json(const std::string& text);
  std::string to_json_text() const;

 private:
  std::vector<ServiceProfile> services_;
};

}  // namespace wsmatch

#endif  // WSMATCH_PROFILE_HPP
