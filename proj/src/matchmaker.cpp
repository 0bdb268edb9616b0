#include "wsmatch/matchmaker.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <json.hpp>

#include "wsmatch/errors.hpp"

namespace wsmatch {

namespace {

// Semantic thresholds probed from strongest to weakest.
constexpr std::array<int, 3> kDegreeLevels{10, 7, 3};

std::vector<std::string> parameter_names(std::span<const ParameterSpec> params) {
  std::vector<std::string> names;
  names.reserve(params.size());
  for (const auto& p : params) names.push_back(p.name);
  return names;
}

std::vector<NamePair> to_name_pairs(const std::vector<std::pair<int, int>>& ix,
                                    std::span<const ParameterSpec> requester,
                                    std::span<const ParameterSpec> candidate) {
  std::vector<NamePair> pairs;
  pairs.reserve(ix.size());
  for (auto [l, r] : ix)
    pairs.emplace_back(requester[l].name, candidate[r].name);
  return pairs;
}

}  // namespace

BipartiteInstance semantic_instance(std::span<const ParameterSpec> requester,
                                    std::span<const ParameterSpec> candidate,
                                    const Taxonomy& t) {
  BipartiteInstance inst(parameter_names(requester),
                         parameter_names(candidate));
  for (std::size_t i = 0; i < requester.size(); ++i) {
    for (std::size_t j = 0; j < candidate.size(); ++j) {
      DegreeScore score =
          case_score(t, requester[i].concept_id, candidate[j].concept_id);
      // Score 0 marks a failed pair; it never becomes an edge.
      if (score != DegreeScore::fail)
        inst.add_edge(static_cast<int>(i), static_cast<int>(j),
                      degree_value(score));
    }
  }
  return inst;
}

BipartiteInstance type_instance(std::span<const ParameterSpec> requester,
                                std::span<const ParameterSpec> candidate,
                                const TypeMatrix& m) {
  BipartiteInstance inst(parameter_names(requester),
                         parameter_names(candidate));
  for (std::size_t i = 0; i < requester.size(); ++i) {
    for (std::size_t j = 0; j < candidate.size(); ++j) {
      int score = type_score(m, requester[i].type, candidate[j].type);
      if (score > 0)
        inst.add_edge(static_cast<int>(i), static_cast<int>(j), score);
    }
  }
  return inst;
}

SideResult match_side(std::span<const ParameterSpec> requester,
                      std::span<const ParameterSpec> candidate,
                      const Taxonomy& t) {
  BipartiteInstance inst = semantic_instance(requester, candidate, t);
  MatchLevel result = complete_match_level(inst, kDegreeLevels);
  return {degree_from_value(result.level),
          to_name_pairs(result.pairs, requester, candidate)};
}

DegreeScore parsim(DegreeScore outsim, DegreeScore insim) {
  DegreeScore result = DegreeScore::exact;
  if (outsim == DegreeScore::fail || insim == DegreeScore::fail)
    result = DegreeScore::fail;
  else if (outsim == DegreeScore::weak || insim == DegreeScore::weak)
    result = DegreeScore::weak;
  else if (outsim == DegreeScore::partial || insim == DegreeScore::partial)
    result = DegreeScore::partial;
  return result;
}

TypeSimSides typesim_sides(const ServiceProfile& requester,
                           const ServiceProfile& candidate,
                           const TypeMatrix& m) {
  std::vector<int> levels = m.positive_levels();
  TypeSimSides sides;
  sides.outputs = complete_match_level(
      type_instance(requester.outputs, candidate.outputs, m), levels);
  sides.inputs = complete_match_level(
      type_instance(requester.inputs, candidate.inputs, m), levels);
  sides.value = std::min(sides.outputs.level, sides.inputs.level);
  return sides;
}

int typesim(const ServiceProfile& requester, const ServiceProfile& candidate,
            const TypeMatrix& m) {
  return typesim_sides(requester, candidate, m).value;
}

FinalScore FinalScore::from_thirds(int thirds) {
  FinalScore s;
  s.thirds_ = thirds;
  return s;
}

std::string FinalScore::to_string() const {
  int h = hundredths();
  std::string whole = std::to_string(h / 100);
  int frac = h % 100;
  return whole + "." + (frac < 10 ? "0" : "") + std::to_string(frac);
}

FinalScore final_score(DegreeScore parsim_value, int typesim_value) {
  if (parsim_value == DegreeScore::fail) return FinalScore::from_thirds(0);
  // 2:1 blend of the phases, scaled to a percentage.
  return FinalScore::from_thirds(
      (2 * degree_value(parsim_value) + typesim_value) * 10);
}

MatchReport match_pair(const ServiceProfile& requester,
                       const ServiceProfile& candidate, const Taxonomy& t,
                       const TypeMatrix& m) {
  MatchReport report;
  report.requester_id = requester.id;
  report.candidate_id = candidate.id;

  SideResult out = match_side(requester.outputs, candidate.outputs, t);
  SideResult in = match_side(requester.inputs, candidate.inputs, t);
  report.outsim = out.sim;
  report.insim = in.sim;
  report.output_pairs = std::move(out.pairs);
  report.input_pairs = std::move(in.pairs);

  report.parsim = parsim(report.outsim, report.insim);
  report.typesim = typesim(requester, candidate, m);
  report.final = final_score(report.parsim, report.typesim);
  return report;
}

std::vector<MatchReport> rank(const ServiceProfile& requester,
                              const Registry& registry, const Taxonomy& t,
                              const TypeMatrix& m,
                              std::optional<double> min_final) {
  std::vector<MatchReport> reports;
  reports.reserve(registry.size());
  for (const auto& candidate : registry.services())
    reports.push_back(match_pair(requester, candidate, t, m));

  if (min_final) {
    int cutoff = static_cast<int>(std::llround(*min_final * 100.0));
    std::erase_if(reports, [cutoff](const MatchReport& r) {
      return r.final.hundredths() < cutoff;
    });
  }

  std::sort(reports.begin(), reports.end(),
            [](const MatchReport& a, const MatchReport& b) {
              if (a.final != b.final) return a.final > b.final;
              if (a.parsim != b.parsim)
                return degree_value(a.parsim) > degree_value(b.parsim);
              return a.candidate_id < b.candidate_id;
            });
  return reports;
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

namespace {

nlohmann::json pairs_to_json(const std::vector<NamePair>& pairs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [req, cand] : pairs)
    arr.push_back(nlohmann::json::array({req, cand}));
  return arr;
}

std::vector<NamePair> pairs_from_json(const nlohmann::json& arr,
                                      const std::string& key) {
  if (!arr.is_array())
    throw InputError("report \"" + key + "\" must be an array");
  std::vector<NamePair> pairs;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string())
      throw InputError("entries of \"" + key + "\" must be [string, string]");
    pairs.emplace_back(entry[0].get<std::string>(),
                       entry[1].get<std::string>());
  }
  return pairs;
}

}  // namespace

namespace {

nlohmann::json report_to_json(const MatchReport& r) {
  return nlohmann::json{{"requester", r.requester_id},
                        {"candidate", r.candidate_id},
                        {"outsim", degree_value(r.outsim)},
                        {"insim", degree_value(r.insim)},
                        {"parsim", degree_value(r.parsim)},
                        {"typesim", r.typesim},
                        {"final", r.final.hundredths() / 100.0},
                        {"output_pairs", pairs_to_json(r.output_pairs)},
                        {"input_pairs", pairs_to_json(r.input_pairs)}};
}

}  // namespace

std::string report_to_json_text(const MatchReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

std::string reports_to_json_text(const std::vector<MatchReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

MatchReport report_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed report document: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("report must be a JSON object");

  for (const char* field : {"requester", "candidate"})
    if (!doc.contains(field) || !doc[field].is_string())
      throw InputError(std::string("report missing string \"") + field + "\"");
  for (const char* field : {"outsim", "insim", "parsim", "typesim"})
    if (!doc.contains(field) || !doc[field].is_number_integer())
      throw InputError(std::string("report missing integer \"") + field +
                       "\"");

  MatchReport r;
  r.requester_id = doc["requester"].get<std::string>();
  r.candidate_id = doc["candidate"].get<std::string>();
  r.outsim = degree_from_value(doc["outsim"].get<int>());
  r.insim = degree_from_value(doc["insim"].get<int>());
  r.parsim = degree_from_value(doc["parsim"].get<int>());
  r.typesim = doc["typesim"].get<int>();
  if (r.typesim < 0 || r.typesim > 10)
    throw InputError("report \"typesim\" out of range [0,10]");
  // The serialized "final" is a rounded display value; the exact score is
  // recomputed from its inputs.
  r.final = final_score(r.parsim, r.typesim);
  r.output_pairs = pairs_from_json(doc.value("output_pairs",
                                             nlohmann::json::array()),
                                   "output_pairs");
  r.input_pairs = pairs_from_json(doc.value("input_pairs",
                                            nlohmann::json::array()),
                                  "input_pairs");
  return r;
}

}  // namespace wsmatch
