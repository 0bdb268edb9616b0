#ifndef WSMATCH_MATCHMAKER_HPP
#define WSMATCH_MATCHMAKER_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wsmatch/maxflow.hpp"
#include "wsmatch/profile.hpp"
#include "wsmatch/scoring.hpp"
#include "wsmatch/taxonomy.hpp"

namespace wsmatch {

using NamePair = std::pair<std::string, std::string>;  // requester, candidate

/// Semantic result for one side (outputs or inputs): the degree plus the
/// witness pairing. A positive degree covers every requester parameter
/// exactly once; degree 0 carries no pairs.
struct SideResult {
  DegreeScore sim = DegreeScore::fail;
  std::vector<NamePair> pairs;

  bool operator==(const SideResult&) const = default;
};

/// Bipartite instance for a semantic side: left = requester parameters,
/// right = candidate parameters, one edge per pair with a positive
/// concept score, weighted by that score.
BipartiteInstance semantic_instance(std::span<const ParameterSpec> requester,
                                    std::span<const ParameterSpec> candidate,
                                    const Taxonomy& t);

/// Same construction with datatype scores as weights.
BipartiteInstance type_instance(std::span<const ParameterSpec> requester,
                                std::span<const ParameterSpec> candidate,
                                const TypeMatrix& m);

/// Degree at which every requester parameter finds a counterpart, probing
/// levels 10, 7, 3. An empty requester side is satisfied at 10.
SideResult match_side(std::span<const ParameterSpec> requester,
                      std::span<const ParameterSpec> candidate,
                      const Taxonomy& t);

/// Combines the two side degrees, weakest link first: any 0 kills the
/// match, then 3 beats 7. Equals min on the {0,3,7,10} scale.
DegreeScore parsim(DegreeScore outsim, DegreeScore insim);

struct TypeSimSides {
  MatchLevel outputs;
  MatchLevel inputs;
  int value = 0;  // min of the two side levels
};

/// Datatype matching over both sides with the matrix's own positive
/// scores as threshold levels. Kept independent of the semantic pairing.
TypeSimSides typesim_sides(const ServiceProfile& requester,
                           const ServiceProfile& candidate,
                           const TypeMatrix& m);

int typesim(const ServiceProfile& requester, const ServiceProfile& candidate,
            const TypeMatrix& m);

/// Final percentage in exact thirds (denominator 3), so 63.33 is stored
/// as 190 thirds and never drifts. Two-decimal rendering rounds half up.
class FinalScore {
 public:
  FinalScore() = default;
  static FinalScore from_thirds(int thirds);

  int thirds() const { return thirds_; }
  int hundredths() const { return (100 * thirds_ + 1) / 3; }
  double value() const { return thirds_ / 3.0; }
  std::string to_string() const;  // "63.33"

  auto operator<=>(const FinalScore&) const = default;

 private:
  int thirds_ = 0;
};

/// 0 when the semantic phase failed; otherwise the 2:1 weighted blend of
/// the two phases as a percentage: (2*parsim + typesim) * 10 / 3.
FinalScore final_score(DegreeScore parsim_value, int typesim_value);

/// Full result of matching one candidate against one request.
struct MatchReport {
  std::string requester_id;
  std::string candidate_id;
  DegreeScore outsim = DegreeScore::fail;
  DegreeScore insim = DegreeScore::fail;
  DegreeScore parsim = DegreeScore::fail;
  int typesim = 0;
  FinalScore final;
  std::vector<NamePair> output_pairs;
  std::vector<NamePair> input_pairs;

  bool operator==(const MatchReport&) const = default;
};

std::string report_to_json_text(const MatchReport& r);
MatchReport report_from_json_text(const std::string& text);

/// JSON array of reports, in the given order.
std::string reports_to_json_text(const std::vector<MatchReport>& reports);

/// The three-phase pipeline for one pair: semantic side matches, the
/// parsim blend, the independent type match, and the final percentage.
MatchReport match_pair(const ServiceProfile& requester,
                       const ServiceProfile& candidate, const Taxonomy& t,
                       const TypeMatrix& m);

/// Scores the request against every registered service and orders the
/// reports by final descending, then parsim descending, then candidate id
/// ascending. Entries below `min_final` (a percentage) are dropped. The
/// head of the list is the substitution choice.
std::vector<MatchReport> rank(const ServiceProfile& requester,
                              const Registry& registry, const Taxonomy& t,
                              const TypeMatrix& m,
                              std::optional<double> min_final = std::nullopt);

}  // namespace wsmatch

#endif  // WSMATCH_MATCHMAKER_HPP
