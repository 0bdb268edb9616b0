#ifndef WSMATCH_SCORING_HPP
#define WSMATCH_SCORING_HPP

#include <array>
#include <string>
#include <vector>

#include "wsmatch/taxonomy.hpp"

namespace wsmatch {

/// The four-valued semantic compatibility score between two concepts.
/// 10 means the parameters are interchangeable, 0 means the match failed;
/// 7 and 3 are the partial grades in between.
enum class DegreeScore : int {
  fail = 0,
  weak = 3,
  partial = 7,
  exact = 10,
};

constexpr int degree_value(DegreeScore d) { return static_cast<int>(d); }

/// Maps 0/3/7/10 back to a DegreeScore; anything else is an InputError.
DegreeScore degree_from_value(int value);

/// Semantic score of candidate concept `candidate` standing in for
/// requester concept `requester`. Branches fire in this order:
///   same concept, or requester is an immediate subclass of candidate -> 10
///   candidate is a (non-immediate) ancestor of requester            -> 7
///   requester is an ancestor of candidate                           -> 3
///   otherwise                                                       -> 0
DegreeScore case_score(const Taxonomy& t, const ConceptId& requester,
                       const ConceptId& candidate);

/// Closed set of parameter datatypes. Unknown names in input documents
/// are an error, not a silent zero score.
enum class DataType { Integer, Real, String, Date, Boolean };

inline constexpr std::array<DataType, 5> kAllDataTypes{
    DataType::Integer, DataType::Real, DataType::String, DataType::Date,
    DataType::Boolean};

const std::string& to_string(DataType t);
DataType datatype_from_string(const std::string& name);

/// 5x5 datatype replacement scores, row = requester's type, column =
/// candidate's type. Deliberately asymmetric: a Real argument can absorb
/// an Integer perfectly but not the other way around.
class TypeMatrix {
 public:
  /// The built-in rule set.
  static TypeMatrix standard();

  /// Parses {"Integer":{"Integer":10,...},...}; all 25 ordered pairs must
  /// be present, values in [0,10], and every self-match must be 10.
  static TypeMatrix from_json(const std::string& text);

  int score(DataType requester, DataType candidate) const {
    return cells_[static_cast<int>(requester)][static_cast<int>(candidate)];
  }

  /// Distinct positive scores in descending order; these are the
  /// threshold levels the matchmaker probes for type matching.
  std::vector<int> positive_levels() const;

 private:
  TypeMatrix() = default;
  std::array<std::array<int, 5>, 5> cells_{};
};

/// Score for candidate type `candidate` substituting requester type
/// `requester` under matrix `m`.
int type_score(const TypeMatrix& m, DataType requester, DataType candidate);

}  // namespace wsmatch

#endif  // WSMATCH_SCORING_HPP
