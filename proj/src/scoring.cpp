#include "wsmatch/scoring.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "wsmatch/errors.hpp"

namespace wsmatch {

DegreeScore degree_from_value(int value) {
  switch (value) {
    case 0: return DegreeScore::fail;
    case 3: return DegreeScore::weak;
    case 7: return DegreeScore::partial;
    case 10: return DegreeScore::exact;
    default:
      throw InputError("degree score must be one of 0, 3, 7, 10; got " +
                       std::to_string(value));
  }
}

DegreeScore case_score(const Taxonomy& t, const ConceptId& requester,
                       const ConceptId& candidate) {
  if (t.same_class(requester, candidate)) return DegreeScore::exact;
  if (t.is_direct_subclass(requester, candidate)) return DegreeScore::exact;
  if (t.subsumes(candidate, requester)) return DegreeScore::partial;
  if (t.subsumes(requester, candidate)) return DegreeScore::weak;
  return DegreeScore::fail;
}

const std::string& to_string(DataType t) {
  static const std::string names[] = {"Integer", "Real", "String", "Date",
                                      "Boolean"};
  return names[static_cast<int>(t)];
}

DataType datatype_from_string(const std::string& name) {
  for (DataType t : kAllDataTypes)
    if (to_string(t) == name) return t;
  throw InputError("unknown datatype \"" + name +
                   "\" (expected Integer, Real, String, Date or Boolean)");
}

TypeMatrix TypeMatrix::standard() {
  TypeMatrix m;
  //                Integer  Real  String  Date  Boolean
  m.cells_ = {{{10, 5, 3, 1, 1},      // Integer
               {10, 10, 1, 0, 1},     // Real
               {7, 7, 10, 8, 3},      // String
               {1, 0, 1, 10, 0},      // Date
               {1, 0, 1, 0, 10}}};    // Boolean
  return m;
}

TypeMatrix TypeMatrix::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed type matrix document: ") +
                     e.what());
  }
  if (!doc.is_object())
    throw InputError("type matrix document must be a JSON object");

  TypeMatrix m;
  for (DataType row : kAllDataTypes) {
    const std::string& row_name = to_string(row);
    if (!doc.contains(row_name) || !doc[row_name].is_object())
      throw InputError("type matrix missing row \"" + row_name + "\"");
    for (DataType col : kAllDataTypes) {
      const std::string& col_name = to_string(col);
      if (!doc[row_name].contains(col_name))
        throw InputError("type matrix missing entry (" + row_name + ", " +
                         col_name + ")");
      const auto& cell = doc[row_name][col_name];
      if (!cell.is_number_integer())
        throw InputError("type matrix entry (" + row_name + ", " + col_name +
                         ") must be an integer");
      int value = cell.get<int>();
      if (value < 0 || value > 10)
        throw InputError("type matrix entry (" + row_name + ", " + col_name +
                         ") out of range [0,10]: " + std::to_string(value));
      m.cells_[static_cast<int>(row)][static_cast<int>(col)] = value;
    }
  }
  for (DataType t : kAllDataTypes) {
    int self = m.score(t, t);
    if (self != 10)
      throw InputError("type matrix self-match (" + to_string(t) + ", " +
                       to_string(t) + ") must be 10, got " +
                       std::to_string(self));
  }
  return m;
}

std::vector<int> TypeMatrix::positive_levels() const {
  std::set<int, std::greater<int>> levels;
  for (const auto& row : cells_)
    for (int v : row)
      if (v > 0) levels.insert(v);
  return {levels.begin(), levels.end()};
}

int type_score(const TypeMatrix& m, DataType requester, DataType candidate) {
  return m.score(requester, candidate);
}

}  // namespace wsmatch
