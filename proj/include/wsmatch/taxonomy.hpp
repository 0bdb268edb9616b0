#ifndef WSMATCH_TAXONOMY_HPP
#define WSMATCH_TAXONOMY_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wsmatch {

using ConceptId = std::string;

/// Immutable concept hierarchy shared by all profiles in play.
///
/// Concepts form a DAG through their parent edges (multiple parents are
/// allowed, cycles are rejected at construction). Subsumption queries are
/// answered from an ancestor closure precomputed at load time, so lookups
/// are cheap and the object is safe to share across threads once built.
class Taxonomy {
 public:
  /// Builds a validated taxonomy from explicit structure.
  /// `child_parent_edges` holds (child, parent) pairs; duplicates collapse.
  /// Throws InputError on duplicate ids, undeclared edge endpoints, or
  /// cycles; every message names the offending concept(s).
  static Taxonomy from_structure(
      const std::vector<ConceptId>& concepts,
      const std::vector<std::pair<ConceptId, ConceptId>>& child_parent_edges);

  /// Parses the taxonomy file format:
  ///   {"concepts":[{"id":"Car","parents":["Vehicle"]}, ...]}
  /// Declaration order is irrelevant; parents may be declared later.
  static Taxonomy from_json(const std::string& text);

  bool contains(const ConceptId& id) const;

  /// True iff a and b are the identical concept.
  bool same_class(const ConceptId& a, const ConceptId& b) const;

  /// True iff `parent` is an immediate parent of `child` (one edge).
  bool is_direct_subclass(const ConceptId& child, const ConceptId& parent) const;

  /// True iff `ancestor` is a strict ancestor of `descendant` through one
  /// or more parent edges. Non-reflexive; equality is same_class territory.
  bool subsumes(const ConceptId& ancestor, const ConceptId& descendant) const;

  std::size_t concept_count() const { return ids_.size(); }
  std::size_t edge_count() const;

  /// Concept ids in declaration order.
  const std::vector<ConceptId>& concepts() const { return ids_; }

  /// Immediate parents of a concept, in declaration order.
  std::vector<ConceptId> parents_of(const ConceptId& id) const;

 private:
  Taxonomy() = default;

  int index_of(const ConceptId& id) const;  // throws InputError when unknown

  std::vector<ConceptId> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> parents_;    // parents_[c] = immediate parents
  std::vector<std::vector<bool>> ancestor_;  // ancestor_[c][a] = a strictly above c
};

}  // namespace wsmatch

#endif  // WSMATCH_TAXONOMY_HPP
