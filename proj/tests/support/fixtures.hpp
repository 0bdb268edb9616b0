// Shared fixtures and random generators for the test suites.

#ifndef WSMATCH_TESTS_FIXTURES_HPP
#define WSMATCH_TESTS_FIXTURES_HPP

#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "wsmatch/maxflow.hpp"
#include "wsmatch/profile.hpp"
#include "wsmatch/scoring.hpp"
#include "wsmatch/taxonomy.hpp"

namespace wsmatch::testing {

// 12-concept fixture hierarchy. Amphibian has two parents (Car and Boat),
// SportsCar sits three levels below Thing, and Temperature is an isolated
// root, so every scoring branch is reachable.
//
//   Thing ── Vehicle ── Car ──── SportsCar
//     │         └────── Boat     Amphibian (child of Car AND Boat)
//     ├──── Animal ──── Dog / Cat
//     └──── Place ───── City
//   Temperature (no relatives)
inline RawTaxonomy fixture_raw_taxonomy() {
  return RawTaxonomy{
      {"Thing", "Vehicle", "Car", "SportsCar", "Boat", "Amphibian", "Animal",
       "Dog", "Cat", "Place", "City", "Temperature"},
      {{"Vehicle", "Thing"},
       {"Car", "Vehicle"},
       {"SportsCar", "Car"},
       {"Boat", "Vehicle"},
       {"Amphibian", "Car"},
       {"Amphibian", "Boat"},
       {"Animal", "Thing"},
       {"Dog", "Animal"},
       {"Cat", "Animal"},
       {"Place", "Thing"},
       {"City", "Place"}}};
}

inline Taxonomy fixture_taxonomy() {
  RawTaxonomy raw = fixture_raw_taxonomy();
  return Taxonomy::from_structure(raw.concepts, raw.child_parent_edges);
}

// -----------------------------------------------------------------------
// Random generation (seeded mt19937 everywhere, for reproducible runs)
// -----------------------------------------------------------------------

inline int roll(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<std::string> index_labels(const std::string& prefix,
                                             int count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (int i = 0; i < count; ++i)
    labels.push_back(prefix + std::to_string(i));
  return labels;
}

// Random instance with sizes in [min_side, max_side] and edge weights
// drawn from `weight_set` (a drawn weight of 0 simply omits the edge part
// of the time, exercising sparse graphs).
inline BipartiteInstance random_instance(std::mt19937& rng,
                                         std::span<const int> weight_set,
                                         int min_side = 1, int max_side = 6,
                                         int edge_percent = 60) {
  int left = roll(rng, min_side, max_side);
  int right = roll(rng, min_side, max_side);
  BipartiteInstance inst(index_labels("a", left), index_labels("b", right));
  for (int l = 0; l < left; ++l)
    for (int r = 0; r < right; ++r)
      if (roll(rng, 1, 100) <= edge_percent) {
        int w = weight_set[roll(rng, 0, static_cast<int>(weight_set.size()) - 1)];
        inst.add_edge(l, r, w);
      }
  return inst;
}

inline DataType random_datatype(std::mt19937& rng) {
  return kAllDataTypes[roll(rng, 0, 4)];
}

inline std::vector<ParameterSpec> random_parameters(
    std::mt19937& rng, const std::vector<ConceptId>& concepts,
    const std::string& prefix, int max_count = 5) {
  std::vector<ParameterSpec> params;
  int count = roll(rng, 0, max_count);
  for (int i = 0; i < count; ++i) {
    ParameterSpec p;
    p.name = prefix + std::to_string(i);
    p.concept_id = concepts[roll(rng, 0, static_cast<int>(concepts.size()) - 1)];
    p.type = random_datatype(rng);
    params.push_back(std::move(p));
  }
  return params;
}

inline ServiceProfile random_profile(std::mt19937& rng,
                                     const std::vector<ConceptId>& concepts,
                                     std::string id, int max_params = 5) {
  ServiceProfile p;
  p.id = std::move(id);
  p.inputs = random_parameters(rng, concepts, "in", max_params);
  p.outputs = random_parameters(rng, concepts, "out", max_params);
  return p;
}

}  // namespace wsmatch::testing

#endif  // WSMATCH_TESTS_FIXTURES_HPP
