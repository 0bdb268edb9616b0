#include "wsmatch/matchmaker.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "wsmatch/errors.hpp"

using namespace wsmatch;
using namespace wsmatch::testing;

namespace {

ParameterSpec param(std::string name, std::string concept_id, DataType type) {
  return ParameterSpec{std::move(name), std::move(concept_id), type};
}

ServiceProfile weather_request() {
  ServiceProfile p;
  p.id = "needWeather";
  p.inputs = {param("city", "City", DataType::String)};
  p.outputs = {param("temp", "Temperature", DataType::Real)};
  return p;
}

constexpr std::array<DegreeScore, 4> kAllDegrees{
    DegreeScore::fail, DegreeScore::weak, DegreeScore::partial,
    DegreeScore::exact};

}  // namespace

TEST_CASE("match_side joins same-class parameters at level 10") {
  Taxonomy t = fixture_taxonomy();
  std::vector<ParameterSpec> req{param("temp", "Temperature", DataType::Real)};
  std::vector<ParameterSpec> cand{
      param("temp2", "Temperature", DataType::Real)};

  SideResult result = match_side(req, cand, t);
  CHECK(result.sim == DegreeScore::exact);
  CHECK(result.pairs == std::vector<NamePair>{{"temp", "temp2"}});
}

TEST_CASE("match_side fails when the requester outnumbers the candidate") {
  Taxonomy t = fixture_taxonomy();
  std::vector<ParameterSpec> req{param("a", "Car", DataType::String),
                                 param("b", "Car", DataType::String)};
  std::vector<ParameterSpec> cand{param("x", "Car", DataType::String)};

  SideResult result = match_side(req, cand, t);
  CHECK(result.sim == DegreeScore::fail);
  CHECK(result.pairs.empty());
}

TEST_CASE("match_side settles on the cross assignment at level 7") {
  // Concepts shaped so the scores come out a1-b1=10, a1-b2=7, a2-b1=7,
  // a2-b2=0: at level 10 a2 is stranded, at 7 the complete matching is
  // forced through the cross assignment.
  Taxonomy t = Taxonomy::from_structure(
      {"B1", "GM", "M", "N", "A1", "A2"},
      {{"A1", "B1"}, {"A1", "M"}, {"M", "GM"}, {"A2", "N"}, {"N", "B1"}});
  std::vector<ParameterSpec> req{param("a1", "A1", DataType::String),
                                 param("a2", "A2", DataType::String)};
  std::vector<ParameterSpec> cand{param("b1", "B1", DataType::String),
                                  param("b2", "GM", DataType::String)};

  SideResult result = match_side(req, cand, t);
  CHECK(result.sim == DegreeScore::partial);
  CHECK(result.pairs == std::vector<NamePair>{{"a1", "b2"}, {"a2", "b1"}});
}

TEST_CASE("empty requester side is satisfied at 10") {
  Taxonomy t = fixture_taxonomy();
  std::vector<ParameterSpec> req;
  std::vector<ParameterSpec> cand{param("x", "Car", DataType::String)};
  SideResult result = match_side(req, cand, t);
  CHECK(result.sim == DegreeScore::exact);
  CHECK(result.pairs.empty());
}

TEST_CASE("parsim follows the weakest-link cascade") {
  CHECK(parsim(DegreeScore::exact, DegreeScore::exact) == DegreeScore::exact);
  CHECK(parsim(DegreeScore::fail, DegreeScore::exact) == DegreeScore::fail);
  CHECK(parsim(DegreeScore::partial, DegreeScore::weak) == DegreeScore::weak);
}

TEST_CASE("parsim equals min over the whole value set") {
  for (DegreeScore a : kAllDegrees)
    for (DegreeScore b : kAllDegrees)
      CHECK(degree_value(parsim(a, b)) ==
            std::min(degree_value(a), degree_value(b)));
}

TEST_CASE("typesim on matching diagonals is 10") {
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req;
  req.id = "r";
  req.outputs = {param("o", "Car", DataType::Real)};
  req.inputs = {param("i", "Car", DataType::Integer)};
  ServiceProfile cand;
  cand.id = "c";
  cand.outputs = {param("o2", "Car", DataType::Real)};
  cand.inputs = {param("i2", "Car", DataType::Integer)};
  CHECK(typesim(req, cand, m) == 10);
}

TEST_CASE("typesim takes the table value on a single pair") {
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req;
  req.id = "r";
  req.outputs = {param("o", "Car", DataType::String)};
  ServiceProfile cand;
  cand.id = "c";
  cand.outputs = {param("o2", "Car", DataType::Date)};
  // String row, Date column = 8; the empty input side scores 10.
  CHECK(typesim(req, cand, m) == 8);
}

TEST_CASE("typesim is the minimum of the two side levels") {
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req;
  req.id = "r";
  req.outputs = {param("o", "Car", DataType::Real)};
  req.inputs = {param("i", "Car", DataType::Integer)};
  ServiceProfile cand;
  cand.id = "c";
  cand.outputs = {param("o2", "Car", DataType::Real)};   // level 10
  cand.inputs = {param("i2", "Car", DataType::Real)};    // (Integer,Real)=5
  TypeSimSides sides = typesim_sides(req, cand, m);
  CHECK(sides.outputs.level == 10);
  CHECK(sides.inputs.level == 5);
  CHECK(sides.value == 5);
  CHECK(typesim(req, cand, m) == 5);
}

TEST_CASE("final score anchor points") {
  CHECK(final_score(DegreeScore::fail, 10).thirds() == 0);
  CHECK(final_score(DegreeScore::exact, 10).to_string() == "100.00");
  FinalScore mixed = final_score(DegreeScore::partial, 5);
  CHECK(mixed.thirds() == 190);
  CHECK(mixed.to_string() == "63.33");
  CHECK(mixed.hundredths() == 6333);
}

TEST_CASE("final score is monotone in both arguments") {
  for (std::size_t i = 0; i + 1 < kAllDegrees.size(); ++i)
    for (int t = 0; t <= 10; ++t)
      CHECK(final_score(kAllDegrees[i], t) <=
            final_score(kAllDegrees[i + 1], t));
  for (DegreeScore d : kAllDegrees)
    for (int t = 0; t < 10; ++t)
      CHECK(final_score(d, t) <= final_score(d, t + 1));
}

TEST_CASE("final score is 100 exactly on the double perfect") {
  for (DegreeScore d : kAllDegrees)
    for (int t = 0; t <= 10; ++t) {
      FinalScore f = final_score(d, t);
      bool perfect = d == DegreeScore::exact && t == 10;
      CHECK((f.thirds() == 300) == perfect);
      // And 0 exactly when the semantic phase failed.
      CHECK((f.thirds() == 0) == (d == DegreeScore::fail));
    }
}

TEST_CASE("match_pair against an identical twin is perfect") {
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = weather_request();
  ServiceProfile twin = req;
  twin.id = "twinService";

  MatchReport report = match_pair(req, twin, t, m);
  CHECK(report.parsim == DegreeScore::exact);
  CHECK(report.typesim == 10);
  CHECK(report.final.to_string() == "100.00");
  CHECK(report.output_pairs == std::vector<NamePair>{{"temp", "temp"}});
  CHECK(report.input_pairs == std::vector<NamePair>{{"city", "city"}});
}

TEST_CASE("a candidate missing the requested output concept fails") {
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = weather_request();
  ServiceProfile cand;
  cand.id = "dogFinder";
  cand.inputs = {param("city", "City", DataType::String)};
  cand.outputs = {param("dog", "Dog", DataType::String)};

  MatchReport report = match_pair(req, cand, t, m);
  CHECK(report.outsim == DegreeScore::fail);
  CHECK(report.parsim == DegreeScore::fail);
  CHECK(report.final.thirds() == 0);
  CHECK(report.output_pairs.empty());
}

TEST_CASE("worked pair agrees with the phase-by-phase oracle") {
  Taxonomy t = fixture_taxonomy();
  RawTaxonomy raw = fixture_raw_taxonomy();
  TypeMatrix m = TypeMatrix::standard();

  ServiceProfile req;
  req.id = "req";
  req.inputs = {param("where", "City", DataType::String),
                param("when", "Thing", DataType::Date)};
  req.outputs = {param("ride", "Car", DataType::String),
                 param("deg", "Temperature", DataType::Real)};

  ServiceProfile cand;
  cand.id = "cand";
  cand.inputs = {param("place", "Place", DataType::String),
                 param("date", "Thing", DataType::Date)};
  cand.outputs = {param("vehicle", "Vehicle", DataType::String),
                  param("temp", "Temperature", DataType::Integer)};

  OracleReport expected = match_pair_bruteforce(req, cand, raw, m);
  MatchReport report = match_pair(req, cand, t, m);

  CHECK(degree_value(report.outsim) == expected.outsim);
  CHECK(degree_value(report.insim) == expected.insim);
  CHECK(degree_value(report.parsim) == expected.parsim);
  CHECK(report.typesim == expected.typesim);
  CHECK(report.final.thirds() == expected.final_thirds);
}

TEST_CASE("random pairs agree with the phase-by-phase oracle") {
  std::mt19937 rng(20240611);
  Taxonomy t = fixture_taxonomy();
  RawTaxonomy raw = fixture_raw_taxonomy();
  TypeMatrix m = TypeMatrix::standard();

  for (int round = 0; round < 150; ++round) {
    ServiceProfile req = random_profile(rng, t.concepts(), "req");
    ServiceProfile cand = random_profile(rng, t.concepts(), "cand");

    OracleReport expected = match_pair_bruteforce(req, cand, raw, m);
    MatchReport report = match_pair(req, cand, t, m);

    CHECK(degree_value(report.outsim) == expected.outsim);
    CHECK(degree_value(report.insim) == expected.insim);
    CHECK(degree_value(report.parsim) == expected.parsim);
    CHECK(report.typesim == expected.typesim);
    CHECK(report.final.thirds() == expected.final_thirds);

    // Witness invariants: a positive degree covers each requester
    // parameter exactly once; failure carries no pairs.
    for (auto [sim, pairs, side] :
         {std::tuple{report.outsim, report.output_pairs, req.outputs},
          std::tuple{report.insim, report.input_pairs, req.inputs}}) {
      if (sim == DegreeScore::fail) {
        CHECK(pairs.empty());
      } else {
        CHECK(pairs.size() == side.size());
        for (const auto& p : side)
          CHECK(std::count_if(pairs.begin(), pairs.end(),
                              [&](const NamePair& np) {
                                return np.first == p.name;
                              }) == 1);
      }
    }
  }
}

TEST_CASE("rank puts the twin first and the stranger last") {
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = weather_request();

  ServiceProfile twin = req;
  twin.id = "twin";
  ServiceProfile stranger;
  stranger.id = "stranger";
  stranger.outputs = {param("dog", "Dog", DataType::Boolean)};

  Registry r;
  r.add(stranger);
  r.add(twin);

  auto reports = rank(req, r, t, m);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].candidate_id == "twin");
  CHECK(reports[0].final.to_string() == "100.00");
  CHECK(reports[1].candidate_id == "stranger");
  CHECK(reports[1].final.thirds() == 0);
}

TEST_CASE("rank over an empty registry is empty") {
  Taxonomy t = fixture_taxonomy();
  auto reports = rank(weather_request(), Registry{}, t,
                      TypeMatrix::standard());
  CHECK(reports.empty());
}

TEST_CASE("equal finals are ordered by candidate id") {
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = weather_request();

  ServiceProfile twin_b = req;
  twin_b.id = "bravo";
  ServiceProfile twin_a = req;
  twin_a.id = "alpha";

  Registry r;
  r.add(twin_b);
  r.add(twin_a);

  auto reports = rank(req, r, t, m);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].candidate_id == "alpha");
  CHECK(reports[1].candidate_id == "bravo");
}

TEST_CASE("min_final drops weaker candidates") {
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = weather_request();

  ServiceProfile twin = req;
  twin.id = "twin";
  ServiceProfile stranger;
  stranger.id = "stranger";
  stranger.outputs = {param("dog", "Dog", DataType::Boolean)};

  Registry r;
  r.add(twin);
  r.add(stranger);

  CHECK(rank(req, r, t, m, 50.0).size() == 1);
  CHECK(rank(req, r, t, m, 100.0).size() == 1);
  CHECK(rank(req, r, t, m).size() == 2);
}

TEST_CASE("rank order ignores registry insertion order") {
  std::mt19937 rng(20240612);
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  ServiceProfile req = random_profile(rng, t.concepts(), "req");

  std::vector<ServiceProfile> services;
  for (int i = 0; i < 12; ++i)
    services.push_back(
        random_profile(rng, t.concepts(), "svc" + std::to_string(i)));

  Registry base;
  for (const auto& s : services) base.add(s);
  auto expected = rank(req, base, t, m);

  for (int round = 0; round < 5; ++round) {
    std::shuffle(services.begin(), services.end(), rng);
    Registry shuffled;
    for (const auto& s : services) shuffled.add(s);
    auto reports = rank(req, shuffled, t, m);
    REQUIRE(reports.size() == expected.size());
    for (std::size_t i = 0; i < reports.size(); ++i)
      CHECK(reports[i] == expected[i]);
  }
}

TEST_CASE("report JSON round-trips exactly") {
  std::mt19937 rng(20240613);
  Taxonomy t = fixture_taxonomy();
  TypeMatrix m = TypeMatrix::standard();
  for (int round = 0; round < 25; ++round) {
    ServiceProfile req = random_profile(rng, t.concepts(), "req");
    ServiceProfile cand = random_profile(rng, t.concepts(), "cand");
    MatchReport report = match_pair(req, cand, t, m);
    MatchReport back = report_from_json_text(report_to_json_text(report));
    CHECK(back == report);
  }
}

TEST_CASE("report parsing rejects broken documents") {
  CHECK_THROWS_AS(report_from_json_text("nope"), InputError);
  CHECK_THROWS_AS(report_from_json_text(R"({"requester": "a"})"), InputError);
  CHECK_THROWS_AS(report_from_json_text(R"({
    "requester": "a", "candidate": "b",
    "outsim": 5, "insim": 10, "parsim": 10, "typesim": 10
  })"),
                  InputError);
}
