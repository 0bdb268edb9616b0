// wsmatch: validate taxonomies, manage a service registry, and score
// substitution candidates for a request.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 registry conflict.

#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wsmatch/errors.hpp"
#include "wsmatch/matchmaker.hpp"
#include "wsmatch/maxflow.hpp"
#include "wsmatch/profile.hpp"
#include "wsmatch/scoring.hpp"
#include "wsmatch/taxonomy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConflict = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wsmatch::InputError("cannot read file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw wsmatch::InputError("cannot write file \"" + path + "\"");
  out << content;
}

wsmatch::Taxonomy load_taxonomy(const std::string& path) {
  return wsmatch::Taxonomy::from_json(read_file(path));
}

wsmatch::TypeMatrix load_types(const std::string& path) {
  if (path.empty()) return wsmatch::TypeMatrix::standard();
  return wsmatch::TypeMatrix::from_json(read_file(path));
}

wsmatch::Registry load_registry(const std::string& path,
                                bool missing_file_is_empty) {
  if (missing_file_is_empty && !std::filesystem::exists(path))
    return wsmatch::Registry{};
  return wsmatch::Registry::from_json(read_file(path));
}

wsmatch::ServiceProfile load_validated_profile(const std::string& path,
                                               const wsmatch::Taxonomy& t) {
  wsmatch::ServiceProfile p = wsmatch::parse_profile(read_file(path));
  auto issues = wsmatch::validate_profile(p, t);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "profile \"" << p.id << "\" does not validate:";
    for (const auto& issue : issues)
      msg << "\n  " << issue.side << " parameter \"" << issue.parameter
          << "\": unknown concept \"" << issue.concept_id << "\"";
    throw wsmatch::InputError(msg.str());
  }
  return p;
}

std::string format_pairs(const std::vector<wsmatch::NamePair>& pairs) {
  if (pairs.empty()) return "(none)";
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0) out << ", ";
    out << pairs[i].first << " -> " << pairs[i].second;
  }
  return out.str();
}

void print_report_table(const wsmatch::MatchReport& r) {
  std::cout << "requester: " << r.requester_id << "\n"
            << "candidate: " << r.candidate_id << "\n"
            << "  OUTSIM " << wsmatch::degree_value(r.outsim) << "  INSIM "
            << wsmatch::degree_value(r.insim) << "  PARSIM "
            << wsmatch::degree_value(r.parsim) << "  TYPESIM " << r.typesim
            << "  FINAL " << r.final.to_string() << "\n"
            << "  output pairs: " << format_pairs(r.output_pairs) << "\n"
            << "  input pairs:  " << format_pairs(r.input_pairs) << "\n";
}

void print_rank_table(const std::vector<wsmatch::MatchReport>& reports) {
  std::cout << std::left << std::setw(24) << "candidate" << std::right
            << std::setw(8) << "OUTSIM" << std::setw(7) << "INSIM"
            << std::setw(8) << "PARSIM" << std::setw(9) << "TYPESIM"
            << std::setw(8) << "FINAL" << "\n";
  for (const auto& r : reports) {
    std::cout << std::left << std::setw(24) << r.candidate_id << std::right
              << std::setw(8) << wsmatch::degree_value(r.outsim)
              << std::setw(7) << wsmatch::degree_value(r.insim) << std::setw(8)
              << wsmatch::degree_value(r.parsim) << std::setw(9) << r.typesim
              << std::setw(8) << r.final.to_string() << "\n";
  }
}

void print_side_explanation(std::ostream& os, const std::string& title,
                            const wsmatch::BipartiteInstance& inst,
                            const wsmatch::MatchLevel& level) {
  os << title << ":\n";
  if (inst.edges().empty()) {
    os << "  edges: (none)\n";
  } else {
    for (const auto& e : inst.edges())
      os << "  edge " << inst.left_labels()[e.left] << " -> "
         << inst.right_labels()[e.right] << "  weight " << e.weight << "\n";
  }
  os << "  level: " << level.level << "\n";
  if (!level.pairs.empty()) {
    os << "  pairs:";
    for (auto [l, r] : level.pairs)
      os << " " << inst.left_labels()[l] << "->" << inst.right_labels()[r];
    os << "\n";
  }
  // Re-solve at the chosen level (or the weakest probe when failed) so the
  // printed flows are the ones behind the verdict.
  if (inst.left_count() > 0) {
    int probe = level.level > 0 ? level.level : 1;
    wsmatch::FlowNetwork net = wsmatch::build_matching_network(inst, probe);
    wsmatch::MaxFlowResult solved = wsmatch::ford_fulkerson(net);
    std::istringstream dump(wsmatch::dump_network(net, &solved.flow));
    for (std::string line; std::getline(dump, line);)
      os << "    " << line << "\n";
  }
}

void explain_match(std::ostream& os, const wsmatch::ServiceProfile& req,
                   const wsmatch::ServiceProfile& cand,
                   const wsmatch::Taxonomy& taxonomy,
                   const wsmatch::TypeMatrix& types) {
  constexpr std::array<int, 3> degree_levels{10, 7, 3};
  auto out_sem = wsmatch::semantic_instance(req.outputs, cand.outputs,
                                            taxonomy);
  print_side_explanation(os, "outputs (semantic)", out_sem,
                         wsmatch::complete_match_level(out_sem, degree_levels));
  auto in_sem = wsmatch::semantic_instance(req.inputs, cand.inputs, taxonomy);
  print_side_explanation(os, "inputs (semantic)", in_sem,
                         wsmatch::complete_match_level(in_sem, degree_levels));

  std::vector<int> type_levels = types.positive_levels();
  auto out_type = wsmatch::type_instance(req.outputs, cand.outputs, types);
  print_side_explanation(os, "outputs (types)", out_type,
                         wsmatch::complete_match_level(out_type, type_levels));
  auto in_type = wsmatch::type_instance(req.inputs, cand.inputs, types);
  print_side_explanation(os, "inputs (types)", in_type,
                         wsmatch::complete_match_level(in_type, type_levels));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantic service substitution matchmaker"};
  app.require_subcommand(1);

  std::string taxonomy_path;
  std::string registry_path;
  std::string types_path;
  std::string profile_path;
  std::string request_path;
  std::string candidate_path;
  std::string service_id;
  bool json_mode = false;
  bool explain = false;
  std::optional<double> min_final;

  auto* check = app.add_subcommand("taxonomy-check",
                                   "validate a taxonomy file");
  check->add_option("--taxonomy", taxonomy_path, "taxonomy file")->required();

  auto* reg = app.add_subcommand("register",
                                 "validate and add a profile to the registry");
  reg->add_option("--taxonomy", taxonomy_path, "taxonomy file")->required();
  reg->add_option("--registry", registry_path, "registry file")->required();
  reg->add_option("profile", profile_path, "profile file")->required();

  auto* list = app.add_subcommand("list", "list registered services");
  list->add_option("--registry", registry_path, "registry file")->required();

  auto* remove = app.add_subcommand("remove",
                                    "remove a service from the registry");
  remove->add_option("--registry", registry_path, "registry file")->required();
  remove->add_option("id", service_id, "service id")->required();

  auto* match = app.add_subcommand("match", "score one candidate profile "
                                            "against a request profile");
  match->add_option("--taxonomy", taxonomy_path, "taxonomy file")->required();
  match->add_option("--types", types_path, "type matrix file");
  match->add_flag("--json", json_mode, "emit the report as JSON");
  match->add_flag("--explain", explain, "print the bipartite graphs, "
                                        "levels and flows behind the score");
  match->add_option("request", request_path, "request profile")->required();
  match->add_option("candidate", candidate_path, "candidate profile")
      ->required();

  auto* rank_cmd = app.add_subcommand("rank", "rank all registered services "
                                              "against a request profile");
  rank_cmd->add_option("--taxonomy", taxonomy_path, "taxonomy file")
      ->required();
  rank_cmd->add_option("--registry", registry_path, "registry file")
      ->required();
  rank_cmd->add_option("--types", types_path, "type matrix file");
  rank_cmd->add_flag("--json", json_mode, "emit reports as JSON");
  rank_cmd->add_option("--min-final", min_final,
                       "drop candidates scoring below this percentage");
  rank_cmd->add_option("request", request_path, "request profile")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help is not an error
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      wsmatch::Taxonomy t = load_taxonomy(taxonomy_path);
      std::cout << t.concept_count() << " concepts, " << t.edge_count()
                << " edges\n";
      return kExitOk;
    }

    if (reg->parsed()) {
      wsmatch::Taxonomy t = load_taxonomy(taxonomy_path);
      wsmatch::ServiceProfile p = load_validated_profile(profile_path, t);
      wsmatch::Registry r = load_registry(registry_path, true);
      r.add(std::move(p));
      write_file(registry_path, r.to_json_text());
      std::cout << "registered \"" << r.services().back().id << "\" ("
                << r.size() << " service" << (r.size() == 1 ? "" : "s")
                << ")\n";
      return kExitOk;
    }

    if (list->parsed()) {
      wsmatch::Registry r = load_registry(registry_path, false);
      for (const auto& s : r.services())
        std::cout << s.id << "  inputs=" << s.inputs.size()
                  << " outputs=" << s.outputs.size() << "\n";
      return kExitOk;
    }

    if (remove->parsed()) {
      wsmatch::Registry r = load_registry(registry_path, false);
      r.remove(service_id);
      write_file(registry_path, r.to_json_text());
      std::cout << "removed \"" << service_id << "\"\n";
      return kExitOk;
    }

    if (match->parsed()) {
      wsmatch::Taxonomy t = load_taxonomy(taxonomy_path);
      wsmatch::TypeMatrix types = load_types(types_path);
      wsmatch::ServiceProfile req = load_validated_profile(request_path, t);
      wsmatch::ServiceProfile cand = load_validated_profile(candidate_path, t);
      wsmatch::MatchReport report = wsmatch::match_pair(req, cand, t, types);
      if (json_mode)
        std::cout << wsmatch::report_to_json_text(report);
      else
        print_report_table(report);
      // With --json the explanation goes to stderr so stdout stays a
      // single parseable document.
      if (explain)
        explain_match(json_mode ? std::cerr : std::cout, req, cand, t, types);
      return kExitOk;
    }

    if (rank_cmd->parsed()) {
      wsmatch::Taxonomy t = load_taxonomy(taxonomy_path);
      wsmatch::TypeMatrix types = load_types(types_path);
      wsmatch::ServiceProfile req = load_validated_profile(request_path, t);
      wsmatch::Registry r = load_registry(registry_path, false);
      auto reports = wsmatch::rank(req, r, t, types, min_final);
      if (json_mode)
        std::cout << wsmatch::reports_to_json_text(reports);
      else
        print_rank_table(reports);
      return kExitOk;
    }
  } catch (const wsmatch::ConflictError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConflict;
  } catch (const wsmatch::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  return kExitUsage;
}
