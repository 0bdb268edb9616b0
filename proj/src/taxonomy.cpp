#include "wsmatch/taxonomy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "wsmatch/errors.hpp"

namespace wsmatch {

namespace {

// DFS coloring over the parent relation. Returns the vertices of the
// first cycle found, in edge order, or empty when the graph is acyclic.
std::vector<int> find_cycle(const std::vector<std::vector<int>>& parents) {
  enum class Color { white, grey, black };
  const int n = static_cast<int>(parents.size());
  std::vector<Color> color(n, Color::white);
  std::vector<int> stack;

  // Iterative DFS keeping the grey path in `stack` for cycle reporting.
  std::function<std::vector<int>(int)> visit = [&](int v) -> std::vector<int> {
    color[v] = Color::grey;
    stack.push_back(v);
    for (int p : parents[v]) {
      if (color[p] == Color::grey) {
        auto start = std::find(stack.begin(), stack.end(), p);
        return {start, stack.end()};
      }
      if (color[p] == Color::white) {
        auto cycle = visit(p);
        if (!cycle.empty()) return cycle;
      }
    }
    color[v] = Color::black;
    stack.pop_back();
    return {};
  };

  for (int v = 0; v < n; ++v) {
    if (color[v] == Color::white) {
      auto cycle = visit(v);
      if (!cycle.empty()) return cycle;
    }
  }
  return {};
}

}  // namespace

Taxonomy Taxonomy::from_structure(
    const std::vector<ConceptId>& concepts,
    const std::vector<std::pair<ConceptId, ConceptId>>& child_parent_edges) {
  Taxonomy t;
  for (const auto& id : concepts) {
    if (id.empty()) throw InputError("concept id must be non-empty");
    if (!t.index_.emplace(id, static_cast<int>(t.ids_.size())).second)
      throw InputError("duplicate concept id \"" + id + "\"");
    t.ids_.push_back(id);
  }

  const int n = static_cast<int>(t.ids_.size());
  t.parents_.assign(n, {});
  for (const auto& [child, parent] : child_parent_edges) {
    auto child_it = t.index_.find(child);
    if (child_it == t.index_.end())
      throw InputError("edge references undeclared concept \"" + child + "\"");
    auto parent_it = t.index_.find(parent);
    if (parent_it == t.index_.end())
      throw InputError("parent \"" + parent + "\" of concept \"" + child +
                       "\" is not declared");
    auto& row = t.parents_[child_it->second];
    if (std::find(row.begin(), row.end(), parent_it->second) == row.end())
      row.push_back(parent_it->second);
  }

  auto cycle = find_cycle(t.parents_);
  if (!cycle.empty()) {
    std::ostringstream msg;
    msg << "taxonomy cycle detected: ";
    for (int v : cycle) msg << t.ids_[v] << " -> ";
    msg << t.ids_[cycle.front()];
    throw InputError(msg.str());
  }

  // Strict-ancestor closure. Acyclicity makes the recursion well-founded.
  t.ancestor_.assign(n, std::vector<bool>(n, false));
  std::vector<bool> done(n, false);
  std::function<void(int)> close = [&](int v) {
    if (done[v]) return;
    done[v] = true;
    for (int p : t.parents_[v]) {
      close(p);
      t.ancestor_[v][p] = true;
      for (int a = 0; a < n; ++a)
        if (t.ancestor_[p][a]) t.ancestor_[v][a] = true;
    }
  };
  for (int v = 0; v < n; ++v) close(v);

  return t;
}

Taxonomy Taxonomy::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed taxonomy document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("concepts") ||
      !doc["concepts"].is_array())
    throw InputError("taxonomy document must be {\"concepts\": [...]}");

  std::vector<ConceptId> concepts;
  std::vector<std::pair<ConceptId, ConceptId>> edges;
  for (const auto& entry : doc["concepts"]) {
    if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string())
      throw InputError("concept entry missing string \"id\"");
    ConceptId id = entry["id"].get<std::string>();
    concepts.push_back(id);
    if (entry.contains("parents")) {
      if (!entry["parents"].is_array())
        throw InputError("\"parents\" of concept \"" + id +
                         "\" must be an array");
      for (const auto& p : entry["parents"]) {
        if (!p.is_string())
          throw InputError("parent of concept \"" + id +
                           "\" must be a string");
        edges.emplace_back(id, p.get<std::string>());
      }
    }
  }
  return from_structure(concepts, edges);
}

int Taxonomy::index_of(const ConceptId& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw InputError("unknown concept id \"" + id + "\"");
  return it->second;
}

bool Taxonomy::contains(const ConceptId& id) const {
  return index_.count(id) != 0;
}

bool Taxonomy::same_class(const ConceptId& a, const ConceptId& b) const {
  return index_of(a) == index_of(b);
}

bool Taxonomy::is_direct_subclass(const ConceptId& child,
                                  const ConceptId& parent) const {
  int c = index_of(child);
  int p = index_of(parent);
  const auto& row = parents_[c];
  return std::find(row.begin(), row.end(), p) != row.end();
}

bool Taxonomy::subsumes(const ConceptId& ancestor,
                        const ConceptId& descendant) const {
  int a = index_of(ancestor);
  int d = index_of(descendant);
  return ancestor_[d][a];
}

std::size_t Taxonomy::edge_count() const {
  std::size_t count = 0;
  for (const auto& row : parents_) count += row.size();
  return count;
}

std::vector<ConceptId> Taxonomy::parents_of(const ConceptId& id) const {
  std::vector<ConceptId> out;
  for (int p : parents_[index_of(id)]) out.push_back(ids_[p]);
  return out;
}

}  // namespace wsmatch
