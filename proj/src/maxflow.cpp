#include "wsmatch/maxflow.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wsmatch {

// ---------------------------------------------------------------------------
// FlowNetwork / Flow
// ---------------------------------------------------------------------------

FlowNetwork::FlowNetwork(int vertex_count, int source, int sink)
    : source_(source), sink_(sink) {
  if (vertex_count < 2)
    throw std::invalid_argument("flow network needs at least source and sink");
  if (source < 0 || source >= vertex_count || sink < 0 ||
      sink >= vertex_count || source == sink)
    throw std::invalid_argument("source/sink out of range or equal");
  capacity_.assign(vertex_count, std::vector<int>(vertex_count, 0));
  names_.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) names_[v] = "v" + std::to_string(v);
}

void FlowNetwork::set_capacity(int u, int v, int capacity) {
  if (capacity < 0) throw std::invalid_argument("capacity must be >= 0");
  capacity_[u][v] = capacity;
}

void FlowNetwork::set_vertex_name(int v, std::string name) {
  names_[v] = std::move(name);
}

Flow::Flow(int vertex_count) {
  flow_.assign(vertex_count, std::vector<int>(vertex_count, 0));
}

void Flow::add(int u, int v, int delta) {
  flow_[u][v] += delta;
  flow_[v][u] = -flow_[u][v];
}

int residual_capacity(const FlowNetwork& net, const Flow& flow, int u, int v) {
  return net.capacity(u, v) - flow.at(u, v);
}

int flow_value(const FlowNetwork& net, const Flow& flow) {
  int value = 0;
  for (int v = 0; v < net.vertex_count(); ++v)
    value += flow.at(net.source(), v);
  return value;
}

std::optional<std::string> flow_property_violation(const FlowNetwork& net,
                                                   const Flow& flow) {
  const int n = net.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (flow.at(u, v) > net.capacity(u, v))
        return "capacity constraint violated on (" + std::to_string(u) + "," +
               std::to_string(v) + ")";
      if (flow.at(u, v) != -flow.at(v, u))
        return "skew symmetry violated on (" + std::to_string(u) + "," +
               std::to_string(v) + ")";
    }
  }
  for (int u = 0; u < n; ++u) {
    if (u == net.source() || u == net.sink()) continue;
    int net_out = 0;
    for (int v = 0; v < n; ++v) net_out += flow.at(u, v);
    if (net_out != 0)
      return "flow conservation violated at vertex " + std::to_string(u);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Augmenting paths and Ford-Fulkerson
// ---------------------------------------------------------------------------

std::optional<std::vector<int>> find_augmenting_path(const FlowNetwork& net,
                                                     const Flow& flow) {
  const int n = net.vertex_count();
  std::vector<int> parent(n, -1);
  std::deque<int> queue;
  parent[net.source()] = net.source();
  queue.push_back(net.source());

  while (!queue.empty() && parent[net.sink()] == -1) {
    int u = queue.front();
    queue.pop_front();
    // Ascending scan keeps path selection deterministic.
    for (int v = 0; v < n; ++v) {
      if (parent[v] == -1 && residual_capacity(net, flow, u, v) > 0) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }

  if (parent[net.sink()] == -1) return std::nullopt;

  std::vector<int> path;
  for (int v = net.sink(); v != net.source(); v = parent[v]) path.push_back(v);
  path.push_back(net.source());
  std::reverse(path.begin(), path.end());
  return path;
}

MaxFlowResult ford_fulkerson(const FlowNetwork& net,
                             const AugmentObserver& on_augment) {
  MaxFlowResult result{Flow(net.vertex_count()), 0, 0};

  while (auto path = find_augmenting_path(net, result.flow)) {
    // Bottleneck residual capacity along the path.
    int path_capacity = residual_capacity(net, result.flow, (*path)[0],
                                          (*path)[1]);
    for (std::size_t i = 1; i + 1 < path->size(); ++i)
      path_capacity = std::min(
          path_capacity,
          residual_capacity(net, result.flow, (*path)[i], (*path)[i + 1]));
    assert(path_capacity > 0);

    for (std::size_t i = 0; i + 1 < path->size(); ++i)
      result.flow.add((*path)[i], (*path)[i + 1], path_capacity);

    ++result.augmentations;
    if (on_augment) on_augment(result.flow, result.augmentations);
  }

  result.value = flow_value(net, result.flow);
  return result;
}

// ---------------------------------------------------------------------------
// Bipartite matching reduction
// ---------------------------------------------------------------------------

BipartiteInstance::BipartiteInstance(std::vector<std::string> left,
                                     std::vector<std::string> right)
    : left_(std::move(left)), right_(std::move(right)) {}

void BipartiteInstance::add_edge(int left, int right, int weight) {
  if (left < 0 || left >= left_count())
    throw std::invalid_argument("left index out of range");
  if (right < 0 || right >= right_count())
    throw std::invalid_argument("right index out of range");
  if (weight < 0 || weight > 10)
    throw std::invalid_argument("edge weight out of range [0,10]");
  for (const Edge& e : edges_)
    if (e.left == left && e.right == right)
      throw std::invalid_argument("duplicate edge");
  edges_.push_back({left, right, weight});
}

FlowNetwork build_matching_network(const BipartiteInstance& inst,
                                   int min_weight) {
  const int left = inst.left_count();
  const int right = inst.right_count();
  FlowNetwork net(left + right + 2, 0, left + right + 1);

  net.set_vertex_name(net.source(), "s");
  net.set_vertex_name(net.sink(), "t");
  for (int i = 0; i < left; ++i) {
    net.set_capacity(net.source(), 1 + i, 1);
    net.set_vertex_name(1 + i, inst.left_labels()[i]);
  }
  for (int j = 0; j < right; ++j) {
    net.set_capacity(1 + left + j, net.sink(), 1);
    net.set_vertex_name(1 + left + j, inst.right_labels()[j]);
  }
  for (const auto& e : inst.edges())
    if (e.weight >= min_weight)
      net.set_capacity(1 + e.left, 1 + left + e.right, 1);

  return net;
}

std::vector<std::pair<int, int>> extract_matching(
    const FlowNetwork& net, const Flow& flow, const BipartiteInstance& inst) {
  const int left = inst.left_count();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < inst.right_count(); ++j)
      if (net.capacity(1 + i, 1 + left + j) > 0 &&
          flow.at(1 + i, 1 + left + j) == 1)
        pairs.emplace_back(i, j);
  return pairs;
}

MatchLevel complete_match_level(const BipartiteInstance& inst,
                                std::span<const int> levels) {
  // A requester side with nothing to match is satisfied outright.
  if (inst.left_count() == 0) return {10, {}};

  std::set<int, std::greater<int>> thresholds;
  for (int level : levels)
    if (level > 0) thresholds.insert(level);

  for (int threshold : thresholds) {
    FlowNetwork net = build_matching_network(inst, threshold);
    MaxFlowResult result = ford_fulkerson(net);
    if (result.value == inst.left_count())
      return {threshold, extract_matching(net, result.flow, inst)};
  }
  return {0, {}};
}

std::string dump_network(const FlowNetwork& net, const Flow* flow) {
  std::ostringstream out;
  for (int u = 0; u < net.vertex_count(); ++u) {
    for (int v = 0; v < net.vertex_count(); ++v) {
      if (net.capacity(u, v) == 0) continue;
      out << net.vertex_name(u) << " -> " << net.vertex_name(v)
          << " cap=" << net.capacity(u, v);
      if (flow) out << " flow=" << flow->at(u, v);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace wsmatch
