#ifndef WSMATCH_MAXFLOW_HPP
#define WSMATCH_MAXFLOW_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wsmatch {

/// Capacitated directed graph over dense vertex indices 0..n-1 with a
/// distinguished source and sink. Capacity is a total mapping: absent
/// edges have capacity 0. All capacities are non-negative integers.
class FlowNetwork {
 public:
  FlowNetwork(int vertex_count, int source, int sink);

  void set_capacity(int u, int v, int capacity);
  int capacity(int u, int v) const { return capacity_[u][v]; }

  int vertex_count() const { return static_cast<int>(capacity_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  /// Optional display names, used by the debug dump.
  void set_vertex_name(int v, std::string name);
  const std::string& vertex_name(int v) const { return names_[v]; }

 private:
  int source_;
  int sink_;
  std::vector<std::vector<int>> capacity_;
  std::vector<std::string> names_;
};

/// Integer flow assignment over the same vertex indices. Starts at zero
/// everywhere; add() keeps skew symmetry (f[v][u] = -f[u][v]) so residual
/// capacities of reverse edges come out right without special cases.
class Flow {
 public:
  explicit Flow(int vertex_count);

  int at(int u, int v) const { return flow_[u][v]; }
  void add(int u, int v, int delta);

  int vertex_count() const { return static_cast<int>(flow_.size()); }

 private:
  std::vector<std::vector<int>> flow_;
};

/// c_f(u,v) = c(u,v) - f(u,v). Positive exactly on residual edges.
int residual_capacity(const FlowNetwork& net, const Flow& flow, int u, int v);

/// Net flow out of the source.
int flow_value(const FlowNetwork& net, const Flow& flow);

/// First violated flow property (capacity constraint, skew symmetry, or
/// conservation), or nullopt when the flow is valid on `net`.
std::optional<std::string> flow_property_violation(const FlowNetwork& net,
                                                   const Flow& flow);

/// Shortest s->t path in the residual network, found by breadth-first
/// search scanning neighbors in ascending vertex index (deterministic
/// tie-break). Returns the vertex sequence, or nullopt when the flow is
/// already maximum.
std::optional<std::vector<int>> find_augmenting_path(const FlowNetwork& net,
                                                     const Flow& flow);

struct MaxFlowResult {
  Flow flow;
  int value = 0;
  int augmentations = 0;
};

/// Called after each augmentation with the flow so far and the 1-based
/// step number; lets tests check invariants inside the loop.
using AugmentObserver = std::function<void(const Flow&, int step)>;

/// Ford-Fulkerson with BFS path selection: start from the zero flow,
/// push the bottleneck residual capacity along each augmenting path until
/// none remains. Integer capacities guarantee termination; the result is
/// a maximum flow.
MaxFlowResult ford_fulkerson(const FlowNetwork& net,
                             const AugmentObserver& on_augment = {});

/// A weighted bipartite matching problem: left/right vertex labels plus
/// edges (left index, right index, weight in [0,10]). At most one edge
/// per pair.
class BipartiteInstance {
 public:
  BipartiteInstance(std::vector<std::string> left,
                    std::vector<std::string> right);

  void add_edge(int left, int right, int weight);

  int left_count() const { return static_cast<int>(left_.size()); }
  int right_count() const { return static_cast<int>(right_.size()); }
  const std::vector<std::string>& left_labels() const { return left_; }
  const std::vector<std::string>& right_labels() const { return right_; }

  struct Edge {
    int left;
    int right;
    int weight;
  };
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
};

/// Unit-capacity flow network for the instance, keeping only edges with
/// weight >= min_weight. Layout: source 0, left vertices 1..L,
/// right vertices L+1..L+R, sink L+R+1. Source feeds every left vertex,
/// every right vertex feeds the sink, all capacities 1.
FlowNetwork build_matching_network(const BipartiteInstance& inst,
                                   int min_weight);

/// Middle edges carrying one unit of flow, as (left index, right index)
/// pairs in ascending left order. On networks from build_matching_network
/// this is a matching whose cardinality equals the flow value.
std::vector<std::pair<int, int>> extract_matching(const FlowNetwork& net,
                                                  const Flow& flow,
                                                  const BipartiteInstance& inst);

struct MatchLevel {
  int level = 0;
  std::vector<std::pair<int, int>> pairs;
};

/// Highest threshold in `levels` at which every left vertex can still be
/// matched using only edges of at least that weight, with the witness
/// matching. Returns level 0 and no witness when no threshold admits a
/// complete matching. Non-positive or duplicate levels are ignored; an
/// empty left side is vacuously complete at level 10.
MatchLevel complete_match_level(const BipartiteInstance& inst,
                                std::span<const int> levels);

/// Line-oriented edge dump ("u -> v cap=1 flow=1"), for diagnostics.
std::string dump_network(const FlowNetwork& net, const Flow* flow = nullptr);

}  // namespace wsmatch

#endif  // WSMATCH_MAXFLOW_HPP
