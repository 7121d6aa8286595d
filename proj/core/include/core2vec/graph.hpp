#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace core2vec {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId id;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected graph in CSR form. Neighbor lists are sorted by id,
/// every edge is stored in both endpoint lists, weights are positive, and
/// there are no self-loops or duplicate entries. Safe for unsynchronized
/// concurrent reads once built.
class Graph {
 public:
  NodeId node_count() const noexcept { return static_cast<NodeId>(offsets_.size() - 1); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::size_t degree(NodeId u) const;

  /// Neighbors of u sorted by id.
  std::span<const Neighbor> neighbors(NodeId u) const;

  /// True iff (u,v) is an edge. Symmetric; O(log deg(u)).
  bool edge_exists(NodeId u, NodeId v) const;

  /// Weight of edge (u,v), or nullopt when absent.
  std::optional<double> edge_weight(NodeId u, NodeId v) const;

  const std::string& label(NodeId u) const;
  std::optional<NodeId> find_node(std::string_view token) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Number of self-loop entries dropped while building.
  std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }

  /// "nodes=N edges=M avg_degree=X"
  std::string summary() const;

 private:
  friend class GraphBuilder;

  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::size_t dropped_self_loops_ = 0;

  void check_node(NodeId u) const;
};

/// Accumulates directed (u,v,w) entries and produces a canonical undirected
/// Graph: the input is symmetrized, parallel edges are collapsed by weight
/// summation (order-independent), and self-loops are dropped with a counter.
class GraphBuilder {
 public:
  /// Interns a token, assigning dense ids in first-seen order.
  NodeId intern(std::string_view token);

  /// Declares a node without edges (isolated nodes are retained).
  void add_node(std::string_view token) { intern(token); }

  void add_edge(std::string_view a, std::string_view b, double weight = 1.0);
  void add_edge(NodeId a, NodeId b, double weight = 1.0);

  std::size_t node_count() const noexcept { return labels_.size(); }

  Graph build();

 private:
  struct RawEdge {
    NodeId a, b;
    double weight;
  };

  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<RawEdge> edges_;
  std::size_t dropped_self_loops_ = 0;
};

struct LoadOptions {
  /// Use the third column as edge weight; otherwise every weight is 1.
  bool weighted = false;
  /// Lower-case tokens on load (word association networks).
  bool lowercase = false;
  /// Lines starting with any of these characters are skipped.
  std::string comment_prefixes = "#%";
};

/// Parses a whitespace-separated "tokenA tokenB [weight]" edge list.
/// Directed input is symmetrized with weight summation; malformed lines
/// (wrong field count, non-numeric or non-positive weight) raise ParseError
/// with the offending line number. An edge-free file raises ParseError.
Graph load_edge_list(const std::string& path, const LoadOptions& options = {});

/// Writes one "tokenA tokenB weight" line per undirected edge, with enough
/// digits that load_edge_list round-trips labels, edges and weights exactly.
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace core2vec
