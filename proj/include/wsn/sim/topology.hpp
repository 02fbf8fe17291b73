#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsn/core/types.hpp"

namespace wsn {

/// The simulated world: N nodes (ids 0..N-1) and weighted undirected links.
/// At most one link per node pair, no self loops.
class Topology {
 public:
  struct Link {
    NodeId a;
    NodeId b;
    std::uint32_t latency_ms = 1;
    double drop_prob = 0.0;
    std::uint8_t quality = 255;
  };

  Topology() = default;
  explicit Topology(std::size_t node_count) : node_count_(node_count) {}

  std::size_t node_count() const { return node_count_; }
  std::size_t link_count() const { return links_.size(); }

  bool has_node(NodeId n) const { return !n.is_broadcast() && n.value < node_count_; }

  ErrorCode add_link(NodeId a, NodeId b, std::uint32_t latency_ms = 1, double drop_prob = 0.0,
                     std::uint8_t quality = 255);
  ErrorCode remove_link(NodeId a, NodeId b);

  const Link* find_link(NodeId a, NodeId b) const;
  bool has_link(NodeId a, NodeId b) const { return find_link(a, b) != nullptr; }

  ErrorCode link_quality(NodeId a, NodeId b, std::uint8_t& out) const;

  /// Neighbor ids in ascending order.
  const std::vector<NodeId>& neighbors(NodeId n) const;

  const std::vector<Link>& links() const { return links_; }

 private:
  std::size_t index_of(NodeId a, NodeId b) const;  // links_.size() when absent

  std::size_t node_count_ = 0;
  std::vector<Link> links_;
  mutable std::vector<std::vector<NodeId>> adjacency_;  // rebuilt lazily
  mutable bool adjacency_dirty_ = true;

  void rebuild_adjacency() const;
};

/// Diagnostic for text-input loaders; line is 1-based, 0 when not line-bound.
struct ParseError {
  int line = 0;
  std::string message;
};

/// Parses the edge-list format: first non-comment line is the node count N,
/// then one link per line as "u v [latency_ms] [drop_prob] [quality]" with
/// defaults 1, 0.0, 255. '#' starts a comment, blank lines are skipped.
ErrorCode load_topology(std::string_view text, Topology& out, ParseError& err);

}  // namespace wsn
