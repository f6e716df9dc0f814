#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace forbconf {

// Simple undirected graph on vertices 1..n; no loops, no parallel edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(int vertices);

  void add_edge(int u, int v);
  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  // Normalized (u < v) and sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::vector<int> degrees() const;

  bool is_forest() const;
  // Non-induced subgraph containment of h in this graph.
  bool contains_subgraph(const SimpleGraph& h) const;
  // Two-coloring when bipartite.
  std::optional<std::vector<int>> bipartition() const;

  static SimpleGraph single_edge();
  static SimpleGraph path(int vertices);
  static SimpleGraph cycle(int vertices);
  static SimpleGraph complete(int vertices);
  // Grammar: "edge", "triangle", "path:k", "cycle:k", "complete:k".
  static SimpleGraph named(const std::string& name);
  // Text form: "n e" header, then e lines "u v".
  static SimpleGraph parse_text(const std::string& text);
  std::string to_text() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

SimpleGraph read_graph_file(const std::string& path);

}  // namespace forbconf
