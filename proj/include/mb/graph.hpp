#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

namespace mb {

using Vertex = int;

// Set of vertex ids. Operations that return one keep it sorted ascending.
using VertexSet = std::vector<Vertex>;

// Distance value for vertices a BFS cannot reach.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Immutable undirected simple graph. Vertices are 0..n-1, neighbor lists are
// sorted ascending, equality is structural.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges or endpoints
  // outside [0, n).
  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges as (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Harmonic closeness sum over reachable u != v of 1/d(v, u). Computed once
  // at construction; the graph stays immutable and shareable afterwards.
  const std::vector<double>& harmonic_centrality() const { return harmonic_; }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<double> harmonic_;
  int edge_count_ = 0;
};

// rows x cols grid, vertex (r, c) gets id r*cols + c.
Graph grid_graph(int rows, int cols);

// G(n, p): every pair independently with probability p, pairs visited in
// lexicographic order with one uniform variate each, so the result is a pure
// function of (n, p, seed).
Graph er_graph(int n, double p, std::uint64_t seed);

// Flower snark J_t for odd t >= 5: t stars joined by a hub-leaf t-cycle and a
// single 2t-cycle over the remaining leaves. 4t vertices, 6t edges, 3-regular.
Graph flower_snark(int t);

// Hop distances from source; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Multi-source variant: distance to the nearest source.
std::vector<int> bfs_distances(const Graph& g, const std::vector<Vertex>& sources);

// Connected components of the subgraph induced by `restriction`, each sorted,
// ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& restriction);

// True iff every vertex of g is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const VertexSet& s);

// True iff some k-subset of `marked` induces a path on k vertices in g.
bool contains_induced_k_path(const Graph& g, const VertexSet& marked, int k);

// Variant used by incremental win detection: true iff some induced k-path
// inside `allowed` (per-vertex bitmap) passes through v. Requires allowed[v].
bool contains_induced_k_path_through(const Graph& g,
                                     const std::vector<std::uint8_t>& allowed,
                                     Vertex v, int k);

// Edge-list text format: first line "n m", then m lines "u v" with u < v,
// ascending.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace mb
