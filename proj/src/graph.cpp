#include "mb/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "mb/rng.hpp"

namespace mb {

namespace {

void check_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument(std::string(what) + ": vertex out of range");
    if (seen[v]) throw std::invalid_argument(std::string(what) + ": duplicate vertex");
    seen[v] = 1;
  }
}

std::vector<double> compute_harmonic(const std::vector<std::vector<Vertex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<double> h(n, 0.0);
  std::vector<int> dist(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.clear();
    queue.push_back(s);
    double sum = 0.0;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      if (u != s) sum += 1.0 / dist[u];
      for (Vertex w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    h[s] = sum;
  }
  return h;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
  g.edge_count_ = static_cast<int>(edges.size());
  g.harmonic_ = compute_harmonic(g.adj_);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: dimensions must be positive");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(rows) * (cols - 1) + static_cast<std::size_t>(cols) * (rows - 1));
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph er_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("er_graph: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("er_graph: p must be in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph flower_snark(int t) {
  if (t < 5 || t % 2 == 0) throw std::invalid_argument("flower_snark: t must be odd and >= 5");
  // Layout: hub i at i, leaf b_i at t+i, leaves c_i at 2t+i and d_i at 3t+i.
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(6 * t);
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(i, t + i);
    edges.emplace_back(i, 2 * t + i);
    edges.emplace_back(i, 3 * t + i);
  }
  for (int i = 0; i < t; ++i) edges.emplace_back(t + i, t + (i + 1) % t);
  // Single 2t-cycle c_0 .. c_{t-1} d_0 .. d_{t-1}.
  for (int i = 0; i < 2 * t; ++i) {
    Vertex a = 2 * t + i;
    Vertex b = 2 * t + (i + 1) % (2 * t);
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(4 * t, edges);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::vector<Vertex>{source});
}

std::vector<int> bfs_distances(const Graph& g, const std::vector<Vertex>& sources) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s < 0 || s >= n) throw std::invalid_argument("bfs_distances: source out of range");
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& restriction) {
  check_vertex_set(g, restriction, "components");
  std::vector<std::uint8_t> in(g.vertex_count(), 0), done(g.vertex_count(), 0);
  for (Vertex v : restriction) in[v] = 1;
  VertexSet order = restriction;
  std::sort(order.begin(), order.end());
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex seed : order) {
    if (done[seed]) continue;
    VertexSet comp;
    stack.assign(1, seed);
    done[seed] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (in[w] && !done[w]) {
          done[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s, "is_dominating");
  std::vector<std::uint8_t> covered(g.vertex_count(), 0);
  for (Vertex v : s) {
    covered[v] = 1;
    for (Vertex w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](std::uint8_t c) { return c != 0; });
}

namespace {

// Extends an induced path one endpoint at a time. `phase` 0 grows the first
// arm, 1 the second; switching is one-way so every (arm, arm) split is
// enumerated exactly once. A new vertex may be adjacent only to the endpoint
// it extends.
bool grow_induced_path(const Graph& g, const std::vector<std::uint8_t>& allowed,
                       std::vector<std::uint8_t>& in_path, Vertex end_a, Vertex end_b,
                       int size, int k, int phase) {
  if (size == k) return true;
  Vertex end = phase == 0 ? end_a : end_b;
  for (Vertex w : g.neighbors(end)) {
    if (!allowed[w] || in_path[w]) continue;
    bool ok = true;
    for (Vertex x : g.neighbors(w)) {
      if (in_path[x] && x != end) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    in_path[w] = 1;
    bool found = phase == 0
                     ? grow_induced_path(g, allowed, in_path, w, end_b, size + 1, k, 0)
                     : grow_induced_path(g, allowed, in_path, end_a, w, size + 1, k, 1);
    in_path[w] = 0;
    if (found) return true;
  }
  if (phase == 0) return grow_induced_path(g, allowed, in_path, end_a, end_b, size, k, 1);
  return false;
}

}  // namespace

bool contains_induced_k_path_through(const Graph& g, const std::vector<std::uint8_t>& allowed,
                                     Vertex v, int k) {
  if (k < 1) throw std::invalid_argument("contains_induced_k_path_through: k must be >= 1");
  if (v < 0 || v >= g.vertex_count() || !allowed[v]) return false;
  if (k == 1) return true;
  // Scratch bitmap, all zeros between calls; this runs after every Maker move
  // inside rollouts.
  thread_local std::vector<std::uint8_t> in_path;
  if (in_path.size() < static_cast<std::size_t>(g.vertex_count()))
    in_path.resize(g.vertex_count(), 0);
  in_path[v] = 1;
  bool found = grow_induced_path(g, allowed, in_path, v, v, 1, k, 0);
  in_path[v] = 0;
  return found;
}

bool contains_induced_k_path(const Graph& g, const VertexSet& marked, int k) {
  if (k < 1) throw std::invalid_argument("contains_induced_k_path: k must be >= 1");
  check_vertex_set(g, marked, "contains_induced_k_path");
  if (static_cast<int>(marked.size()) < k) return false;
  std::vector<std::uint8_t> allowed(g.vertex_count(), 0);
  for (Vertex v : marked) allowed[v] = 1;
  VertexSet starts = marked;
  std::sort(starts.begin(), starts.end());
  std::vector<std::uint8_t> in_path(g.vertex_count(), 0);
  for (Vertex s : starts) {
    in_path[s] = 1;
    // Single-arm growth from each start finds every path from an endpoint.
    if (grow_induced_path(g, allowed, in_path, s, s, 1, k, 1)) return true;
    in_path[s] = 0;
  }
  return false;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("read_edge_list: bad header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("read_edge_list: truncated edge list");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace mb
