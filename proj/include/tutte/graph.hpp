#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tutte {

// Vertex v (1-based) is bit v-1 of the mask.
using VertexSet = std::uint32_t;

inline constexpr int kMaxVertices = 32;

constexpr VertexSet full_set(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr VertexSet singleton(int v) { return VertexSet{1} << (v - 1); }

constexpr int set_size(VertexSet s) { return __builtin_popcount(s); }

// 1-based label of the smallest vertex in a nonempty set.
constexpr int min_vertex(VertexSet s) { return __builtin_ctz(s) + 1; }

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Input is well formed but beyond what the engine can address.
class CapacityError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A computed quantity failed an internal invariant.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

/// Undirected multigraph on vertices 1..n. Loops and parallel edges are
/// allowed, and the edge order is kept as given.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Neighbours of v (excluding v itself) as a mask.
  VertexSet neighbours(int v) const { return adjacency_[v - 1]; }
  // Number of edges between u and v; loops at u when u == v.
  int multiplicity(int u, int v) const { return mult_[(u - 1) * n_ + (v - 1)]; }
  int loops(int v) const { return multiplicity(v, v); }

  Multigraph induced(VertexSet x) const;
  Multigraph relabel(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<int> mult_;
};

/// Directed multigraph on vertices 1..n; arc (u, v) points from u to v.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Edge> arcs);

  int vertex_count() const noexcept { return n_; }
  int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Edge>& arcs() const noexcept { return arcs_; }
  int multiplicity(int u, int v) const { return mult_[(u - 1) * n_ + (v - 1)]; }
  VertexSet out_neighbours(int v) const { return out_[v - 1]; }

  Digraph relabel(const std::vector<int>& perm) const;

 private:
  int n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<VertexSet> out_;
  std::vector<int> mult_;
};

struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
};

// Reads the "n / u v / u v ..." edge-list text. '#' lines are comments.
EdgeList parse_edge_list(std::istream& in);
Multigraph parse_graph(std::istream& in);
Digraph parse_digraph(std::istream& in);
Multigraph parse_graph(const std::string& text);
Digraph parse_digraph(const std::string& text);

std::string to_edge_list(const Multigraph& g);
std::string to_edge_list(const Digraph& d);

// Vertex sets of the components of G[x], ordered by smallest vertex.
std::vector<VertexSet> components_of(const Multigraph& g, VertexSet x);
std::vector<VertexSet> connected_components(const Multigraph& g);
bool is_connected(const Multigraph& g, VertexSet x);

int induced_edge_count(const Multigraph& g, VertexSet x);

// e(X) for every X, built with e(X) = e(X \ {i}) + |N(i) ∩ X| + loops(i).
std::vector<std::uint32_t> induced_edge_table(const Multigraph& g);

// Kirchhoff count of spanning trees; 0 for disconnected input.
mpz_class spanning_tree_count(const Multigraph& g);

// Number of nonempty X with G[X] connected.
mpz_class count_connected_sets(const Multigraph& g);

}  // namespace tutte
