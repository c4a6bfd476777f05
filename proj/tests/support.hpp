#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tutte/graph.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TUTTE_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline tutte::Multigraph fixture_graph(const std::string& name) {
  return tutte::parse_graph(read_fixture(name));
}

inline tutte::Digraph fixture_digraph(const std::string& name) {
  return tutte::parse_digraph(read_fixture(name));
}

inline tutte::Multigraph complete_graph(int n) {
  std::vector<tutte::Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return tutte::Multigraph(n, e);
}

inline tutte::Multigraph cycle_graph(int n) {
  std::vector<tutte::Edge> e;
  for (int v = 1; v <= n; ++v) e.emplace_back(v, v % n + 1);
  return tutte::Multigraph(n, e);
}

// Endpoints uniform over all pairs including loops.
inline tutte::Multigraph random_multigraph(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<tutte::Edge> e;
  for (int i = 0; i < m; ++i) e.emplace_back(pick(rng), pick(rng));
  return tutte::Multigraph(n, e);
}

inline tutte::Multigraph random_connected_multigraph(std::mt19937_64& rng, int n, int m) {
  std::vector<tutte::Edge> e;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    e.emplace_back(parent(rng), v);
  }
  std::uniform_int_distribution<int> pick(1, n);
  while (static_cast<int>(e.size()) < m) e.emplace_back(pick(rng), pick(rng));
  std::shuffle(e.begin(), e.end(), rng);
  return tutte::Multigraph(n, e);
}

inline tutte::Digraph random_digraph(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<tutte::Edge> a;
  for (int i = 0; i < m; ++i) a.emplace_back(pick(rng), pick(rng));
  return tutte::Digraph(n, a);
}

// Every connected simple labelled graph on n vertices.
inline std::vector<tutte::Multigraph> connected_simple_graphs(int n) {
  std::vector<tutte::Edge> pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  std::vector<tutte::Multigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<tutte::Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    tutte::Multigraph g(n, e);
    if (tutte::is_connected(g, tutte::full_set(n))) out.push_back(std::move(g));
  }
  return out;
}

// Every connected multigraph on n vertices with edge multiplicity <= 2 and at
// most one loop per vertex, up to max_edges edges.
inline std::vector<tutte::Multigraph> connected_small_multigraphs(int n, int max_edges) {
  std::vector<tutte::Edge> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u; v <= n; ++v) slots.emplace_back(u, v);
  std::vector<tutte::Multigraph> out;
  std::vector<int> mult(slots.size(), 0);
  while (true) {
    std::vector<tutte::Edge> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) e.push_back(slots[i]);
    if (static_cast<int>(e.size()) <= max_edges) {
      tutte::Multigraph g(n, e);
      if (tutte::is_connected(g, tutte::full_set(n))) out.push_back(std::move(g));
    }
    std::size_t pos = 0;
    for (; pos < slots.size(); ++pos) {
      const int cap = slots[pos].first == slots[pos].second ? 1 : 2;
      if (++mult[pos] <= cap) break;
      mult[pos] = 0;
    }
    if (pos == slots.size()) break;
  }
  return out;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing
