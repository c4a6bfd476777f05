#include "tutte/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tutte::oracle {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

int components_with(const Multigraph& g, std::uint64_t subset) {
  UnionFind uf(g.vertex_count());
  int c = g.vertex_count();
  for (int e = 0; e < g.edge_count(); ++e)
    if (subset >> e & 1)
      if (uf.unite(g.edges()[e].first - 1, g.edges()[e].second - 1)) --c;
  return c;
}

void require_small(const Multigraph& g) {
  if (g.edge_count() > 22) throw BudgetExceeded("edge-subset enumeration limited to m <= 22");
}

// Expands sum count[a][b] (x-1)^a (y-1)^b.
TutteTable expand_shifted(const std::map<std::pair<int, int>, mpz_class>& counts, int n, int m,
                          int c) {
  std::map<std::pair<int, int>, mpz_class> out;
  for (const auto& [ab, cnt] : counts) {
    auto [a, b] = ab;
    for (int i = 0; i <= a; ++i) {
      mpz_class bi;
      mpz_bin_uiui(bi.get_mpz_t(), a, i);
      for (int j = 0; j <= b; ++j) {
        mpz_class bj;
        mpz_bin_uiui(bj.get_mpz_t(), b, j);
        mpz_class term = cnt * bi * bj;
        if ((a - i + b - j) & 1) term = -term;
        out[{i, j}] += term;
      }
    }
  }
  TutteTable t;
  t.n = n;
  t.m = m;
  t.components = c;
  for (auto& [ij, v] : out)
    if (v != 0) t.coeffs.emplace(ij, v);
  return t;
}

struct DcState {
  std::map<std::pair<int, int>, std::uint64_t> leaves_at;
  std::uint64_t leaves = 0;
  std::uint64_t budget = 0;
};

bool is_bridge(const std::vector<Edge>& edges, std::size_t skip, int n) {
  const auto [u, v] = edges[skip];
  std::vector<std::vector<int>> adj(n + 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == skip) continue;
    adj[edges[e].first].push_back(edges[e].second);
    adj[edges[e].second].push_back(edges[e].first);
  }
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x == v) return false;
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  return true;
}

void deletion_contraction(std::vector<Edge> edges, int n, int xs, int ys, DcState& st) {
  while (true) {
    if (edges.empty()) {
      ++st.leaves_at[{xs, ys}];
      if (++st.leaves > st.budget) throw BudgetExceeded("deletion-contraction leaf budget exceeded");
      return;
    }
    const std::size_t last = edges.size() - 1;
    const auto [u, v] = edges[last];
    if (u == v) {
      edges.pop_back();
      ++ys;
      continue;
    }
    auto contract = [&](std::vector<Edge> es) {
      es.pop_back();
      for (auto& [a, b] : es) {
        if (a == v) a = u;
        if (b == v) b = u;
      }
      return es;
    };
    if (is_bridge(edges, last, n)) {
      edges = contract(std::move(edges));
      ++xs;
      continue;
    }
    std::vector<Edge> deleted(edges.begin(), edges.end() - 1);
    deletion_contraction(std::move(deleted), n, xs, ys, st);
    edges = contract(std::move(edges));
  }
}

}  // namespace

TutteTable tutte_bruteforce(const Multigraph& g) {
  require_small(g);
  const int n = g.vertex_count(), m = g.edge_count();
  const int ce = components_with(g, (std::uint64_t{1} << m) - 1);
  std::map<std::pair<int, int>, mpz_class> counts;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << m); ++f) {
    const int cf = components_with(g, f);
    const int size = __builtin_popcountll(f);
    counts[{cf - ce, cf + size - n}] += 1;
  }
  return expand_shifted(counts, n, m, ce);
}

ZCoefficients z_bruteforce(const Multigraph& g) {
  require_small(g);
  ZCoefficients z;
  z.n = g.vertex_count();
  z.m = g.edge_count();
  z.components = components_with(g, (std::uint64_t{1} << z.m) - 1);
  z.a.assign((z.n + 1) * (z.m + 1), 0);
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << z.m); ++f)
    z.at(components_with(g, f), __builtin_popcountll(f)) += 1;
  return z;
}

TutteTable tutte_deletion_contraction(const Multigraph& g, std::uint64_t leaf_budget,
                                      DeletionContractionStats* stats) {
  DcState st;
  st.budget = leaf_budget;
  deletion_contraction(g.edges(), g.vertex_count(), 0, 0, st);
  if (stats) stats->leaves = st.leaves;
  TutteTable t;
  t.n = g.vertex_count();
  t.m = g.edge_count();
  UnionFind uf(t.n);
  t.components = t.n;
  for (auto [u, v] : g.edges())
    if (uf.unite(u - 1, v - 1)) --t.components;
  for (auto& [ij, cnt] : st.leaves_at) t.coeffs.emplace(ij, static_cast<unsigned long>(cnt));
  return t;
}

u64 potts_bruteforce(const Multigraph& g, const PrimeField& f, int q, u64 w) {
  const int n = g.vertex_count();
  double maps = 1;
  for (int i = 0; i < n; ++i) maps *= q;
  if (q < 1 || maps > 1e7) throw BudgetExceeded("spin-map enumeration limited to q^n <= 10^7");
  const u64 heavy = f.add(1, f.reduce(w));
  std::vector<int> spin(n, 0);
  u64 total = 0;
  while (true) {
    u64 term = 1;
    for (auto [u, v] : g.edges())
      if (spin[u - 1] == spin[v - 1]) term = f.mul(term, heavy);
    total = f.add(total, term);
    int pos = 0;
    while (pos < n && ++spin[pos] == q) spin[pos++] = 0;
    if (pos == n) break;
  }
  return total;
}

CoverTable cover_bruteforce(const Digraph& d) {
  const int n = d.vertex_count();
  if (n > 7) throw BudgetExceeded("cover enumeration limited to n <= 7");
  std::vector<std::vector<int>> out_arcs(n);  // successor per arc, with multiplicity
  double choices = 1;
  for (auto [u, v] : d.arcs()) out_arcs[u - 1].push_back(v - 1);
  for (const auto& a : out_arcs) choices *= static_cast<double>(a.size() + 1);
  if (choices > 5e7) throw BudgetExceeded("too many successor choices");

  CoverTable t(n, d.arc_count());
  std::vector<int> succ(n, -1);
  std::vector<bool> has_pred(n, false);
  auto classify = [&] {
    int paths = 0, cycles = 0;
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
      if (succ[v] < 0) ++paths;
      if (has_pred[v]) continue;
      for (int x = v; x >= 0 && !seen[x]; x = succ[x]) seen[x] = true;
    }
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      ++cycles;
      for (int x = v; !seen[x]; x = succ[x]) seen[x] = true;
    }
    t.at(paths, cycles) += 1;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      classify();
      return;
    }
    succ[v] = -1;
    self(self, v + 1);
    for (int w : out_arcs[v]) {
      if (has_pred[w]) continue;
      has_pred[w] = true;
      succ[v] = w;
      self(self, v + 1);
      has_pred[w] = false;
    }
    succ[v] = -1;
  };
  rec(rec, 0);
  return t;
}

mpz_class permanent_bruteforce(const Digraph& d) {
  const int n = d.vertex_count();
  if (n > 8) throw BudgetExceeded("permanent enumeration limited to n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    mpz_class term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= d.multiplicity(i + 1, perm[i] + 1);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace tutte::oracle
