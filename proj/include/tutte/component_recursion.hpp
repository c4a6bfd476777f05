#pragma once

#include <span>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/modular.hpp"

namespace tutte {

/// S[W][k]: weighted count of edge subsets of G[W] with exactly k
/// components on vertex set W, for every W and 1 <= k <= |W|.
class STable {
 public:
  explicit STable(int n) : n_(n), by_k_(n + 1, std::vector<u64>(std::size_t{1} << n, 0)) {}

  int n() const noexcept { return n_; }
  u64 at(VertexSet w, int k) const { return by_k_[k][w]; }
  u64& at(VertexSet w, int k) { return by_k_[k][w]; }
  // S[.][k] over all W.
  std::span<const u64> layer(int k) const { return by_k_[k]; }
  std::span<u64> layer(int k) { return by_k_[k]; }

 private:
  int n_;
  std::vector<std::vector<u64>> by_k_;
};

/// Builds S by cardinality layers: k >= 2 from the 1/k-scaled convolution of
/// connected parts with (k-1)-component parts, then k = 1 by subtracting
/// the disconnected subgraphs from prod (1 + w_e). Requires p > n.
STable s_table(const Multigraph& g, const PrimeField& f, std::span<const u64> edge_weights);
STable s_table(const Multigraph& g, const PrimeField& f, u64 w);

// Z_G(q, w) = sum_k q^k S[V][k].
u64 z_from_s(const PrimeField& f, const STable& s, u64 q);

}  // namespace tutte
