#include "tutte/component_recursion.hpp"

#include <stdexcept>

#include "tutte/potts.hpp"
#include "tutte/subset_transform.hpp"

namespace tutte {

STable s_table(const Multigraph& g, const PrimeField& f, std::span<const u64> edge_weights) {
  const int n = g.vertex_count();
  if (f.modulus() <= static_cast<u64>(n)) throw std::invalid_argument("prime must exceed n");
  const auto all_subgraphs = InducedWeight(g, f, edge_weights).table();
  STable s(n);
  std::vector<u64> conv(std::size_t{1} << n, 0);
  for (int d = 1; d <= n; ++d) {
    for (int k = 2; k <= d; ++k) {
      // The U = W term would read S[empty][k-1], which is zero for k >= 2.
      layered_convolve(f, s.layer(1), s.layer(k - 1), n, d, conv);
      const u64 inv_k = f.inv(k);
      for_each_set_of_size(n, d, [&](VertexSet w) { s.at(w, k) = f.mul(conv[w], inv_k); });
    }
    for_each_set_of_size(n, d, [&](VertexSet w) {
      u64 connected = all_subgraphs[w];
      for (int k = 2; k <= d; ++k) connected = f.sub(connected, s.at(w, k));
      s.at(w, 1) = connected;
    });
  }
  return s;
}

STable s_table(const Multigraph& g, const PrimeField& f, u64 w) {
  std::vector<u64> weights(g.edge_count(), f.reduce(w));
  return s_table(g, f, weights);
}

u64 z_from_s(const PrimeField& f, const STable& s, u64 q) {
  const VertexSet v = full_set(s.n());
  u64 total = 0;
  u64 qk = 1;
  for (int k = 1; k <= s.n(); ++k) {
    qk = f.mul(qk, f.reduce(q));
    total = f.add(total, f.mul(qk, s.at(v, k)));
  }
  return total;
}

}  // namespace tutte
