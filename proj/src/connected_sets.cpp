#include "tutte/connected_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace tutte {

FTable FTable::empty_set(int n, u64 modulus) {
  FTable t(n, modulus);
  for (int q = 1; q <= n + 1; ++q)
    for (int i = 0; i <= n; ++i) t.at(q, i)[0] = 1;
  return t;
}

ZPoly FTable::poly(int q, int i) const {
  auto s = at(q, i);
  return ZPoly(p_, std::vector<u64>(s.begin(), s.end()));
}

FTable up_step(const PrimeField& f, int n, VertexSet x, std::span<const u64> fz_x,
               std::span<const PredecessorSlice> slices) {
  const int width = n + 1;
  const int qs = n + 1;
  if (static_cast<int>(fz_x.size()) != width) throw std::invalid_argument("f_z(X) width");
  if (static_cast<int>(slices.size()) < n) throw std::invalid_argument("missing predecessors");
  for (VertexSet r = x; r; r &= r - 1)
    if (slices[min_vertex(r) - 1].size() != static_cast<std::size_t>(qs * width))
      throw std::invalid_argument("missing predecessor slice");

  FTable t(n, f.modulus());
  // U1: base = f_z(X) + sum over i in X of F(X \ {i}, 1, i - 1).
  std::vector<u64> base(fz_x.begin(), fz_x.end());
  for (VertexSet r = x; r; r &= r - 1) {
    const auto& s = slices[min_vertex(r) - 1];
    for (int k = 0; k < width; ++k) base[k] = f.add(base[k], s[k]);
  }
  std::copy(base.begin(), base.end(), t.at(1, n).begin());
  for (int q = 2; q <= qs; ++q)
    poly_mul_trunc(f, t.at(q - 1, n).data(), base.data(), t.at(q, n).data(), width);

  // U2: peel off the suffix positions from n down to 1.
  for (int i = n; i >= 1; --i) {
    const bool member = (x & singleton(i)) != 0;
    for (int q = 1; q <= qs; ++q) {
      auto src = t.at(q, i);
      auto dst = t.at(q, i - 1);
      if (member) {
        const u64* pred = slices[i - 1].data() + (q - 1) * width;
        for (int k = 0; k < width; ++k) dst[k] = f.sub(src[k], pred[k]);
      } else {
        std::copy(src.begin(), src.end(), dst.begin());
      }
    }
  }
  return t;
}

FTable up_step(const PrimeField& f, int n, VertexSet x, std::span<const u64> fz_x,
               std::span<const FTable* const> preds) {
  std::vector<PredecessorSlice> slices(n);
  for (VertexSet r = x; r; r &= r - 1) {
    const int i = min_vertex(r);
    const FTable* p = preds.size() >= static_cast<std::size_t>(i) ? preds[i - 1] : nullptr;
    if (!p) throw std::invalid_argument("missing predecessor table");
    auto& s = slices[i - 1];
    s.resize(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int q = 1; q <= n + 1; ++q) {
      auto src = p->at(q, i - 1);
      std::copy(src.begin(), src.end(), s.begin() + (q - 1) * (n + 1));
    }
  }
  return up_step(f, n, x, fz_x, slices);
}

FTable factor_disconnected(const Multigraph& g, VertexSet x,
                           std::span<const FTable* const> component_tables) {
  auto comps = components_of(g, x);
  if (comps.size() < 2) throw std::invalid_argument("G[X] is connected");
  if (component_tables.size() != comps.size())
    throw std::invalid_argument("one table per component required");
  const int n = g.vertex_count();
  const PrimeField f(component_tables[0]->modulus());
  FTable out = *component_tables[0];
  std::vector<u64> tmp(n + 1);
  for (std::size_t c = 1; c < comps.size(); ++c)
    for (int q = 1; q <= n + 1; ++q)
      for (int i = 0; i <= n; ++i) {
        auto dst = out.at(q, i);
        poly_mul_trunc(f, dst.data(), component_tables[c]->at(q, i).data(), tmp.data(), n + 1);
        std::copy(tmp.begin(), tmp.end(), dst.begin());
      }
  return out;
}

ConnectedSetEvaluator::ConnectedSetEvaluator(const Multigraph& g, const PrimeField& f,
                                             std::span<const u64> edge_weights)
    : g_(g), f_(f), n_(g.vertex_count()), weight_(g, f, edge_weights) {}

const FTable& ConnectedSetEvaluator::table(VertexSet x) {
  if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  std::vector<PredecessorSlice> slices(n_);
  for (VertexSet r = x; r; r &= r - 1) {
    const int i = min_vertex(r);
    slices[i - 1] = slice(x & ~singleton(i), i - 1);
  }
  std::vector<u64> fz(n_ + 1, 0);
  fz[set_size(x)] = weight_(x);
  auto [it, inserted] = memo_.emplace(x, up_step(f_, n_, x, fz, slices));
  return it->second;
}

PredecessorSlice ConnectedSetEvaluator::slice(VertexSet x, int i) {
  const int width = n_ + 1;
  PredecessorSlice out(static_cast<std::size_t>(n_ + 1) * width, 0);
  if (!x) {
    for (int q = 1; q <= n_ + 1; ++q) out[(q - 1) * width] = 1;
    return out;
  }
  auto comps = components_of(g_, x);
  std::vector<u64> tmp(width);
  bool first = true;
  for (VertexSet c : comps) {
    const FTable& t = table(c);
    for (int q = 1; q <= n_ + 1; ++q) {
      u64* dst = out.data() + (q - 1) * width;
      auto src = t.at(q, i);
      if (first) {
        std::copy(src.begin(), src.end(), dst);
      } else {
        poly_mul_trunc(f_, dst, src.data(), tmp.data(), width);
        std::copy(tmp.begin(), tmp.end(), dst);
      }
    }
    first = false;
  }
  return out;
}

std::vector<u64> ConnectedSetEvaluator::potts_values() {
  const VertexSet v = full_set(n_);
  if (!is_connected(g_, v)) throw std::invalid_argument("graph must be connected");
  const FTable& t = table(v);
  std::vector<u64> out;
  out.reserve(n_ + 1);
  for (int q = 1; q <= n_ + 1; ++q) out.push_back(t.at(q, 0)[n_]);
  return out;
}

u64 algorithm_c(const PottsInstance& inst, int q) {
  const int n = inst.graph->vertex_count();
  if (q < 1 || q > n + 1) throw std::invalid_argument("q must lie in 1..n+1");
  ConnectedSetEvaluator eval(*inst.graph, inst.field, inst.edge_weights);
  return eval.potts_values()[q - 1];
}

}  // namespace tutte
