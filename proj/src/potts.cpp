#include "tutte/potts.hpp"

#include <algorithm>
#include <stdexcept>

#include "tutte/parallel.hpp"

namespace tutte {

InducedWeight::InducedWeight(const Multigraph& g, const PrimeField& f,
                             std::span<const u64> edge_weights)
    : f_(f), n_(g.vertex_count()), factors_(g.vertex_count()) {
  if (static_cast<int>(edge_weights.size()) != g.edge_count())
    throw std::invalid_argument("one weight per edge required");
  std::vector<u64> pair(n_ * n_, 1);
  std::vector<bool> present(n_ * n_, false);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
    pair[a * n_ + b] = f.mul(pair[a * n_ + b], f.add(1, f.reduce(edge_weights[e])));
    present[a * n_ + b] = true;
  }
  for (int a = 0; a < n_; ++a)
    for (int b = a; b < n_; ++b)
      if (present[a * n_ + b]) factors_[a].push_back({singleton(b + 1), pair[a * n_ + b]});
}

InducedWeight InducedWeight::uniform(const Multigraph& g, const PrimeField& f, u64 w) {
  std::vector<u64> weights(g.edge_count(), f.reduce(w));
  return InducedWeight(g, f, weights);
}

u64 InducedWeight::operator()(VertexSet x) const {
  u64 r = 1;
  for (VertexSet rest = x; rest; rest &= rest - 1) {
    int v = min_vertex(rest);
    for (const auto& fac : factors_[v - 1])
      if (fac.partner & x) r = f_.mul(r, fac.value);
  }
  return r;
}

std::vector<u64> InducedWeight::table() const {
  std::vector<u64> t(std::size_t{1} << n_);
  t[0] = 1;
  for (std::size_t xw = 1; xw < t.size(); ++xw) {
    const VertexSet x = static_cast<VertexSet>(xw);
    const int v = min_vertex(x);
    u64 r = t[x & (x - 1)];
    for (const auto& fac : factors_[v - 1])
      if (fac.partner & x) r = f_.mul(r, fac.value);
    t[xw] = r;
  }
  return t;
}

PolyTable InducedWeight::fz_table() const {
  auto t = table();
  PolyTable out(n_, n_ + 1);
  for (std::size_t x = 0; x < t.size(); ++x)
    out[static_cast<VertexSet>(x)][set_size(static_cast<VertexSet>(x))] = t[x];
  return out;
}

SetFunction InducedWeight::fz_function() const {
  return [this](VertexSet x, std::span<u64> acc) {
    const int k = set_size(x);
    acc[k] = f_.add(acc[k], (*this)(x));
  };
}

PottsInstance PottsInstance::uniform(const Multigraph& g, const PrimeField& f, u64 w,
                                     Strategy s) {
  return {&g, f, std::vector<u64>(g.edge_count(), f.reduce(w)), s};
}

std::vector<u64> potts_values(const PottsInstance& inst, int qmax) {
  const Multigraph& g = *inst.graph;
  const int n = g.vertex_count();
  InducedWeight weight(g, inst.field, inst.edge_weights);
  std::vector<ZPoly> polys;
  switch (inst.strategy.kind) {
    case Strategy::Kind::dense:
      polys = exact_cover_powers(inst.field, weight.fz_table(), qmax);
      break;
    case Strategy::Kind::direct:
      polys = split_eval(inst.field, n, n, weight.fz_function(), qmax, 0);
      break;
    case Strategy::Kind::split:
      polys = split_eval(inst.field, n, n, weight.fz_function(), qmax, inst.strategy.split_size);
      break;
  }
  std::vector<u64> out;
  out.reserve(qmax);
  for (const auto& p : polys) out.push_back(p[n]);
  return out;
}

u64 potts_value(const PottsInstance& inst, int q) {
  const int n = inst.graph->vertex_count();
  if (q < 1 || q > n + 1) throw std::invalid_argument("q must lie in 1..n+1");
  return potts_values(inst, q).back();
}

void ZCoefficients::check() const {
  mpz_class sum = 0;
  for (const auto& v : a) {
    if (v < 0) throw ConsistencyError("negative subgraph count");
    sum += v;
  }
  if (sum != mpz_class(1) << m)
    throw ConsistencyError("subgraph counts do not sum to 2^m");
  for (int k = 0; k <= n; ++k)
    if (at(k, 0) != (k == n ? 1 : 0))
      throw ConsistencyError("empty edge set must have n components");
  if (at(components, m) != 1)
    throw ConsistencyError("full edge set must have c(E) components");
}

std::vector<u64> q_coefficients(const PrimeField& f, std::span<const u64> z_at_q) {
  std::vector<u64> nodes(z_at_q.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = i + 1;
  return lagrange_interpolate(f, nodes, z_at_q);
}

ZCoefficients interpolate_z_coefficients(const Multigraph& g, const NodeEvaluator& eval,
                                         int threads) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto primes = choose_primes(mpz_class(1) << m, static_cast<u64>(std::max(n + 1, m + 1)));
  const std::size_t points = static_cast<std::size_t>(m) + 1;

  std::vector<std::vector<u64>> node_values(primes.size() * points);
  parallel_for(node_values.size(), threads, [&](std::size_t task) {
    PrimeField f(primes[task / points]);
    auto v = eval(f, task % points);
    if (static_cast<int>(v.size()) != n + 1)
      throw std::logic_error("node evaluator returned wrong length");
    node_values[task] = std::move(v);
  });

  // residues[(k * (m+1) + l) * P + prime index]
  std::vector<u64> residues((n + 1) * points * primes.size());
  std::vector<u64> w_nodes(points);
  for (std::size_t w = 0; w < points; ++w) w_nodes[w] = w;
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    PrimeField f(primes[pi]);
    Interpolator interp(f, w_nodes);
    std::vector<u64> column(points);
    for (int k = 0; k <= n; ++k) {
      for (std::size_t w = 0; w < points; ++w) column[w] = node_values[pi * points + w][k];
      auto coeffs = interp(column);
      for (std::size_t l = 0; l < points; ++l)
        residues[(k * points + l) * primes.size() + pi] = coeffs[l];
    }
  }

  ZCoefficients z;
  z.n = n;
  z.m = m;
  z.components = static_cast<int>(connected_components(g).size());
  z.a.resize((n + 1) * points);
  std::vector<Residue> r(primes.size());
  for (std::size_t idx = 0; idx < z.a.size(); ++idx) {
    for (std::size_t pi = 0; pi < primes.size(); ++pi)
      r[pi] = {primes[pi], residues[idx * primes.size() + pi]};
    z.a[idx] = crt_reconstruct(r);
  }
  z.check();
  return z;
}

ZCoefficients z_coefficient_table(const Multigraph& g, Strategy s, int threads) {
  const int n = g.vertex_count();
  return interpolate_z_coefficients(
      g,
      [&](const PrimeField& f, u64 w) {
        auto inst = PottsInstance::uniform(g, f, w, s);
        auto values = potts_values(inst, n + 1);
        return q_coefficients(f, values);
      },
      threads);
}

}  // namespace tutte
