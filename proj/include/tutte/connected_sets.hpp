#pragma once

#include <span>
#include <unordered_map>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/modular.hpp"
#include "tutte/potts.hpp"

namespace tutte {

/// Intermediate values F(X, q, i) for one vertex set X: for q = 1..n+1 and
/// i = 0..n, the sum of f(U_1)...f(U_q) over q-tuples of subsets of X whose
/// union agrees with X on the vertices i+1..n. Each value is a truncated
/// z-polynomial of width n+1.
class FTable {
 public:
  FTable(int n, u64 modulus)
      : n_(n), p_(modulus), data_(static_cast<std::size_t>(n + 1) * (n + 1) * (n + 1), 0) {}

  // F(empty, q, i) = 1.
  static FTable empty_set(int n, u64 modulus);

  int n() const noexcept { return n_; }
  u64 modulus() const noexcept { return p_; }

  std::span<u64> at(int q, int i) noexcept { return {data_.data() + offset(q, i), width()}; }
  std::span<const u64> at(int q, int i) const noexcept {
    return {data_.data() + offset(q, i), width()};
  }
  ZPoly poly(int q, int i) const;

  bool operator==(const FTable&) const = default;

 private:
  std::size_t width() const noexcept { return static_cast<std::size_t>(n_ + 1); }
  std::size_t offset(int q, int i) const noexcept {
    return ((static_cast<std::size_t>(q - 1) * (n_ + 1)) + i) * width();
  }
  int n_;
  u64 p_;
  std::vector<u64> data_;
};

/// F(X \ {i}, q, i - 1) for q = 1..n+1, stored q-major with width n+1.
using PredecessorSlice = std::vector<u64>;

/// Up-step: computes every F(X, q, i) from f_z(X) and, for each i in X, the
/// slice F(X \ {i}, ., i - 1). slices[i - 1] is read only when i is in X.
FTable up_step(const PrimeField& f, int n, VertexSet x, std::span<const u64> fz_x,
               std::span<const PredecessorSlice> slices);

/// Up-step with whole predecessor tables; preds[i - 1] is the table of X \ {i}.
FTable up_step(const PrimeField& f, int n, VertexSet x, std::span<const u64> fz_x,
               std::span<const FTable* const> preds);

/// Entrywise product of component tables of a disconnected G[X].
FTable factor_disconnected(const Multigraph& g, VertexSet x,
                           std::span<const FTable* const> component_tables);

/// Memoised evaluation over connected vertex sets. Disconnected sets are
/// factored into their components on the fly and never stored.
class ConnectedSetEvaluator {
 public:
  ConnectedSetEvaluator(const Multigraph& g, const PrimeField& f,
                        std::span<const u64> edge_weights);

  // F table of a connected set, computed on first use.
  const FTable& table(VertexSet connected);

  // F(x, q, i) for q = 1..n+1 and any x (components multiplied).
  PredecessorSlice slice(VertexSet x, int i);

  // z^n coefficient of F(V, q, 0) for q = 1..n+1; requires G connected.
  std::vector<u64> potts_values();

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const Multigraph& g_;
  PrimeField f_;
  int n_;
  InducedWeight weight_;
  std::unordered_map<VertexSet, FTable> memo_;
};

/// Z^Potts(q, w) mod p via the connected-set evaluation.
u64 algorithm_c(const PottsInstance& inst, int q);

}  // namespace tutte
