#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "tutte/graph.hpp"
#include "tutte/modular.hpp"
#include "tutte/subset_transform.hpp"

namespace tutte {

/// How ((f_z zeta)^q mu)(V) is evaluated.
struct Strategy {
  enum class Kind { dense, direct, split };
  Kind kind = Kind::dense;
  int split_size = 0;

  static Strategy dense() { return {Kind::dense, 0}; }
  // 3^n time, polynomial space.
  static Strategy direct() { return {Kind::direct, 0}; }
  // 3^(n-s) 2^s time, 2^s space.
  static Strategy split(int s) { return {Kind::split, s}; }
};

/// f(X) = prod over edges e of G[X] of (1 + w_e), mod p.
class InducedWeight {
 public:
  InducedWeight(const Multigraph& g, const PrimeField& f, std::span<const u64> edge_weights);
  static InducedWeight uniform(const Multigraph& g, const PrimeField& f, u64 w);

  u64 operator()(VertexSet x) const;
  // f(X) for every X.
  std::vector<u64> table() const;
  // Rows f(X) z^|X| with width n+1.
  PolyTable fz_table() const;
  SetFunction fz_function() const;

 private:
  struct Factor {
    VertexSet partner;  // vertex u >= v, as a mask
    u64 value;          // product of (1 + w_e) over edges between v and u
  };
  PrimeField f_;
  int n_;
  std::vector<std::vector<Factor>> factors_;  // indexed by v - 1
};

/// One q-state Potts evaluation problem over Z_p.
struct PottsInstance {
  const Multigraph* graph;
  PrimeField field;
  std::vector<u64> edge_weights;
  Strategy strategy = Strategy::dense();

  static PottsInstance uniform(const Multigraph& g, const PrimeField& f, u64 w,
                               Strategy s = Strategy::dense());
};

// Z^Potts(q, w) mod p, 1 <= q <= n + 1.
u64 potts_value(const PottsInstance& inst, int q);
// Z^Potts(q, w) mod p for q = 1..qmax, sharing the transform work.
std::vector<u64> potts_values(const PottsInstance& inst, int qmax);

/// a[k][l] = #{F subset of E : c(F) = k, |F| = l}, the coefficient of
/// q^k w^l in Z_G(q, w).
struct ZCoefficients {
  int n = 0;
  int m = 0;
  int components = 1;
  std::vector<mpz_class> a;  // (n + 1) x (m + 1), row k

  mpz_class& at(int k, int l) { return a[k * (m + 1) + l]; }
  const mpz_class& at(int k, int l) const { return a[k * (m + 1) + l]; }

  // Sum = 2^m, a[k][0] = [k = n], a[c(E)][m] = 1, no negatives.
  // Throws ConsistencyError otherwise.
  void check() const;
};

/// a_k(w) mod p for k = 0..n at a single edge weight w.
using NodeEvaluator = std::function<std::vector<u64>(const PrimeField&, u64 w)>;

/// Runs `eval` at w = 0..m for each prime chosen against the bound 2^m,
/// interpolates in w and reconstructs exact integers.
ZCoefficients interpolate_z_coefficients(const Multigraph& g, const NodeEvaluator& eval,
                                         int threads = 1);

// Converts Z(1..n+1) mod p into q-coefficients a_0..a_n.
std::vector<u64> q_coefficients(const PrimeField& f, std::span<const u64> z_at_q);

ZCoefficients z_coefficient_table(const Multigraph& g, Strategy s, int threads = 1);

}  // namespace tutte
