#pragma once

#include <vector>

#include <gmpxx.h>

#include "tutte/graph.hpp"
#include "tutte/modular.hpp"

namespace tutte {

/// c[i][j]: ways to cover all vertices with i disjoint directed paths and j
/// directed cycles. C_D(x, y) = sum c[i][j] x^(i falling) y^j.
struct CoverTable {
  int n = 0;
  int m = 0;
  std::vector<mpz_class> c;  // (n + 1) x (n + 1), row i

  CoverTable() = default;
  CoverTable(int n_, int m_) : n(n_), m(m_), c((n_ + 1) * (n_ + 1), 0) {}

  mpz_class& at(int i, int j) { return c[i * (n + 1) + j]; }
  const mpz_class& at(int i, int j) const { return c[i * (n + 1) + j]; }
  bool operator==(const CoverTable&) const = default;
};

/// Directed walks of length len from s to t inside D[S], counted with arc
/// multiplicity; 0 when s or t lies outside S.
u64 count_walks(const Digraph& d, const PrimeField& f, VertexSet s_set, int s, int t, int len);

/// p(X): spanning directed paths of D[X]; c(X): spanning directed cycles.
struct PathCycleCounts {
  std::vector<u64> paths;
  std::vector<u64> cycles;
};

/// Both tables for every X by Moebius inversion of walk counts.
PathCycleCounts spanning_paths_cycles(const Digraph& d, const PrimeField& f);

enum class CoverMode { fast, polyspace };

/// Exact cover table; fast mode uses 2^n tables, polyspace regenerates the
/// per-U polynomials in 3^n time.
CoverTable cover_table(const Digraph& d, CoverMode mode, int threads = 1);

// c_D(i, j) mod p, row-major (n + 1) x (n + 1).
std::vector<u64> cover_residues(const Digraph& d, const PrimeField& f, CoverMode mode);

mpq_class cover_evaluate(const CoverTable& t, const mpq_class& x, const mpq_class& y);

}  // namespace tutte
