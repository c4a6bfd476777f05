#pragma once

#include <cstdint>
#include <string>

#include "tutte/graph.hpp"
#include "tutte/potts.hpp"
#include "tutte/tutte_table.hpp"

namespace tutte {

/// The Tutte pipelines. All produce identical tables.
struct Algorithm {
  enum class Kind { dense, polyspace, split, connected, recursion };
  Kind kind = Kind::dense;
  int split_size = 0;

  static Algorithm dense() { return {Kind::dense, 0}; }
  static Algorithm polyspace() { return {Kind::polyspace, 0}; }
  static Algorithm split(int s) { return {Kind::split, s}; }
  static Algorithm connected() { return {Kind::connected, 0}; }
  static Algorithm recursion() { return {Kind::recursion, 0}; }

  std::string name() const;
  bool operator==(const Algorithm&) const = default;
};

// Bytes of working storage one (prime, w) task of `a` needs on an n-vertex graph.
std::uint64_t working_bytes(const Algorithm& a, int n);

/// Dense if 2^n tables for `threads` concurrent tasks fit in `budget`, else
/// split with the largest fitting s, else polyspace.
Algorithm choose_algorithm(int n, std::uint64_t budget_bytes, int threads);

/// a_k(w) mod p, k = 0..n, for a connected graph under the given pipeline.
NodeEvaluator node_evaluator(const Multigraph& g, const Algorithm& a);

ZCoefficients z_coefficients(const Multigraph& connected, const Algorithm& a, int threads = 1);

/// Tutte table of any multigraph: split into components, solved one at a
/// time, multiplied back together. Split sizes are clamped to each
/// component's vertex count.
TutteTable compute_tutte(const Multigraph& g, const Algorithm& a, int threads = 1);

}  // namespace tutte
