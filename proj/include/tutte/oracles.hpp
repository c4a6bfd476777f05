#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

#include "tutte/cover.hpp"
#include "tutte/graph.hpp"
#include "tutte/modular.hpp"
#include "tutte/potts.hpp"
#include "tutte/tutte_table.hpp"

// Slow reference computations, used to cross-check the fast pipelines.
namespace tutte::oracle {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Direct sum over all 2^m edge subsets. m <= 22.
TutteTable tutte_bruteforce(const Multigraph& g);

// Edge-subset counts a[k][l] by the same 2^m enumeration.
ZCoefficients z_bruteforce(const Multigraph& g);

struct DeletionContractionStats {
  std::uint64_t leaves = 0;
};

// Loop / bridge / delete+contract recursion with a leaf budget.
TutteTable tutte_deletion_contraction(const Multigraph& g,
                                      std::uint64_t leaf_budget = 10'000'000,
                                      DeletionContractionStats* stats = nullptr);

// Sum over all q^n spin maps of prod (1 + w delta). q^n <= 10^7.
u64 potts_bruteforce(const Multigraph& g, const PrimeField& f, int q, u64 w);

// Path/cycle covers counted by enumerating successor choices. n <= 7.
CoverTable cover_bruteforce(const Digraph& d);

// Permanent of the arc-multiplicity matrix (= number of cycle covers). n <= 8.
mpz_class permanent_bruteforce(const Digraph& d);

}  // namespace tutte::oracle
