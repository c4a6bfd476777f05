#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tutte/graph.hpp"
#include "tutte/potts.hpp"

namespace tutte {

/// Coefficients t_ij of x^i y^j in T_G(x, y); only nonzero entries are kept,
/// in increasing (i, j) order.
struct TutteTable {
  int n = 0;
  int m = 0;
  int components = 0;
  std::map<std::pair<int, int>, mpz_class> coeffs;

  mpz_class coefficient(int i, int j) const;
  bool operator==(const TutteTable& o) const {
    return n == o.n && m == o.m && components == o.components && coeffs == o.coeffs;
  }
};

/// T = sum a[k][l] (x-1)^(k-c) (y-1)^(k+l-n), expanded into monomials.
/// Throws ConsistencyError on a negative exponent or negative coefficient.
TutteTable assemble_tutte(const ZCoefficients& z);

/// Product of the tables of vertex-disjoint components.
TutteTable combine_components(std::span<const TutteTable> tables);

struct ConsistencyReport {
  mpz_class coefficient_sum;
  mpz_class tau;  // product of spanning-tree counts over components
  mpz_class eval22;
  mpz_class two_to_m;

  bool sum_eq_tau() const { return coefficient_sum == tau; }
  bool eval22_eq_2m() const { return eval22 == two_to_m; }
  bool ok() const { return sum_eq_tau() && eval22_eq_2m(); }
};

ConsistencyReport consistency_check(const TutteTable& t, const Multigraph& g);

mpq_class evaluate(const TutteTable& t, const mpq_class& x, const mpq_class& y);

/// P_G(t) = (-1)^(n-c) t^c T_G(1-t, 0); entry d is the coefficient of t^d.
std::vector<mpz_class> chromatic_polynomial(const TutteTable& t);

/// Probability that every component stays connected when each edge survives
/// independently with probability p: (1-p)^(m-n+c) p^(n-c) T_G(1, 1/(1-p)).
mpq_class reliability(const TutteTable& t, const mpq_class& p);

// Exact rational from "a", "a/b" or a decimal such as "0.25".
mpq_class parse_rational(const std::string& text);

}  // namespace tutte
