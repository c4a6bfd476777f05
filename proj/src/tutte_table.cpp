#include "tutte/tutte_table.hpp"

#include <stdexcept>

namespace tutte {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpq_class power(mpq_class base, long e) {
  mpq_class r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

mpz_class TutteTable::coefficient(int i, int j) const {
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? mpz_class(0) : it->second;
}

TutteTable assemble_tutte(const ZCoefficients& z) {
  const int n = z.n, m = z.m, c = z.components;
  const int rows = n + 1, cols = m + 1;
  std::vector<mpz_class> grid(rows * cols);
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= m; ++l) {
      const mpz_class& a = z.at(k, l);
      if (a == 0) continue;
      const int ax = k - c, ay = k + l - n;
      if (ax < 0 || ay < 0)
        throw ConsistencyError("nonzero subgraph count with negative Tutte exponent");
      for (int i = 0; i <= ax; ++i) {
        mpz_class xi = a * binomial(ax, i);
        if ((ax - i) & 1) xi = -xi;
        for (int j = 0; j <= ay; ++j) {
          mpz_class term = xi * binomial(ay, j);
          if ((ay - j) & 1)
            grid[i * cols + j] -= term;
          else
            grid[i * cols + j] += term;
        }
      }
    }
  TutteTable t;
  t.n = n;
  t.m = m;
  t.components = c;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const mpz_class& v = grid[i * cols + j];
      if (v < 0) throw ConsistencyError("negative Tutte coefficient");
      if (v != 0) t.coeffs.emplace(std::pair{i, j}, v);
    }
  return t;
}

TutteTable combine_components(std::span<const TutteTable> tables) {
  TutteTable out;
  out.coeffs.emplace(std::pair{0, 0}, 1);
  for (const auto& t : tables) {
    std::map<std::pair<int, int>, mpz_class> prod;
    for (const auto& [a, va] : out.coeffs)
      for (const auto& [b, vb] : t.coeffs)
        prod[{a.first + b.first, a.second + b.second}] += va * vb;
    out.coeffs = std::move(prod);
    out.n += t.n;
    out.m += t.m;
    out.components += t.components;
  }
  return out;
}

ConsistencyReport consistency_check(const TutteTable& t, const Multigraph& g) {
  ConsistencyReport r;
  r.coefficient_sum = 0;
  r.eval22 = 0;
  for (const auto& [ij, v] : t.coeffs) {
    r.coefficient_sum += v;
    r.eval22 += v * (mpz_class(1) << (ij.first + ij.second));
  }
  r.tau = 1;
  for (VertexSet comp : connected_components(g))
    r.tau *= spanning_tree_count(g.induced(comp));
  r.two_to_m = mpz_class(1) << g.edge_count();
  return r;
}

mpq_class evaluate(const TutteTable& t, const mpq_class& x, const mpq_class& y) {
  mpq_class total = 0;
  for (const auto& [ij, v] : t.coeffs) total += mpq_class(v) * power(x, ij.first) * power(y, ij.second);
  return total;
}

std::vector<mpz_class> chromatic_polynomial(const TutteTable& t) {
  std::vector<mpz_class> out(t.n + 1, 0);
  // T(1 - t, 0) = sum_i t_i0 (1 - t)^i, shifted by t^c.
  for (const auto& [ij, v] : t.coeffs) {
    if (ij.second != 0) continue;
    const int i = ij.first;
    for (int r = 0; r <= i; ++r) {
      mpz_class term = v * binomial(i, r);
      if (r & 1) term = -term;
      out[r + t.components] += term;
    }
  }
  if ((t.n - t.components) & 1)
    for (auto& c : out) c = -c;
  return out;
}

mpq_class reliability(const TutteTable& t, const mpq_class& p) {
  if (p <= 0 || p >= 1) throw std::domain_error("probability must lie strictly between 0 and 1");
  // p is the survival probability of each edge.
  const mpq_class fail = 1 - p;
  return power(fail, t.m - t.n + t.components) * power(p, t.n - t.components) *
         evaluate(t, 1, 1 / fail);
}

mpq_class parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational");
  mpq_class value;
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed decimal: " + text);
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    value = mpq_class(num, den);
  } else {
    const auto slash = s.find('/');
    auto is_digits = [](const std::string& d) {
      return !d.empty() && d.find_first_not_of("0123456789") == std::string::npos;
    };
    if (slash == std::string::npos) {
      if (!is_digits(s)) throw std::invalid_argument("malformed rational: " + text);
      value = mpq_class(mpz_class(s, 10));
    } else {
      std::string a = s.substr(0, slash), b = s.substr(slash + 1);
      if (!is_digits(a) || !is_digits(b)) throw std::invalid_argument("malformed rational: " + text);
      mpz_class den(b, 10);
      if (den == 0) throw std::invalid_argument("zero denominator: " + text);
      value = mpq_class(mpz_class(a, 10), den);
    }
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

}  // namespace tutte
