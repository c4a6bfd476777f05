#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "tutte/connected_sets.hpp"

using namespace tutte;

namespace {

const PrimeField kField(998244353);

bool suffix_equal(VertexSet a, VertexSet b, int i) { return (a >> i) == (b >> i); }

// F(X, q, i) straight from the definition, with f_z(U) = f(U) z^|U|.
ZPoly definition_value(const std::vector<u64>& f, int n, VertexSet x, int q, int i) {
  ZPoly total(kField.modulus(), n);
  std::vector<VertexSet> subsets;
  for (VertexSet u = x;; u = (u - 1) & x) {
    subsets.push_back(u);
    if (!u) break;
  }
  std::vector<std::size_t> idx(q, 0);
  while (true) {
    VertexSet uni = 0;
    ZPoly prod = ZPoly::one(kField.modulus(), n);
    for (int j = 0; j < q; ++j) {
      const VertexSet u = subsets[idx[j]];
      uni |= u;
      ZPoly term(kField.modulus(), n);
      term[set_size(u)] = f[u];
      prod = zpoly_mul(prod, term);
    }
    if (suffix_equal(uni, x, i)) total = zpoly_add(total, prod);
    int pos = 0;
    while (pos < q && ++idx[pos] == subsets.size()) idx[pos++] = 0;
    if (pos == q) break;
  }
  return total;
}

std::vector<u64> fz_row(const std::vector<u64>& f, int n, VertexSet x) {
  std::vector<u64> row(n + 1, 0);
  row[set_size(x)] = f[x];
  return row;
}

// Tables for every subset by plain up-steps in increasing order.
std::vector<FTable> all_tables(const std::vector<u64>& f, int n) {
  std::vector<FTable> t;
  t.push_back(FTable::empty_set(n, kField.modulus()));
  for (VertexSet x = 1; x < (1u << n); ++x) {
    std::vector<const FTable*> preds(n, nullptr);
    for (int i = 1; i <= n; ++i)
      if (x & singleton(i)) preds[i - 1] = &t[x & ~singleton(i)];
    t.push_back(up_step(kField, n, x, fz_row(f, n, x), preds));
  }
  return t;
}

}  // namespace

TEST_CASE("suffix partition") {
  const int n = 6;
  for (VertexSet x = 0; x < (1u << n); ++x)
    for (VertexSet y = x;; y = (y - 1) & x) {
      int matches = 0;
      for (int i = 1; i <= n; ++i)
        if ((x & singleton(i)) && suffix_equal(y, x & ~singleton(i), i - 1)) ++matches;
      CHECK(matches == (y == x ? 0 : 1));
      if (!y) break;
    }
}

TEST_CASE("up-step on the smallest sets") {
  const int n = 1;
  const std::vector<u64> f{1, 77};
  const auto empty = FTable::empty_set(n, kField.modulus());
  for (int q = 1; q <= 2; ++q)
    for (int i = 0; i <= 1; ++i) CHECK(empty.poly(q, i) == ZPoly::one(kField.modulus(), 1));
  const FTable* preds[] = {&empty};
  const auto t = up_step(kField, n, 1, fz_row(f, n, 1), preds);
  for (int q = 1; q <= 2; ++q) {
    const ZPoly base(kField.modulus(), {1, 77});
    CHECK(t.poly(q, 1) == zpoly_pow(base, q));
    CHECK(t.poly(q, 0) == zpoly_sub(zpoly_pow(base, q), ZPoly::one(kField.modulus(), 1)));
  }
}

TEST_CASE("up-step reproduces the definition") {
  std::mt19937_64 rng(41);
  const int n = 3;
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<u64> f(1 << n);
    for (auto& v : f) v = rng() % kField.modulus();
    f[0] = 1;
    const auto tables = all_tables(f, n);
    for (VertexSet x = 0; x < (1u << n); ++x)
      for (int q = 1; q <= 3; ++q)
        for (int i = 0; i <= n; ++i) CHECK(tables[x].poly(q, i) == definition_value(f, n, x, q, i));
  }
}

TEST_CASE("component factorisation") {
  std::mt19937_64 rng(42);
  SUBCASE("path 1-2-3") {
    const Multigraph path(3, {{1, 2}, {2, 3}});
    ConnectedSetEvaluator eval(path, kField, std::vector<u64>{5, 9});
    const FTable* parts[] = {&eval.table(0b001), &eval.table(0b100)};
    const auto joined = factor_disconnected(path, 0b101, parts);
    for (int q = 1; q <= 4; ++q)
      for (int i = 0; i <= 3; ++i)
        CHECK(joined.poly(q, i) == zpoly_mul(parts[0]->poly(q, i), parts[1]->poly(q, i)));
    const FTable* one[] = {&eval.table(0b011)};
    CHECK_THROWS(factor_disconnected(path, 0b011, one));
  }
  SUBCASE("two disjoint pairs against the definition") {
    const Multigraph g(4, {{1, 3}, {2, 4}, {1, 3}});
    const std::vector<u64> w{3, 8, 6};
    std::vector<u64> f(16);
    for (VertexSet x = 0; x < 16; ++x) {
      u64 v = 1;
      for (int e = 0; e < 3; ++e)
        if ((x & singleton(g.edges()[e].first)) && (x & singleton(g.edges()[e].second)))
          v = kField.mul(v, 1 + w[e]);
      f[x] = v;
    }
    ConnectedSetEvaluator eval(g, kField, w);
    const FTable* parts[] = {&eval.table(0b0101), &eval.table(0b1010)};
    const auto joined = factor_disconnected(g, 0b1111, parts);
    for (int q = 1; q <= 2; ++q)
      for (int i = 0; i <= 4; ++i) CHECK(joined.poly(q, i) == definition_value(f, 4, 0b1111, q, i));
  }
}

TEST_CASE("induced weights multiply over components") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const auto g = testing::random_multigraph(rng, n, static_cast<int>(rng() % 12));
    const auto f = InducedWeight::uniform(g, kField, 1 + rng() % 100);
    for (int k = 0; k < 30; ++k) {
      const VertexSet x = static_cast<VertexSet>(rng()) & full_set(n);
      u64 prod = 1;
      for (VertexSet c : components_of(g, x)) prod = kField.mul(prod, f(c));
      CHECK(f(x) == prod);
    }
  }
  CHECK(InducedWeight::uniform(testing::complete_graph(3), kField, 4)(0) == 1);
}

TEST_CASE("connected-set evaluation") {
  const auto k2 = testing::complete_graph(2);
  const auto k3 = testing::complete_graph(3);
  for (u64 w : {u64{0}, u64{3}, u64{12345}})
    CHECK(algorithm_c(PottsInstance::uniform(k2, kField, w), 2) == kField.add(kField.mul(2, w), 4));
  CHECK(algorithm_c(PottsInstance::uniform(k3, kField, 1), 2) == 28);

  std::mt19937_64 rng(44);
  const Multigraph path(3, {{1, 2}, {2, 3}});
  for (int trial = 0; trial < 50; ++trial) {
    const u64 p = choose_primes(1, 1000 + rng() % 100000)[0];
    const PrimeField f(p);
    const u64 w = rng() % p;
    const int q = 1 + static_cast<int>(rng() % 4);
    CHECK(algorithm_c(PottsInstance::uniform(path, f, w), q) ==
          potts_value(PottsInstance::uniform(path, f, w), q));
  }

  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto g = testing::random_connected_multigraph(rng, n, n - 1 + static_cast<int>(rng() % 8));
    const u64 w = rng() % kField.modulus();
    std::vector<u64> weights(g.edge_count(), w);
    ConnectedSetEvaluator eval(g, kField, weights);
    const auto values = eval.potts_values();
    CHECK(values == potts_values(PottsInstance::uniform(g, kField, w), n + 1));
    CHECK(values ==
          potts_values(PottsInstance::uniform(g, kField, w, Strategy::direct()), n + 1));
    CHECK(mpz_class(static_cast<unsigned long>(eval.memo_size())) == count_connected_sets(g));
  }

  const Multigraph apart(2, {});
  ConnectedSetEvaluator split(apart, kField, std::vector<u64>{});
  CHECK_THROWS(split.potts_values());
}
