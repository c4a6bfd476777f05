#include <doctest.h>

#include <random>

#include "tutte/subset_transform.hpp"

using namespace tutte;

namespace {

const PrimeField kField((std::uint64_t{1} << 61) - 1);

std::vector<u64> random_values(std::mt19937_64& rng, std::size_t count) {
  std::vector<u64> v(count);
  for (auto& x : v) x = rng() % kField.modulus();
  return v;
}

// Sum over ordered q-tuples of pairwise disjoint sets covering full_set(n).
u64 disjoint_cover_sum(const std::vector<u64>& f, int n, int q) {
  const VertexSet all = full_set(n);
  u64 total = 0;
  auto rec = [&](auto&& self, int slot, VertexSet used, u64 prod) -> void {
    if (slot == q) {
      if (used == all) total = kField.add(total, prod);
      return;
    }
    const VertexSet free = all & ~used;
    for (VertexSet u = free;; u = (u - 1) & free) {
      self(self, slot + 1, used | u, kField.mul(prod, f[u]));
      if (!u) break;
    }
  };
  rec(rec, 0, 0, 1);
  return total;
}

PolyTable weighted(const std::vector<u64>& f, int n, int width) {
  PolyTable t(n, width);
  for (std::size_t x = 0; x < t.rows(); ++x) {
    const int k = set_size(static_cast<VertexSet>(x));
    if (k < width) t[static_cast<VertexSet>(x)][k] = f[x];
  }
  return t;
}

SetFunction as_function(const std::vector<u64>& f) {
  return [&f](VertexSet x, std::span<u64> acc) {
    const int k = set_size(x);
    if (k < static_cast<int>(acc.size())) acc[k] = kField.add(acc[k], f[x]);
  };
}

}  // namespace

TEST_CASE("zeta and Moebius transforms") {
  std::vector<u64> f{1, 2, 3, 4};
  fast_zeta(kField, f, 2, 1);
  CHECK(f == std::vector<u64>{1, 3, 4, 10});
  fast_moebius(kField, f, 2, 1);
  CHECK(f == std::vector<u64>{1, 2, 3, 4});

  std::vector<u64> indicator(1 << 5, 0);
  indicator[0] = 1;
  fast_zeta(kField, indicator, 5, 1);
  CHECK(indicator == std::vector<u64>(1 << 5, 1));

  std::mt19937_64 rng(1);
  for (int n = 0; n <= 12; ++n) {
    for (int width : {1, 3}) {
      const auto orig = random_values(rng, (std::size_t{1} << n) * width);
      auto a = orig, b = orig;
      fast_zeta(kField, a, n, width);
      fast_moebius(kField, a, n, width);
      CHECK(a == orig);
      fast_moebius(kField, b, n, width);
      fast_zeta(kField, b, n, width);
      CHECK(b == orig);
    }
  }
}

TEST_CASE("zeta transform matches direct subset sums") {
  std::mt19937_64 rng(2);
  const int n = 7;
  const auto f = random_values(rng, 1 << n);
  auto z = f;
  auto m = f;
  fast_zeta(kField, z, n, 1);
  fast_moebius(kField, m, n, 1);
  for (VertexSet y = 0; y < (1u << n); ++y) {
    u64 sum = 0, alt = 0;
    for (VertexSet x = y;; x = (x - 1) & y) {
      sum = kField.add(sum, f[x]);
      alt = (set_size(y & ~x) & 1) ? kField.sub(alt, f[x]) : kField.add(alt, f[x]);
      if (!x) break;
    }
    CHECK(z[y] == sum);
    CHECK(m[y] == alt);
  }
}

TEST_CASE("transform operation counts") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<u64> f(std::size_t{1} << n, 1);
    RingOpCounter ops;
    fast_zeta(kField, f, n, 1, &ops);
    CHECK(ops.additions == static_cast<std::uint64_t>(n) << (n - 1));
    RingOpCounter ops2;
    fast_moebius(kField, f, n, 1, &ops2);
    CHECK(ops2.additions == static_cast<std::uint64_t>(n) << (n - 1));
  }
}

TEST_CASE("exact cover power small cases") {
  const std::vector<u64> ones(4, 1);
  CHECK(exact_cover_power(kField, weighted(ones, 2, 3), 2) == ZPoly(kField.modulus(), {0, 0, 4}));
  CHECK(exact_cover_power(kField, weighted(ones, 2, 5), 2) ==
        ZPoly(kField.modulus(), {0, 0, 4, 4, 1}));

  const u64 t = 12345;
  const std::vector<u64> single{1, t};
  for (int q = 1; q <= 5; ++q) {
    const auto r = exact_cover_power(kField, weighted(single, 1, 2), q);
    CHECK(r[0] == 0);
    CHECK(r[1] == kField.mul(q, t));
  }

  std::mt19937_64 rng(4);
  const auto f = random_values(rng, 1 << 6);
  const auto r = exact_cover_power(kField, weighted(f, 6, 7), 1);
  CHECK(r[6] == f[63]);
}

TEST_CASE("exact cover power against tuple enumeration") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 4; ++n)
    for (int q = 1; q <= 4; ++q)
      for (int trial = 0; trial < 3; ++trial) {
        auto f = random_values(rng, std::size_t{1} << n);
        f[0] = 1;
        const auto fz = weighted(f, n, n + 1);
        const auto single = exact_cover_power(kField, fz, q);
        CHECK(single[n] == disjoint_cover_sum(f, n, q));
        const auto all = exact_cover_powers(kField, fz, q);
        REQUIRE(all.size() == static_cast<std::size_t>(q));
        CHECK(all[q - 1] == single);
      }
}

TEST_CASE("split evaluation is independent of the split size") {
  std::mt19937_64 rng(6);
  for (int n = 0; n <= 10; ++n) {
    auto f = random_values(rng, std::size_t{1} << n);
    f[0] = 1;
    const int qmax = std::min(n + 1, 4);
    const auto dense = exact_cover_powers(kField, weighted(f, n, n + 1), qmax);
    const auto fn = as_function(f);
    for (int s = 0; s <= n; ++s) {
      CAPTURE(n);
      CAPTURE(s);
      CHECK(split_eval(kField, n, n, fn, qmax, s) == dense);
      CHECK(split_eval_single(kField, n, n, fn, qmax, s) == dense[qmax - 1]);
    }
  }
  const std::vector<u64> ones(4, 1);
  CHECK(split_eval_single(kField, 2, 4, as_function(ones), 2, 1) ==
        ZPoly(kField.modulus(), {0, 0, 4, 4, 1}));
  CHECK_THROWS(split_eval(kField, 3, 3, as_function(ones), 2, 4));
  CHECK_THROWS(split_eval(kField, 3, 3, as_function(ones), 2, -1));
}

TEST_CASE("split evaluation operation counts follow the tradeoff") {
  std::mt19937_64 rng(7);
  const int n = 10;
  auto f = random_values(rng, std::size_t{1} << n);
  f[0] = 1;
  std::vector<std::uint64_t> counts;
  for (int s = 0; s <= n; ++s) {
    RingOpCounter ops;
    split_eval_single(kField, n, n, as_function(f), 2, s, &ops);
    counts.push_back(ops.total());
  }
  for (int s = 1; s <= n; ++s) CHECK(counts[s] <= counts[s - 1]);
  CHECK(counts[0] > 5 * counts[n]);
}

TEST_CASE("layered convolution") {
  const int n = 3;
  std::vector<u64> s1(8, 0), sk1(8, 0), out(8, 0);
  s1[0b001] = 5;
  s1[0b010] = 7;
  sk1[0b001] = 11;
  sk1[0b010] = 13;
  layered_convolve(kField, s1, sk1, n, 2, out);
  CHECK(out[0b011] == 5 * 13 + 7 * 11);
  CHECK(out[0b101] == 0);

  std::vector<u64> zero(8, 0), out2(8, 99);
  layered_convolve(kField, s1, zero, n, 2, out2);
  CHECK(out2[0b011] == 0);
  CHECK(out2[0b110] == 0);

  std::mt19937_64 rng(8);
  const int m = 6;
  const auto a = random_values(rng, 1 << m), b = random_values(rng, 1 << m);
  std::vector<u64> got(1 << m, 0);
  for (int d = 1; d <= m; ++d) layered_convolve(kField, a, b, m, d, got);
  for (VertexSet w = 1; w < (1u << m); ++w) {
    u64 want = 0;
    for (VertexSet u = (w - 1) & w; u; u = (u - 1) & w) want = kField.add(want, kField.mul(a[u], b[w & ~u]));
    CHECK(got[w] == want);
  }
}

TEST_CASE("sets of a given size") {
  int count = 0;
  VertexSet last = 0;
  bool increasing = true;
  for_each_set_of_size(8, 3, [&](VertexSet w) {
    if (set_size(w) != 3) increasing = false;
    if (count && w <= last) increasing = false;
    last = w;
    ++count;
  });
  CHECK(count == 56);
  CHECK(increasing);
  int empty = 0;
  for_each_set_of_size(4, 0, [&](VertexSet w) { empty += (w == 0); });
  CHECK(empty == 1);
  int full = 0;
  for_each_set_of_size(32, 32, [&](VertexSet w) { full += (w == full_set(32)); });
  CHECK(full == 1);
}
