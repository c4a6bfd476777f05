#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tutte/cover.hpp"
#include "tutte/oracles.hpp"

using namespace tutte;

namespace {

const PrimeField kField(1000000007);

// Hamiltonian paths and cycles of D[X] by permutation search.
std::pair<long, long> paths_cycles_by_search(const Digraph& d, VertexSet x) {
  std::vector<int> vs;
  for (VertexSet r = x; r; r &= r - 1) vs.push_back(min_vertex(r));
  long paths = 0, cycles = 0;
  if (vs.size() == 1) return {1, d.multiplicity(vs[0], vs[0])};
  do {
    long ways = 1;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) ways *= d.multiplicity(vs[i], vs[i + 1]);
    paths += ways;
    // Count each cycle once: start at the smallest vertex.
    if (vs[0] == vs.front() && vs[0] == *std::min_element(vs.begin(), vs.end()))
      cycles += ways * d.multiplicity(vs.back(), vs[0]);
  } while (std::next_permutation(vs.begin(), vs.end()));
  return {paths, cycles};
}

}  // namespace

TEST_CASE("walk counts") {
  const auto digon = testing::fixture_digraph("digon.txt");
  CHECK(count_walks(digon, kField, 0b11, 1, 1, 0) == 1);
  CHECK(count_walks(digon, kField, 0b11, 1, 1, 2) == 1);
  CHECK(count_walks(digon, kField, 0b11, 1, 1, 1) == 0);
  CHECK(count_walks(digon, kField, 0b01, 1, 2, 1) == 0);
  const auto multi = parse_digraph("2\n1 2\n1 2\n2 2\n");
  CHECK(count_walks(multi, kField, 0b11, 1, 2, 3) == 2);
}

TEST_CASE("spanning paths and cycles") {
  const auto loop = spanning_paths_cycles(testing::fixture_digraph("dloop.txt"), kField);
  CHECK(loop.paths[1] == 1);
  CHECK(loop.cycles[1] == 1);
  const auto digon = spanning_paths_cycles(testing::fixture_digraph("digon.txt"), kField);
  CHECK(digon.paths[0b11] == 2);
  CHECK(digon.cycles[0b11] == 1);
  CHECK(digon.paths[0] == 0);
  CHECK(digon.cycles[0] == 0);
  const auto apart = spanning_paths_cycles(Digraph(2, {}), kField);
  CHECK(apart.paths[0b11] == 0);
  CHECK(apart.cycles[0b11] == 0);
  CHECK(apart.paths[0b01] == 1);

  // A loop on the larger vertex must not count as a spanning cycle of {1, 2}.
  const auto looped = spanning_paths_cycles(parse_digraph("2\n1 2\n2 1\n2 2\n"), kField);
  CHECK(looped.cycles[0b11] == 1);
  CHECK(looped.cycles[0b10] == 1);

  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto d = testing::random_digraph(rng, n, static_cast<int>(rng() % 16));
    const auto pc = spanning_paths_cycles(d, kField);
    for (VertexSet x = 1; x <= full_set(n); ++x) {
      const auto [p, c] = paths_cycles_by_search(d, x);
      CHECK(pc.paths[x] == static_cast<u64>(p));
      CHECK(pc.cycles[x] == static_cast<u64>(c));
    }
  }
}

TEST_CASE("cover tables of tiny digraphs") {
  for (auto mode : {CoverMode::fast, CoverMode::polyspace}) {
    const auto lone = cover_table(Digraph(1, {}), mode);
    CHECK(lone.at(1, 0) == 1);
    CHECK(lone.at(0, 1) == 0);
    const auto loop = cover_table(testing::fixture_digraph("dloop.txt"), mode);
    CHECK(loop.at(1, 0) == 1);
    CHECK(loop.at(0, 1) == 1);
    const auto digon = cover_table(testing::fixture_digraph("digon.txt"), mode);
    CHECK(digon.at(2, 0) == 1);
    CHECK(digon.at(1, 0) == 2);
    CHECK(digon.at(0, 1) == 1);
    CHECK(digon.at(1, 1) == 0);
    CHECK(digon.at(0, 2) == 0);
  }
}

TEST_CASE("cover modes agree with enumeration") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto d = testing::random_digraph(rng, n, static_cast<int>(rng() % 14));
    CAPTURE(n);
    const auto want = oracle::cover_bruteforce(d);
    CHECK(cover_table(d, CoverMode::fast) == want);
    CHECK(cover_table(d, CoverMode::polyspace, 2) == want);
    mpz_class cycle_covers = 0;
    for (int j = 0; j <= n; ++j) cycle_covers += want.at(0, j);
    CHECK(cycle_covers == oracle::permanent_bruteforce(d));
  }
  CHECK(cover_table(testing::fixture_digraph("dmixed.txt"), CoverMode::fast) ==
        oracle::cover_bruteforce(testing::fixture_digraph("dmixed.txt")));
}

TEST_CASE("cover evaluation") {
  const auto digon = cover_table(testing::fixture_digraph("digon.txt"), CoverMode::fast);
  CHECK(cover_evaluate(digon, 1, 1) == 3);
  CHECK(cover_evaluate(digon, 0, 5) == 5);
  CHECK(cover_evaluate(digon, 3, 0) == 6 + 6);
  const auto loop = cover_table(testing::fixture_digraph("dloop.txt"), CoverMode::fast);
  CHECK(cover_evaluate(loop, 2, 3) == 5);
  CHECK(cover_evaluate(loop, mpq_class(1, 2), 0) == mpq_class(1, 2));
}
