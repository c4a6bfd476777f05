#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tutte/engine.hpp"
#include "tutte/oracles.hpp"

using namespace tutte;

namespace {

std::vector<Algorithm> all_algorithms(int n) {
  std::vector<Algorithm> out{Algorithm::dense(), Algorithm::polyspace(), Algorithm::connected(),
                             Algorithm::recursion()};
  for (int s = 0; s <= n; ++s) out.push_back(Algorithm::split(s));
  return out;
}

}  // namespace

TEST_CASE("every pipeline matches the subset expansion on the fixtures") {
  for (const char* name : {"k2.txt", "k3.txt", "k4.txt", "c4.txt", "b2.txt", "loop.txt",
                           "disconnected.txt", "multi.txt"}) {
    CAPTURE(name);
    const auto g = testing::fixture_graph(name);
    const auto expected = oracle::tutte_bruteforce(g);
    for (const auto& a : all_algorithms(g.vertex_count())) {
      CAPTURE(a.name());
      CHECK(compute_tutte(g, a) == expected);
    }
  }
}

TEST_CASE("random multigraphs across pipelines and thread counts") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = testing::random_multigraph(rng, n, static_cast<int>(rng() % 11));
    CAPTURE(to_edge_list(g));
    const auto expected = oracle::tutte_deletion_contraction(g);
    for (const auto& a : all_algorithms(n)) {
      CAPTURE(a.name());
      CHECK(compute_tutte(g, a) == expected);
    }
    CHECK(compute_tutte(g, Algorithm::dense(), 3) == expected);
    CHECK(compute_tutte(g, Algorithm::split(n / 2), 2) == expected);
  }
}

TEST_CASE("tables do not depend on vertex labels") {
  std::mt19937_64 rng(92);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto g = testing::random_multigraph(rng, n, static_cast<int>(rng() % 14));
    const auto h = g.relabel(testing::random_permutation(rng, n));
    CHECK(compute_tutte(g, Algorithm::dense()) == compute_tutte(h, Algorithm::connected()));
  }
}

TEST_CASE("algorithm selection") {
  CHECK(working_bytes(Algorithm::dense(), 10) == 1024 * 12 * 8);
  CHECK(working_bytes(Algorithm::split(3), 10) == 8 * 11 * 8);
  CHECK(working_bytes(Algorithm::polyspace(), 10) < working_bytes(Algorithm::split(1), 10) * 100);
  CHECK(choose_algorithm(10, std::uint64_t{1} << 30, 1) == Algorithm::dense());
  CHECK(choose_algorithm(10, working_bytes(Algorithm::dense(), 10) * 2 - 1, 2) ==
        Algorithm::split(9));
  CHECK(choose_algorithm(30, 1000, 1).kind == Algorithm::Kind::split);
  CHECK(choose_algorithm(30, 10, 1) == Algorithm::polyspace());
  CHECK(Algorithm::split(4).name() == "split:4");
}

TEST_CASE("split sizes out of range") {
  const auto k3 = testing::complete_graph(3);
  CHECK_THROWS_AS(compute_tutte(k3, Algorithm::split(-1)), std::invalid_argument);
  CHECK_THROWS_AS(compute_tutte(k3, Algorithm::split(4)), std::invalid_argument);
  CHECK_NOTHROW(compute_tutte(k3, Algorithm::split(3)));
}
