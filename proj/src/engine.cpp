#include "tutte/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "tutte/component_recursion.hpp"
#include "tutte/connected_sets.hpp"

namespace tutte {

std::string Algorithm::name() const {
  switch (kind) {
    case Kind::dense: return "dense";
    case Kind::polyspace: return "polyspace";
    case Kind::split: return "split:" + std::to_string(split_size);
    case Kind::connected: return "connected";
    case Kind::recursion: return "recursion";
  }
  return "?";
}

std::uint64_t working_bytes(const Algorithm& a, int n) {
  const std::uint64_t width = static_cast<std::uint64_t>(n) + 1;
  switch (a.kind) {
    case Algorithm::Kind::dense:
      // f_z table plus the u32 edge-count / weight table.
      return (std::uint64_t{1} << n) * (width + 1) * sizeof(u64);
    case Algorithm::Kind::split:
      return (std::uint64_t{1} << a.split_size) * width * sizeof(u64);
    case Algorithm::Kind::polyspace:
      return width * width * sizeof(u64);
    case Algorithm::Kind::connected:
      // Worst case every set is connected.
      return (std::uint64_t{1} << n) * width * width * width * sizeof(u64);
    case Algorithm::Kind::recursion:
      return (std::uint64_t{1} << n) * (width + 2) * sizeof(u64);
  }
  return 0;
}

Algorithm choose_algorithm(int n, std::uint64_t budget_bytes, int threads) {
  const std::uint64_t workers = static_cast<std::uint64_t>(std::max(threads, 1));
  if (working_bytes(Algorithm::dense(), n) * workers <= budget_bytes) return Algorithm::dense();
  for (int s = n - 1; s >= 1; --s)
    if (working_bytes(Algorithm::split(s), n) * workers <= budget_bytes) return Algorithm::split(s);
  return Algorithm::polyspace();
}

NodeEvaluator node_evaluator(const Multigraph& g, const Algorithm& a) {
  const int n = g.vertex_count();
  switch (a.kind) {
    case Algorithm::Kind::dense:
    case Algorithm::Kind::polyspace:
    case Algorithm::Kind::split: {
      Strategy s = a.kind == Algorithm::Kind::dense       ? Strategy::dense()
                   : a.kind == Algorithm::Kind::polyspace ? Strategy::direct()
                                                          : Strategy::split(std::min(a.split_size, n));
      return [&g, s, n](const PrimeField& f, u64 w) {
        auto inst = PottsInstance::uniform(g, f, w, s);
        return q_coefficients(f, potts_values(inst, n + 1));
      };
    }
    case Algorithm::Kind::connected:
      return [&g](const PrimeField& f, u64 w) {
        std::vector<u64> weights(g.edge_count(), w);
        ConnectedSetEvaluator eval(g, f, weights);
        return q_coefficients(f, eval.potts_values());
      };
    case Algorithm::Kind::recursion:
      return [&g, n](const PrimeField& f, u64 w) {
        auto s = s_table(g, f, w);
        std::vector<u64> a(n + 1, 0);
        for (int k = 1; k <= n; ++k) a[k] = s.at(full_set(n), k);
        return a;
      };
  }
  throw std::logic_error("unknown algorithm");
}

ZCoefficients z_coefficients(const Multigraph& connected, const Algorithm& a, int threads) {
  if (a.kind == Algorithm::Kind::split && a.split_size < 0)
    throw std::invalid_argument("split size must be nonnegative");
  return interpolate_z_coefficients(connected, node_evaluator(connected, a), threads);
}

TutteTable compute_tutte(const Multigraph& g, const Algorithm& a, int threads) {
  if (a.kind == Algorithm::Kind::split && (a.split_size < 0 || a.split_size > g.vertex_count()))
    throw std::invalid_argument("split size must lie in 0..n");
  std::vector<TutteTable> parts;
  for (VertexSet comp : connected_components(g)) {
    Multigraph h = g.induced(comp);
    parts.push_back(assemble_tutte(z_coefficients(h, a, threads)));
  }
  return combine_components(parts);
}

}  // namespace tutte
