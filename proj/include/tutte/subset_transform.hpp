#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/modular.hpp"

namespace tutte {

/// A function 2^V -> R stored as 2^n rows of `width` coefficients each.
/// Width 1 is a scalar lattice function; width cap+1 holds truncated z-polys.
class PolyTable {
 public:
  PolyTable(int n, int width)
      : n_(n), width_(width), data_((std::size_t{1} << n) * width, 0) {}

  int n() const noexcept { return n_; }
  int width() const noexcept { return width_; }
  std::size_t rows() const noexcept { return std::size_t{1} << n_; }

  std::span<u64> operator[](VertexSet x) noexcept {
    return {data_.data() + std::size_t{x} * width_, static_cast<std::size_t>(width_)};
  }
  std::span<const u64> operator[](VertexSet x) const noexcept {
    return {data_.data() + std::size_t{x} * width_, static_cast<std::size_t>(width_)};
  }
  std::span<u64> data() noexcept { return data_; }
  std::span<const u64> data() const noexcept { return data_; }

  bool operator==(const PolyTable&) const = default;

 private:
  int n_;
  int width_;
  std::vector<u64> data_;
};

/// Optional instrumentation: counts of ring-element operations.
struct RingOpCounter {
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t total() const noexcept { return additions + multiplications; }
};

// In-place f -> f zeta, f zeta(Y) = sum over X subset of Y of f(X).
void fast_zeta(const PrimeField& f, std::span<u64> data, int n, int width,
               RingOpCounter* ops = nullptr);
// In-place f -> f mu, f mu(X) = sum over Y subset of X of (-1)^|X\Y| f(Y).
void fast_moebius(const PrimeField& f, std::span<u64> data, int n, int width,
                  RingOpCounter* ops = nullptr);

inline void fast_zeta(const PrimeField& f, PolyTable& t, RingOpCounter* ops = nullptr) {
  fast_zeta(f, t.data(), t.n(), t.width(), ops);
}
inline void fast_moebius(const PrimeField& f, PolyTable& t, RingOpCounter* ops = nullptr) {
  fast_moebius(f, t.data(), t.n(), t.width(), ops);
}

/// ((f_z zeta)^q mu)(V) as a truncated z-polynomial, for f_z stored in `fz`
/// (row X already carrying its z^|X| factor). Its z^n coefficient sums
/// f(U_1)...f(U_q) over ordered q-tuples of pairwise disjoint sets covering V.
ZPoly exact_cover_power(const PrimeField& f, const PolyTable& fz, int q,
                        RingOpCounter* ops = nullptr);

/// Same value for every q = 1..qmax from a single zeta transform.
/// Consumes `fz` (it is transformed in place).
std::vector<ZPoly> exact_cover_powers(const PrimeField& f, PolyTable fz, int qmax,
                                      RingOpCounter* ops = nullptr);

/// Implicit set function: adds f(X) into `acc` (width cap+1).
using SetFunction = std::function<void(VertexSet x, std::span<u64> acc)>;

/// ((f zeta)^q mu)(V) for q = 1..qmax through the split transform: the s
/// highest-labelled vertices are handled by a fast zeta transform on a
/// 2^s-row table, the rest by direct summation. s = 0 is the fully direct
/// polynomial-space evaluation, s = n the dense one.
std::vector<ZPoly> split_eval(const PrimeField& f, int n, int cap, const SetFunction& fn,
                              int qmax, int s, RingOpCounter* ops = nullptr);

ZPoly split_eval_single(const PrimeField& f, int n, int cap, const SetFunction& fn, int q,
                        int s, RingOpCounter* ops = nullptr);

/// For every W with |W| = d, out[W] = sum over nonempty proper U of W of
/// s1[U] * sk1[W \ U]. Reads s1 and sk1 only on sets smaller than d.
void layered_convolve(const PrimeField& f, std::span<const u64> s1, std::span<const u64> sk1,
                      int n, int d, std::span<u64> out);

/// Calls fn(W) for each W subset of full_set(n) with |W| = d, in increasing order.
template <class Fn>
void for_each_set_of_size(int n, int d, Fn&& fn) {
  if (d < 0 || d > n) return;
  if (d == 0) {
    fn(VertexSet{0});
    return;
  }
  std::uint64_t w = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (w < limit) {
    fn(static_cast<VertexSet>(w));
    std::uint64_t c = w & (~w + 1);
    std::uint64_t r = w + c;
    w = (((r ^ w) >> 2) / c) | r;
  }
}

}  // namespace tutte
