#include "tutte/subset_transform.hpp"

#include <stdexcept>

namespace tutte {

namespace {

void add_row(const PrimeField& f, u64* dst, const u64* src, int width) {
  for (int k = 0; k < width; ++k) dst[k] = f.add(dst[k], src[k]);
}

void sub_row(const PrimeField& f, u64* dst, const u64* src, int width) {
  for (int k = 0; k < width; ++k) dst[k] = f.sub(dst[k], src[k]);
}

// Accumulates sign * g^q into out[q - 1] for q = 1..qmax by successive products.
class PowerAccumulator {
 public:
  PowerAccumulator(const PrimeField& f, int width, int qmax, RingOpCounter* ops)
      : f_(f), width_(width), qmax_(qmax), ops_(ops), sums_(qmax * width, 0),
        cur_(width), next_(width) {}

  void consume(bool negative, std::span<const u64> g) {
    std::copy(g.begin(), g.end(), cur_.begin());
    for (int q = 1; q <= qmax_; ++q) {
      if (q > 1) {
        poly_mul_trunc(f_, cur_.data(), g.data(), next_.data(), width_);
        cur_.swap(next_);
        if (ops_) ++ops_->multiplications;
      }
      u64* dst = sums_.data() + (q - 1) * width_;
      negative ? sub_row(f_, dst, cur_.data(), width_) : add_row(f_, dst, cur_.data(), width_);
      if (ops_) ++ops_->additions;
    }
  }

  std::vector<ZPoly> result() const {
    std::vector<ZPoly> out;
    out.reserve(qmax_);
    for (int q = 0; q < qmax_; ++q)
      out.emplace_back(f_.modulus(), std::vector<u64>(sums_.begin() + q * width_,
                                                      sums_.begin() + (q + 1) * width_));
    return out;
  }

 private:
  PrimeField f_;
  int width_;
  int qmax_;
  RingOpCounter* ops_;
  std::vector<u64> sums_;
  std::vector<u64> cur_, next_;
};

// Accumulates sign * g^q for one q by binary powering.
class SinglePowerAccumulator {
 public:
  SinglePowerAccumulator(const PrimeField& f, int width, int q, RingOpCounter* ops)
      : f_(f), width_(width), q_(q), ops_(ops), sum_(width, 0), res_(width), base_(width),
        tmp_(width) {}

  void consume(bool negative, std::span<const u64> g) {
    std::fill(res_.begin(), res_.end(), 0);
    res_[0] = 1;
    std::copy(g.begin(), g.end(), base_.begin());
    bool res_is_one = true;
    for (int e = q_; e; e >>= 1) {
      if (e & 1) {
        if (res_is_one) {
          res_ = base_;
          res_is_one = false;
        } else {
          poly_mul_trunc(f_, res_.data(), base_.data(), tmp_.data(), width_);
          res_.swap(tmp_);
          if (ops_) ++ops_->multiplications;
        }
      }
      if (e > 1) {
        poly_mul_trunc(f_, base_.data(), base_.data(), tmp_.data(), width_);
        base_.swap(tmp_);
        if (ops_) ++ops_->multiplications;
      }
    }
    negative ? sub_row(f_, sum_.data(), res_.data(), width_)
             : add_row(f_, sum_.data(), res_.data(), width_);
    if (ops_) ++ops_->additions;
  }

  ZPoly result() const { return ZPoly(f_.modulus(), sum_); }

 private:
  PrimeField f_;
  int width_;
  int q_;
  RingOpCounter* ops_;
  std::vector<u64> sum_, res_, base_, tmp_;
};

template <class Consumer>
void dense_sweep(const PolyTable& transformed, Consumer& c) {
  const int n = transformed.n();
  for (std::size_t y = 0; y < transformed.rows(); ++y) {
    const VertexSet ys = static_cast<VertexSet>(y);
    c.consume(((n - set_size(ys)) & 1) != 0, transformed[ys]);
  }
}

template <class Consumer>
void split_sweep(const PrimeField& f, int n, int cap, const SetFunction& fn, int s,
                 RingOpCounter* ops, Consumer& c) {
  if (s < 0 || s > n) throw std::invalid_argument("split size out of range");
  const int width = cap + 1;
  const int n1 = n - s;
  PolyTable table(s, width);
  for (std::uint64_t y1w = 0; y1w < (std::uint64_t{1} << n1); ++y1w) {
    const VertexSet y1 = static_cast<VertexSet>(y1w);
    std::fill(table.data().begin(), table.data().end(), 0);
    for (std::size_t x2 = 0; x2 < table.rows(); ++x2) {
      const VertexSet high = static_cast<VertexSet>(x2 << n1);
      auto row = table[static_cast<VertexSet>(x2)];
      for (VertexSet x1 = y1;; x1 = (x1 - 1) & y1) {
        fn(x1 | high, row);
        if (ops) ++ops->additions;
        if (x1 == 0) break;
      }
    }
    fast_zeta(f, table, ops);
    const int outer = n1 - set_size(y1);
    for (std::size_t y2 = 0; y2 < table.rows(); ++y2) {
      const VertexSet y2s = static_cast<VertexSet>(y2);
      c.consume(((outer + s - set_size(y2s)) & 1) != 0, table[y2s]);
    }
  }
}

}  // namespace

void fast_zeta(const PrimeField& f, std::span<u64> data, int n, int width, RingOpCounter* ops) {
  const std::size_t rows = std::size_t{1} << n;
  if (data.size() != rows * width) throw std::invalid_argument("table size mismatch");
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t x = 0; x < rows; ++x)
      if (x & bit) add_row(f, data.data() + x * width, data.data() + (x ^ bit) * width, width);
  }
  if (ops) ops->additions += static_cast<std::uint64_t>(n) * (rows / 2);
}

void fast_moebius(const PrimeField& f, std::span<u64> data, int n, int width,
                  RingOpCounter* ops) {
  const std::size_t rows = std::size_t{1} << n;
  if (data.size() != rows * width) throw std::invalid_argument("table size mismatch");
  for (int b = 0; b < n; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t x = 0; x < rows; ++x)
      if (x & bit) sub_row(f, data.data() + x * width, data.data() + (x ^ bit) * width, width);
  }
  if (ops) ops->additions += static_cast<std::uint64_t>(n) * (rows / 2);
}

ZPoly exact_cover_power(const PrimeField& f, const PolyTable& fz, int q, RingOpCounter* ops) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  PolyTable t = fz;
  fast_zeta(f, t, ops);
  SinglePowerAccumulator acc(f, t.width(), q, ops);
  dense_sweep(t, acc);
  return acc.result();
}

std::vector<ZPoly> exact_cover_powers(const PrimeField& f, PolyTable fz, int qmax,
                                      RingOpCounter* ops) {
  if (qmax < 1) throw std::invalid_argument("qmax must be positive");
  fast_zeta(f, fz, ops);
  PowerAccumulator acc(f, fz.width(), qmax, ops);
  dense_sweep(fz, acc);
  return acc.result();
}

std::vector<ZPoly> split_eval(const PrimeField& f, int n, int cap, const SetFunction& fn,
                              int qmax, int s, RingOpCounter* ops) {
  if (qmax < 1) throw std::invalid_argument("qmax must be positive");
  PowerAccumulator acc(f, cap + 1, qmax, ops);
  split_sweep(f, n, cap, fn, s, ops, acc);
  return acc.result();
}

ZPoly split_eval_single(const PrimeField& f, int n, int cap, const SetFunction& fn, int q,
                        int s, RingOpCounter* ops) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  SinglePowerAccumulator acc(f, cap + 1, q, ops);
  split_sweep(f, n, cap, fn, s, ops, acc);
  return acc.result();
}

void layered_convolve(const PrimeField& f, std::span<const u64> s1, std::span<const u64> sk1,
                      int n, int d, std::span<u64> out) {
  const std::size_t rows = std::size_t{1} << n;
  if (s1.size() != rows || sk1.size() != rows || out.size() != rows)
    throw std::invalid_argument("table size mismatch");
  for_each_set_of_size(n, d, [&](VertexSet w) {
    u128 acc = 0;
    int pending = 0;
    // Proper nonempty U: start below W, stop before the empty set.
    for (VertexSet u = (w - 1) & w; u; u = (u - 1) & w) {
      acc += static_cast<u128>(s1[u]) * sk1[w & ~u];
      if (++pending == 15) {
        acc %= f.modulus();
        pending = 0;
      }
    }
    out[w] = f.reduce(acc);
  });
}

}  // namespace tutte
