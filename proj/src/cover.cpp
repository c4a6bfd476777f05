#include "tutte/cover.hpp"

#include <stdexcept>

#include "tutte/parallel.hpp"
#include "tutte/subset_transform.hpp"

namespace tutte {

namespace {

// One walk step inside S: next[t] = sum over v in S of cur[v] * mult(v, t).
void walk_step(const Digraph& d, const PrimeField& f, VertexSet s_set, const std::vector<u64>& cur,
               std::vector<u64>& next) {
  for (VertexSet ts = s_set; ts; ts &= ts - 1) {
    const int t = min_vertex(ts);
    u128 acc = 0;
    int pending = 0;
    for (VertexSet vs = s_set; vs; vs &= vs - 1) {
      const int v = min_vertex(vs);
      const int mult = d.multiplicity(v, t);
      if (!mult || !cur[v - 1]) continue;
      acc += static_cast<u128>(cur[v - 1]) * static_cast<u64>(mult);
      if (++pending == 15) {
        acc %= f.modulus();
        pending = 0;
      }
    }
    next[t - 1] = f.reduce(acc);
  }
}

u64 sum_over(const PrimeField& f, VertexSet s_set, const std::vector<u64>& v) {
  u64 total = 0;
  for (VertexSet r = s_set; r; r &= r - 1) total = f.add(total, v[min_vertex(r) - 1]);
  return total;
}

// Sum over (i, j), i + j <= n, of sign * [z^n] P^i C^j into acc.
class CoverAccumulator {
 public:
  CoverAccumulator(const PrimeField& f, int n)
      : f_(f), n_(n), width_(n + 1), acc_((n + 1) * (n + 1), 0),
        ppow_((n + 1) * (n + 1), 0), cpow_((n + 1) * (n + 1), 0) {}

  void consume(bool negative, std::span<const u64> p, std::span<const u64> c) {
    powers(p, ppow_);
    powers(c, cpow_);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; i + j <= n_; ++j) {
        u64 v = poly_mul_coeff(f_, ppow_.data() + i * width_, cpow_.data() + j * width_, n_);
        u64& a = acc_[i * width_ + j];
        a = negative ? f_.sub(a, v) : f_.add(a, v);
      }
  }

  // Divides by i! j!.
  std::vector<u64> result() const {
    std::vector<u64> fact(n_ + 1, 1);
    for (int k = 1; k <= n_; ++k) fact[k] = f_.mul(fact[k - 1], k);
    std::vector<u64> out(acc_.size(), 0);
    for (int i = 0; i <= n_; ++i)
      for (int j = 0; i + j <= n_; ++j)
        out[i * width_ + j] = f_.mul(acc_[i * width_ + j], f_.inv(f_.mul(fact[i], fact[j])));
    return out;
  }

 private:
  void powers(std::span<const u64> base, std::vector<u64>& out) {
    std::fill(out.begin(), out.end(), 0);
    out[0] = 1;
    for (int e = 1; e <= n_; ++e)
      poly_mul_trunc(f_, out.data() + (e - 1) * width_, base.data(), out.data() + e * width_,
                     width_);
  }

  PrimeField f_;
  int n_;
  int width_;
  std::vector<u64> acc_;
  std::vector<u64> ppow_, cpow_;
};

std::vector<u64> binomials_mod(const PrimeField& f, int n) {
  std::vector<u64> b((n + 1) * (n + 1), 0);
  for (int a = 0; a <= n; ++a) {
    b[a * (n + 1)] = 1;
    for (int k = 1; k <= a; ++k)
      b[a * (n + 1) + k] = f.add(b[(a - 1) * (n + 1) + k - 1], k <= a - 1 ? b[(a - 1) * (n + 1) + k] : 0);
  }
  return b;
}

}  // namespace

u64 count_walks(const Digraph& d, const PrimeField& f, VertexSet s_set, int s, int t, int len) {
  if (!(s_set & singleton(s)) || !(s_set & singleton(t))) return 0;
  std::vector<u64> cur(d.vertex_count(), 0), next(d.vertex_count(), 0);
  cur[s - 1] = 1;
  for (int step = 0; step < len; ++step) {
    walk_step(d, f, s_set, cur, next);
    cur.swap(next);
  }
  return cur[t - 1];
}

PathCycleCounts spanning_paths_cycles(const Digraph& d, const PrimeField& f) {
  const int n = d.vertex_count();
  const std::size_t rows = std::size_t{1} << n;
  PathCycleCounts out{std::vector<u64>(rows, 0), std::vector<u64>(rows, 0)};

  // g[l][S]: walks of length l inside D[S], summed over all ordered (s, t).
  std::vector<std::vector<u64>> g(n, std::vector<u64>(rows, 0));
  std::vector<u64> cur(n), next(n);
  for (std::size_t sw = 1; sw < rows; ++sw) {
    const VertexSet s_set = static_cast<VertexSet>(sw);
    std::fill(cur.begin(), cur.end(), 0);
    for (VertexSet r = s_set; r; r &= r - 1) cur[min_vertex(r) - 1] = 1;
    g[0][sw] = static_cast<u64>(set_size(s_set));
    for (int l = 1; l < n; ++l) {
      walk_step(d, f, s_set, cur, next);
      cur.swap(next);
      g[l][sw] = sum_over(f, s_set, cur);
    }
  }
  for (int l = 0; l < n; ++l) fast_moebius(f, g[l], n, 1);
  for (std::size_t x = 1; x < rows; ++x) out.paths[x] = g[set_size(static_cast<VertexSet>(x)) - 1][x];

  // Cycles through the smallest vertex s of X live on the sublattice of
  // {s, ..., n}; local bit 0 is s.
  for (int s = 1; s <= n; ++s) {
    const int k = n - s + 1;
    const std::size_t local_rows = std::size_t{1} << k;
    std::vector<std::vector<u64>> h(k + 1, std::vector<u64>(local_rows, 0));
    for (std::size_t lw = 1; lw < local_rows; lw += 2) {
      const VertexSet s_set = static_cast<VertexSet>(lw << (s - 1));
      std::fill(cur.begin(), cur.end(), 0);
      cur[s - 1] = 1;
      for (int l = 1; l <= k; ++l) {
        walk_step(d, f, s_set, cur, next);
        cur.swap(next);
        h[l][lw] = cur[s - 1];
      }
    }
    for (int l = 1; l <= k; ++l) fast_moebius(f, h[l], k, 1);
    for (std::size_t lw = 1; lw < local_rows; lw += 2) {
      const VertexSet x = static_cast<VertexSet>(lw << (s - 1));
      out.cycles[x] = h[set_size(x)][lw];
    }
  }
  return out;
}

std::vector<u64> cover_residues(const Digraph& d, const PrimeField& f, CoverMode mode) {
  const int n = d.vertex_count();
  const int width = n + 1;
  CoverAccumulator acc(f, n);

  if (mode == CoverMode::fast) {
    const auto pc = spanning_paths_cycles(d, f);
    PolyTable ptab(n, width), ctab(n, width);
    for (std::size_t x = 1; x < ptab.rows(); ++x) {
      const VertexSet xs = static_cast<VertexSet>(x);
      ptab[xs][set_size(xs)] = pc.paths[x];
      ctab[xs][set_size(xs)] = pc.cycles[x];
    }
    fast_zeta(f, ptab);
    fast_zeta(f, ctab);
    for (std::size_t u = 0; u < ptab.rows(); ++u) {
      const VertexSet us = static_cast<VertexSet>(u);
      acc.consume(((n - set_size(us)) & 1) != 0, ptab[us], ctab[us]);
    }
    return acc.result();
  }

  const auto binom = binomials_mod(f, n);
  std::vector<u64> p_poly(width), c_poly(width);
  std::vector<u64> totals(n + 1), diag(n + 2);
  std::vector<u64> cur(n), next(n);
  const VertexSet all = full_set(n);
  for (std::uint64_t uw = 0; uw < (std::uint64_t{1} << n); ++uw) {
    const VertexSet u = static_cast<VertexSet>(uw);
    const int usize = set_size(u);
    std::fill(p_poly.begin(), p_poly.end(), 0);
    std::fill(c_poly.begin(), c_poly.end(), 0);
    for (VertexSet s_set = u; s_set; s_set = (s_set - 1) & u) {
      const int ssize = set_size(s_set);
      const int s = min_vertex(s_set);
      const int rest = usize - ssize;
      const int above = set_size(u & ~s_set & ~full_set(s));

      // totals[l] = walks of length l in D[S] over all (s, t), l < |U|.
      std::fill(cur.begin(), cur.end(), 0);
      for (VertexSet r = s_set; r; r &= r - 1) cur[min_vertex(r) - 1] = 1;
      totals[0] = static_cast<u64>(ssize);
      for (int l = 1; l < usize; ++l) {
        walk_step(d, f, s_set, cur, next);
        cur.swap(next);
        totals[l] = sum_over(f, s_set, cur);
      }
      // diag[l] = closed walks of length l at min S, l <= |U|.
      std::fill(cur.begin(), cur.end(), 0);
      cur[s - 1] = 1;
      for (int l = 1; l <= usize; ++l) {
        walk_step(d, f, s_set, cur, next);
        cur.swap(next);
        diag[l] = cur[s - 1];
      }

      for (int k = 0; k <= rest; ++k) {
        u64 term = f.mul(binom[rest * (n + 1) + k], totals[ssize + k - 1]);
        u64& dst = p_poly[ssize + k];
        dst = (k & 1) ? f.sub(dst, term) : f.add(dst, term);
      }
      // Only supersets X of S with min X = min S count toward c(X).
      for (int k = 0; k <= above; ++k) {
        u64 term = f.mul(binom[above * (n + 1) + k], diag[ssize + k]);
        u64& dst = c_poly[ssize + k];
        dst = (k & 1) ? f.sub(dst, term) : f.add(dst, term);
      }
    }
    acc.consume(((set_size(all) - usize) & 1) != 0, p_poly, c_poly);
  }
  return acc.result();
}

CoverTable cover_table(const Digraph& d, CoverMode mode, int threads) {
  const int n = d.vertex_count();
  const int m = d.arc_count();
  const mpz_class bound = mpz_class(1) << m;
  const auto primes = choose_primes(bound, static_cast<u64>(n + 1));
  std::vector<std::vector<u64>> residues(primes.size());
  parallel_for(primes.size(), threads, [&](std::size_t i) {
    residues[i] = cover_residues(d, PrimeField(primes[i]), mode);
  });
  CoverTable t(n, m);
  std::vector<Residue> r(primes.size());
  mpz_class total = 0;
  for (std::size_t idx = 0; idx < t.c.size(); ++idx) {
    for (std::size_t pi = 0; pi < primes.size(); ++pi) r[pi] = {primes[pi], residues[pi][idx]};
    t.c[idx] = crt_reconstruct(r);
    total += t.c[idx];
  }
  if (total > bound) throw ConsistencyError("cover counts exceed 2^m");
  return t;
}

mpq_class cover_evaluate(const CoverTable& t, const mpq_class& x, const mpq_class& y) {
  mpq_class total = 0;
  for (int i = 0; i <= t.n; ++i) {
    mpq_class falling = 1;
    for (int r = 0; r < i; ++r) falling *= x - r;
    mpq_class ypow = 1;
    for (int j = 0; i + j <= t.n; ++j) {
      if (t.at(i, j) != 0) total += mpq_class(t.at(i, j)) * falling * ypow;
      ypow *= y;
    }
  }
  return total;
}

}  // namespace tutte
