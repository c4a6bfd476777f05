#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace tutte {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic in Z_p for an odd prime p < 2^62.
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 modulus() const noexcept { return p_; }

  u64 reduce(u64 a) const noexcept { return a % p_; }
  u64 reduce(u128 a) const noexcept { return static_cast<u64>(a % p_); }
  // Reduces a possibly negative integer.
  u64 from_signed(long long a) const noexcept {
    long long r = a % static_cast<long long>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(p_) : r);
  }
  u64 from_mpz(const mpz_class& a) const;

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a ? p_ - a : 0; }
  u64 mul(u64 a, u64 b) const noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % p_);
  }
  u64 pow(u64 a, u64 e) const noexcept;
  // Requires a != 0 mod p.
  u64 inv(u64 a) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  u64 p_;
};

/// Truncated polynomial c_0 + c_1 z + ... + c_cap z^cap over Z_p.
class ZPoly {
 public:
  ZPoly(u64 modulus, int cap) : p_(modulus), c_(cap + 1, 0) {}
  ZPoly(u64 modulus, std::vector<u64> coeffs);

  static ZPoly one(u64 modulus, int cap) {
    ZPoly r(modulus, cap);
    r.c_[0] = 1;
    return r;
  }

  u64 modulus() const noexcept { return p_; }
  int cap() const noexcept { return static_cast<int>(c_.size()) - 1; }
  u64& operator[](int k) { return c_[k]; }
  u64 operator[](int k) const { return c_[k]; }
  std::span<u64> coeffs() noexcept { return c_; }
  std::span<const u64> coeffs() const noexcept { return c_; }

  bool operator==(const ZPoly&) const = default;

 private:
  u64 p_;
  std::vector<u64> c_;
};

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_scale(const ZPoly& a, u64 s);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_pow(const ZPoly& a, u64 q);

// out = a * b truncated to width = cap + 1 coefficients. out must not alias a or b.
void poly_mul_trunc(const PrimeField& f, const u64* a, const u64* b, u64* out, int width);

// Coefficient of z^k in a * b.
u64 poly_mul_coeff(const PrimeField& f, const u64* a, const u64* b, int k);

/// Successive primes below 2^62, each greater than node_max, until their
/// product exceeds coeff_bound.
std::vector<u64> choose_primes(const mpz_class& coeff_bound, u64 node_max);

/// Coefficients of the unique polynomial of degree < nodes.size() through
/// (nodes[i], values[i]).
std::vector<u64> lagrange_interpolate(const PrimeField& f, std::span<const u64> nodes,
                                      std::span<const u64> values);

/// Precomputed Lagrange basis for a fixed node set, applied to many value vectors.
class Interpolator {
 public:
  Interpolator(const PrimeField& f, std::span<const u64> nodes);
  std::vector<u64> operator()(std::span<const u64> values) const;
  std::size_t size() const noexcept { return d_; }

 private:
  PrimeField f_;
  std::size_t d_;
  std::vector<u64> basis_;  // basis_[i * d + k]: coefficient k of the i-th basis poly
};

struct Residue {
  u64 prime;
  u64 value;
};

/// The unique x in [0, prod p_i) with x = value_i mod prime_i.
mpz_class crt_reconstruct(std::span<const Residue> residues);

}  // namespace tutte
