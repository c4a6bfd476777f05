#include "tutte/modular.hpp"

#include <algorithm>

namespace tutte {

namespace {

void require_same(const ZPoly& a, const ZPoly& b) {
  if (a.modulus() != b.modulus() || a.cap() != b.cap())
    throw std::invalid_argument("ZPoly operands differ in modulus or cap");
}

}  // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 3 || p >= (u64{1} << 62) || p % 2 == 0)
    throw std::invalid_argument("modulus must be an odd prime below 2^62");
}

u64 PrimeField::from_mpz(const mpz_class& a) const {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &p_);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pm.get_mpz_t());
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(u64), 0, 0, r.get_mpz_t());
  return out;
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept {
  u64 r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("zero has no inverse");
  return pow(a, p_ - 2);
}

ZPoly::ZPoly(u64 modulus, std::vector<u64> coeffs) : p_(modulus), c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("ZPoly needs at least one coefficient");
  for (auto& c : c_) c %= p_;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  require_same(a, b);
  PrimeField f(a.modulus());
  ZPoly r(a.modulus(), a.cap());
  for (int k = 0; k <= a.cap(); ++k) r[k] = f.add(a[k], b[k]);
  return r;
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
  require_same(a, b);
  PrimeField f(a.modulus());
  ZPoly r(a.modulus(), a.cap());
  for (int k = 0; k <= a.cap(); ++k) r[k] = f.sub(a[k], b[k]);
  return r;
}

ZPoly zpoly_scale(const ZPoly& a, u64 s) {
  PrimeField f(a.modulus());
  ZPoly r(a.modulus(), a.cap());
  for (int k = 0; k <= a.cap(); ++k) r[k] = f.mul(a[k], f.reduce(s));
  return r;
}

void poly_mul_trunc(const PrimeField& f, const u64* a, const u64* b, u64* out, int width) {
  // Products are below 2^124, so up to 16 fit in the accumulator.
  for (int k = 0; k < width; ++k) {
    u128 acc = 0;
    int pending = 0;
    for (int i = 0; i <= k; ++i) {
      acc += static_cast<u128>(a[i]) * b[k - i];
      if (++pending == 15) {
        acc = acc % f.modulus();
        pending = 0;
      }
    }
    out[k] = f.reduce(acc);
  }
}

u64 poly_mul_coeff(const PrimeField& f, const u64* a, const u64* b, int k) {
  u128 acc = 0;
  int pending = 0;
  for (int i = 0; i <= k; ++i) {
    acc += static_cast<u128>(a[i]) * b[k - i];
    if (++pending == 15) {
      acc = acc % f.modulus();
      pending = 0;
    }
  }
  return f.reduce(acc);
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  require_same(a, b);
  PrimeField f(a.modulus());
  ZPoly r(a.modulus(), a.cap());
  poly_mul_trunc(f, a.coeffs().data(), b.coeffs().data(), r.coeffs().data(), a.cap() + 1);
  return r;
}

ZPoly zpoly_pow(const ZPoly& a, u64 q) {
  ZPoly result = ZPoly::one(a.modulus(), a.cap());
  ZPoly base = a;
  while (q) {
    if (q & 1) result = zpoly_mul(result, base);
    q >>= 1;
    if (q) base = zpoly_mul(base, base);
  }
  return result;
}

std::vector<u64> choose_primes(const mpz_class& coeff_bound, u64 node_max) {
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::vector<u64> primes;
  mpz_class product = 1;
  mpz_class candidate = (mpz_class(1) << 62) - 1;
  while (product <= coeff_bound) {
    while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) candidate -= 2;
    u64 p = candidate.get_ui();
    if (p <= node_max) throw std::invalid_argument("node range exceeds available primes");
    primes.push_back(p);
    product *= candidate;
    candidate -= 2;
  }
  return primes;
}

Interpolator::Interpolator(const PrimeField& f, std::span<const u64> nodes)
    : f_(f), d_(nodes.size()), basis_(d_ * d_, 0) {
  if (d_ == 0) throw std::invalid_argument("no interpolation nodes");
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (f.reduce(nodes[i]) == f.reduce(nodes[j]))
        throw std::invalid_argument("interpolation nodes must be distinct");

  // master(x) = prod (x - x_i), degree d.
  std::vector<u64> master(d_ + 1, 0);
  master[0] = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    u64 xi = f.reduce(nodes[i]);
    for (std::size_t k = i + 1; k > 0; --k)
      master[k] = f.sub(master[k - 1], f.mul(master[k], xi));
    master[0] = f.neg(f.mul(master[0], xi));
  }
  std::vector<u64> quotient(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    u64 xi = f.reduce(nodes[i]);
    // Synthetic division of master by (x - x_i).
    u64 carry = 0;
    for (std::size_t k = d_; k > 0; --k) {
      carry = f.add(master[k], f.mul(carry, xi));
      quotient[k - 1] = carry;
    }
    u64 denom = 1;
    for (std::size_t j = 0; j < d_; ++j)
      if (j != i) denom = f.mul(denom, f.sub(xi, f.reduce(nodes[j])));
    u64 scale = f.inv(denom);
    for (std::size_t k = 0; k < d_; ++k) basis_[i * d_ + k] = f.mul(quotient[k], scale);
  }
}

std::vector<u64> Interpolator::operator()(std::span<const u64> values) const {
  if (values.size() != d_) throw std::invalid_argument("value count differs from node count");
  std::vector<u64> out(d_, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    u64 v = f_.reduce(values[i]);
    if (!v) continue;
    for (std::size_t k = 0; k < d_; ++k) out[k] = f_.add(out[k], f_.mul(v, basis_[i * d_ + k]));
  }
  return out;
}

std::vector<u64> lagrange_interpolate(const PrimeField& f, std::span<const u64> nodes,
                                      std::span<const u64> values) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("node and value counts differ");
  return Interpolator(f, nodes)(values);
}

mpz_class crt_reconstruct(std::span<const Residue> residues) {
  mpz_class x = 0;
  mpz_class modulus = 1;
  for (const auto& r : residues) {
    mpz_class p = static_cast<unsigned long>(r.prime);
    mpz_class v = static_cast<unsigned long>(r.value % r.prime);
    // x' = x + modulus * ((v - x) * modulus^{-1} mod p)
    mpz_class inv, diff = v - x;
    if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::invalid_argument("CRT moduli must be pairwise coprime");
    mpz_class t = diff * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
    x += modulus * t;
    modulus *= p;
  }
  return x;
}

}  // namespace tutte
