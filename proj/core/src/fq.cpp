#include "ffzeta/fq.hpp"

#include <map>
#include <stdexcept>

#include "ffzeta/numbers.hpp"

namespace ffzeta {

namespace {

// Arithmetic on F_p[x] represented as constant-first residue vectors,
// used only to validate and reduce against the field modulus.
using Fp = std::vector<std::uint16_t>;

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Fp fp_mod(Fp a, const Fp& b, std::uint32_t p) {
  fp_trim(a);
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
      a[shift + i] = static_cast<std::uint16_t>((a[shift + i] + p - sub) % p);
    }
    fp_trim(a);
  }
  return a;
}

bool fp_is_irreducible(const Fp& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg == 0) return false;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
      Fp div(d + 1, 0);
      std::uint64_t v = t;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint16_t>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (fp_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

const std::map<std::uint32_t, std::vector<std::uint16_t>>& builtin_moduli() {
  // Irreducibility is re-verified at construction time.
  static const std::map<std::uint32_t, std::vector<std::uint16_t>> table = {
      {4, {1, 1, 1}},     // x^2 + x + 1 over F_2
      {8, {1, 1, 0, 1}},  // x^3 + x + 1 over F_2
      {9, {1, 0, 1}},     // x^2 + 1 over F_3
  };
  return table;
}

}  // namespace

Fq::Fq(std::uint32_t p, std::uint32_t kappa, std::vector<std::uint16_t> modulus)
    : p_(p), kappa_(kappa), modulus_(std::move(modulus)) {
  if (!is_prime_u32(p_)) throw std::invalid_argument("Fq: p = " + std::to_string(p_) + " is not prime");
  if (kappa_ < 1) throw std::invalid_argument("Fq: kappa must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    q *= p_;
    if (q > (1u << 16)) throw std::invalid_argument("Fq: q exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);
  if (kappa_ == 1) {
    if (!modulus_.empty()) throw std::invalid_argument("Fq: modulus given for a prime field");
    return;
  }
  if (modulus_.size() != kappa_ + 1) throw std::invalid_argument("Fq: modulus degree must equal kappa");
  for (auto c : modulus_) {
    if (c >= p_) throw std::invalid_argument("Fq: modulus coefficient out of range");
  }
  if (modulus_.back() != 1) throw std::invalid_argument("Fq: modulus must be monic");
  if (!fp_is_irreducible(modulus_, p_)) throw std::invalid_argument("Fq: modulus is reducible");
}

Fq Fq::from_order(std::uint32_t q) {
  std::uint32_t p = 0, kappa = 0;
  if (!factor_prime_power(q, p, kappa)) {
    throw std::invalid_argument("Fq: q = " + std::to_string(q) + " is not a prime power");
  }
  if (kappa == 1) return Fq(p, 1);
  auto it = builtin_moduli().find(q);
  if (it == builtin_moduli().end()) {
    throw std::invalid_argument("Fq: no built-in modulus for q = " + std::to_string(q) +
                                "; supply one explicitly");
  }
  return Fq(p, kappa, it->second);
}

FqElem Fq::zero() const { return FqElem{std::vector<std::uint16_t>(kappa_, 0)}; }

FqElem Fq::one() const {
  FqElem e = zero();
  e.c[0] = 1;
  return e;
}

bool Fq::is_zero(const FqElem& a) const {
  for (auto c : a.c) {
    if (c != 0) return false;
  }
  return true;
}

bool Fq::is_one(const FqElem& a) const { return index(a) == 1; }

FqElem Fq::from_index(std::uint32_t idx) const {
  FqElem e = zero();
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    e.c[i] = static_cast<std::uint16_t>(idx % p_);
    idx /= p_;
  }
  return e;
}

std::uint32_t Fq::index(const FqElem& a) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = kappa_; i-- > 0;) idx = idx * p_ + a.c[i];
  return idx;
}

FqElem Fq::add(const FqElem& a, const FqElem& b) const {
  FqElem r = zero();
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    r.c[i] = static_cast<std::uint16_t>((a.c[i] + b.c[i]) % p_);
  }
  return r;
}

FqElem Fq::sub(const FqElem& a, const FqElem& b) const {
  FqElem r = zero();
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    r.c[i] = static_cast<std::uint16_t>((a.c[i] + p_ - b.c[i]) % p_);
  }
  return r;
}

FqElem Fq::neg(const FqElem& a) const { return sub(zero(), a); }

FqElem Fq::mul(const FqElem& a, const FqElem& b) const {
  if (kappa_ == 1) {
    FqElem r = zero();
    r.c[0] = static_cast<std::uint16_t>(static_cast<std::uint64_t>(a.c[0]) * b.c[0] % p_);
    return r;
  }
  std::vector<std::uint16_t> prod(2 * kappa_ - 1, 0);
  for (std::uint32_t i = 0; i < kappa_; ++i) {
    if (a.c[i] == 0) continue;
    for (std::uint32_t j = 0; j < kappa_; ++j) {
      prod[i + j] = static_cast<std::uint16_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % p_);
    }
  }
  prod = fp_mod(std::move(prod), modulus_, p_);
  prod.resize(kappa_, 0);
  return FqElem{std::move(prod)};
}

FqElem Fq::inv(const FqElem& a) const {
  if (is_zero(a)) throw std::invalid_argument("Fq: inverse of zero");
  // a^(q-2); q <= 2^16 keeps this at a handful of multiplications.
  std::uint32_t e = q_ - 2;
  FqElem result = one();
  FqElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

}  // namespace ffzeta
