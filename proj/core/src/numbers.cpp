#include "ffzeta/numbers.hpp"

#include <stdexcept>

namespace ffzeta {

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp > 0) b *= b;
  }
  return result;
}

Rational rpow(const Rational& base, std::int64_t exp) {
  if (exp >= 0) {
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<std::uint64_t>(exp);
    while (e > 0) {
      if (e & 1) result *= b;
      e >>= 1;
      if (e > 0) b *= b;
    }
    return result;
  }
  if (base == 0) throw std::invalid_argument("rpow: 0 to a negative power");
  return 1 / rpow(base, -exp);
}

BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_string(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

int moebius_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius_int: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& kappa) {
  if (q < 2) return false;
  std::uint32_t base = 2;
  while (q % base != 0) {
    ++base;
    if (static_cast<std::uint64_t>(base) * base > q) {
      base = q;  // q itself is prime
      break;
    }
  }
  std::uint32_t k = 0;
  std::uint32_t rest = q;
  while (rest % base == 0) {
    rest /= base;
    ++k;
  }
  if (rest != 1) return false;
  p = base;
  kappa = k;
  return true;
}

}  // namespace ffzeta
