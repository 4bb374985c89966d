#ifndef FFZETA_NUMBERS_HPP
#define FFZETA_NUMBERS_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffzeta {

using BigInt = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, std::uint64_t exp);

// base^exp for any integer exp; base must be nonzero when exp < 0.
Rational rpow(const Rational& base, std::int64_t exp);

BigInt numerator(const Rational& r);
BigInt denominator(const Rational& r);

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& r);

Rational abs(const Rational& r);

// Moebius function on positive integers (squarefree sign, 0 otherwise).
int moebius_int(std::uint64_t n);

bool is_prime_u32(std::uint32_t n);

// Writes q = p^kappa with p prime; returns false if q is not a prime power.
bool factor_prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& kappa);

}  // namespace ffzeta

#endif
