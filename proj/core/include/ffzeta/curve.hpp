#ifndef FFZETA_CURVE_HPP
#define FFZETA_CURVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffzeta/numbers.hpp"

namespace ffzeta {

// A function field K/F_q given by numerator-polynomial data: q, the genus,
// and the integer coefficients a_0..a_{2g} of P_K(u).
struct CurveSpec {
  std::uint32_t q = 2;
  std::uint32_t genus = 0;
  std::vector<BigInt> weil = {1};
  std::string id = "custom";

  // F_q(X) itself: genus 0, P = 1.
  static CurveSpec rational(std::uint32_t q);
  // q = 2, P = 1 + 2u^2 (point count 3, trace 0), h = 3.
  static CurveSpec e2_supersingular();

  std::string label() const;
};

struct WeilReport {
  bool valid = true;
  std::vector<std::string> violations;
};

// Necessary conditions for genuine curve data: a_0 = 1, degree exactly 2g,
// functional-equation symmetry a_{2g-i} = q^{g-i} a_i, h = P(1) >= 1, and
// nonnegative derived N_n and a_d up to `depth`. Violations are listed, not
// thrown.
WeilReport validate_weil(const CurveSpec& c, std::uint32_t depth = 50);

// Throws CurveDataError when validate_weil fails.
void require_valid_curve(const CurveSpec& c, std::uint32_t depth = 50);

BigInt class_number(const CurveSpec& c);  // P_K(1)

// s_1..s_n, s_n = sum of n-th powers of the inverse roots of P_K, by
// Newton's identities on the coefficients.
std::vector<BigInt> power_sums(const CurveSpec& c, std::uint32_t n_max);

// N_1..N_n with N_n = q^n + 1 - s_n.
std::vector<BigInt> point_counts(const CurveSpec& c, std::uint32_t n_max);

// a_1..a_d, a_d = (1/d) sum_{e|d} mu(e) N_{d/e}; throws CurveDataError on a
// negative or non-integral value.
std::vector<BigInt> place_counts(const CurveSpec& c, std::uint32_t d_max);

// The set S as a nonempty list of place degrees.
struct SSpec {
  std::vector<std::uint32_t> degrees;

  std::string label() const;  // "deg1+1" style, comma-free for CSV
};

// Checks that S never requests more places of some degree than the curve
// has; throws std::invalid_argument with a "no available place of degree d"
// message otherwise.
void validate_sspec(const CurveSpec& c, const SSpec& s);

}  // namespace ffzeta

#endif
