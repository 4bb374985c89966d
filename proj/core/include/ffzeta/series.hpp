#ifndef FFZETA_SERIES_HPP
#define FFZETA_SERIES_HPP

#include <cstdint>
#include <vector>

#include "ffzeta/curve.hpp"
#include "ffzeta/numbers.hpp"

namespace ffzeta {

// Integer power series truncated at order T. Reads beyond T throw
// std::out_of_range rather than returning silent zeros.
class TruncatedIntSeries {
 public:
  explicit TruncatedIntSeries(std::vector<BigInt> coeffs);

  std::uint32_t truncation() const { return static_cast<std::uint32_t>(coeffs_.size()) - 1; }
  const BigInt& at(std::uint32_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

 private:
  std::vector<BigInt> coeffs_;
};

// max(50, 2n + 2g); every series a computation needs fits under this.
std::uint32_t default_truncation(std::int64_t requested_n, std::uint32_t genus);

// Coefficients b_k of Z_K(z) = P_K(z) / ((1-z)(1-qz)).
TruncatedIntSeries zeta_series_K(const CurveSpec& c, std::uint32_t T);

// Coefficients b_{S,k} of Z_S(z) = Z_K(z) * prod_j (1 - z^{d_j}).
TruncatedIntSeries zeta_series_S(const CurveSpec& c, const SSpec& s, std::uint32_t T);

// Coefficients of 1/Z_S(z); integer because b_{S,0} = 1.
TruncatedIntSeries mobius_coeffs(const CurveSpec& c, const SSpec& s, std::uint32_t T);

// Prefix sum b_{S,0} + ... + b_{S,n} of a Z_S series; 0 for n < 0.
BigInt j_prefix(const TruncatedIntSeries& zs, std::int64_t n);

// Number of integral ideals of degree <= n; 0 for n < 0 by convention.
BigInt j_S(const CurveSpec& c, const SSpec& s, std::int64_t n);

// Exact Z_S(q^{-t}) for integer t >= 2; always > 1.
Rational zeta_S_value(const CurveSpec& c, const SSpec& s, std::int64_t t);

// P_K evaluated at a rational point.
Rational weil_eval(const CurveSpec& c, const Rational& z);

// G_S(z) = prod_j (1 - z^{d_j}).
Rational s_factor_eval(const SSpec& s, const Rational& z);

// The unique c with j_S(n) - c q^n bounded, by exact residue extraction at
// z = 1/q:  c = q^2 P_K(1/q) G_S(1/q) / (q-1)^2.
Rational leading_constant(const CurveSpec& c, const SSpec& s);

// Alternative normalization h_K G_S(1/q) q^{1-g} / (q-1)^2 seen in
// closed-form derivations; equals leading_constant()/q whenever the
// functional equation holds (q^g P_K(1/q) = P_K(1)). Reported alongside for
// cross-checking.
Rational leading_constant_alt(const CurveSpec& c, const SSpec& s);

}  // namespace ffzeta

#endif
