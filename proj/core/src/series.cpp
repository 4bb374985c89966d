#include "ffzeta/series.hpp"

#include <stdexcept>

#include "ffzeta/errors.hpp"

namespace ffzeta {

TruncatedIntSeries::TruncatedIntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedIntSeries: empty coefficient list");
}

const BigInt& TruncatedIntSeries::at(std::uint32_t k) const {
  if (k >= coeffs_.size()) {
    throw std::out_of_range("TruncatedIntSeries: read at order " + std::to_string(k) +
                            " beyond truncation " + std::to_string(coeffs_.size() - 1));
  }
  return coeffs_[k];
}

std::uint32_t default_truncation(std::int64_t requested_n, std::uint32_t genus) {
  const std::int64_t wanted = 2 * std::max<std::int64_t>(requested_n, 0) + 2 * genus;
  return static_cast<std::uint32_t>(std::max<std::int64_t>(50, wanted));
}

TruncatedIntSeries zeta_series_K(const CurveSpec& c, std::uint32_t T) {
  require_valid_curve(c, std::max(T, 50u));
  // [z^k] 1/((1-z)(1-qz)) = 1 + q + ... + q^k, then convolve with P_K.
  std::vector<BigInt> geo(T + 1);
  BigInt qpow = 1;
  BigInt acc = 0;
  for (std::uint32_t k = 0; k <= T; ++k) {
    acc += qpow;
    qpow *= c.q;
    geo[k] = acc;
  }
  std::vector<BigInt> b(T + 1, 0);
  for (std::size_t i = 0; i < c.weil.size() && i <= T; ++i) {
    if (c.weil[i] == 0) continue;
    for (std::uint32_t k = static_cast<std::uint32_t>(i); k <= T; ++k) {
      b[k] += c.weil[i] * geo[k - i];
    }
  }
  for (std::uint32_t k = 0; k <= T; ++k) {
    if (b[k] < 0) throw CurveDataError("b_" + std::to_string(k) + " is negative");
  }
  return TruncatedIntSeries(std::move(b));
}

TruncatedIntSeries zeta_series_S(const CurveSpec& c, const SSpec& s, std::uint32_t T) {
  validate_sspec(c, s);
  const TruncatedIntSeries zk = zeta_series_K(c, T);
  std::vector<BigInt> b = zk.coeffs();
  for (auto d : s.degrees) {
    // Multiply by (1 - z^d) in place, truncated at T.
    for (std::uint32_t k = T + 1; k-- > d;) b[k] -= b[k - d];
  }
  for (std::uint32_t k = 0; k <= T; ++k) {
    if (b[k] < 0 || b[k] > zk.at(k)) {
      throw std::invalid_argument("S incompatible with curve: coefficient b_{S," +
                                  std::to_string(k) + "} out of range");
    }
  }
  return TruncatedIntSeries(std::move(b));
}

TruncatedIntSeries mobius_coeffs(const CurveSpec& c, const SSpec& s, std::uint32_t T) {
  const TruncatedIntSeries zs = zeta_series_S(c, s, T);
  std::vector<BigInt> mu(T + 1, 0);
  mu[0] = 1;  // b_{S,0} = 1
  for (std::uint32_t k = 1; k <= T; ++k) {
    BigInt acc = 0;
    for (std::uint32_t j = 0; j < k; ++j) acc += mu[j] * zs.at(k - j);
    mu[k] = -acc;
  }
  return TruncatedIntSeries(std::move(mu));
}

BigInt j_prefix(const TruncatedIntSeries& zs, std::int64_t n) {
  if (n < 0) return 0;
  BigInt acc = 0;
  for (std::uint32_t k = 0; k <= static_cast<std::uint32_t>(n); ++k) acc += zs.at(k);
  return acc;
}

BigInt j_S(const CurveSpec& c, const SSpec& s, std::int64_t n) {
  if (n < 0) return 0;
  const std::uint32_t T = default_truncation(n, c.genus);
  return j_prefix(zeta_series_S(c, s, T), n);
}

Rational weil_eval(const CurveSpec& c, const Rational& z) {
  Rational acc = 0;
  for (std::size_t i = c.weil.size(); i-- > 0;) {
    acc = acc * z + Rational(c.weil[i]);
  }
  return acc;
}

Rational s_factor_eval(const SSpec& s, const Rational& z) {
  Rational acc = 1;
  for (auto d : s.degrees) acc *= 1 - rpow(z, static_cast<std::int64_t>(d));
  return acc;
}

Rational zeta_S_value(const CurveSpec& c, const SSpec& s, std::int64_t t) {
  if (t <= 1) {
    throw std::invalid_argument("zeta_S_value: t must be >= 2 (t = 1 hits the pole region)");
  }
  require_valid_curve(c);
  validate_sspec(c, s);
  const Rational z = Rational(1, ipow(c.q, static_cast<std::uint64_t>(t)));
  const Rational denom = (1 - z) * (1 - Rational(c.q) * z);
  return weil_eval(c, z) * s_factor_eval(s, z) / denom;
}

Rational leading_constant(const CurveSpec& c, const SSpec& s) {
  require_valid_curve(c);
  validate_sspec(c, s);
  const Rational z = Rational(1, c.q);
  const Rational q = Rational(c.q);
  return q * q * weil_eval(c, z) * s_factor_eval(s, z) / ((q - 1) * (q - 1));
}

Rational leading_constant_alt(const CurveSpec& c, const SSpec& s) {
  require_valid_curve(c);
  validate_sspec(c, s);
  const Rational z = Rational(1, c.q);
  const Rational q = Rational(c.q);
  const Rational h = Rational(class_number(c));
  return h * s_factor_eval(s, z) * rpow(q, 1 - static_cast<std::int64_t>(c.genus)) /
         ((q - 1) * (q - 1));
}

}  // namespace ffzeta
