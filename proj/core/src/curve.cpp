#include "ffzeta/curve.hpp"

#include <map>
#include <stdexcept>

#include "ffzeta/errors.hpp"

namespace ffzeta {

CurveSpec CurveSpec::rational(std::uint32_t q) { return CurveSpec{q, 0, {1}, "rational"}; }

CurveSpec CurveSpec::e2_supersingular() { return CurveSpec{2, 1, {1, 0, 2}, "e2-supersingular"}; }

std::string CurveSpec::label() const { return id + "-q" + std::to_string(q); }

WeilReport validate_weil(const CurveSpec& c, std::uint32_t depth) {
  WeilReport report;
  auto flag = [&report](const std::string& msg) {
    report.valid = false;
    report.violations.push_back(msg);
  };

  std::uint32_t p = 0, kappa = 0;
  if (!factor_prime_power(c.q, p, kappa) || c.q > (1u << 16)) {
    flag("q must be a prime power <= 2^16");
    return report;
  }
  if (c.weil.empty() || c.weil.front() != 1) flag("a_0 must equal 1");
  if (c.weil.size() != 2 * static_cast<std::size_t>(c.genus) + 1) {
    flag("coefficient list must have length 2*genus + 1");
    return report;
  }
  if (c.genus > 0 && c.weil.back() == 0) flag("degree must be exactly 2*genus");

  const std::size_t two_g = 2 * static_cast<std::size_t>(c.genus);
  for (std::size_t i = 0; i <= c.genus; ++i) {
    if (c.weil[two_g - i] != ipow(c.q, c.genus - i) * c.weil[i]) {
      flag("functional-equation symmetry a_{2g-i} = q^{g-i} a_i fails at i = " + std::to_string(i));
    }
  }

  BigInt h = 0;
  for (const auto& a : c.weil) h += a;
  if (h < 1) flag("class number P(1) must be >= 1");

  const auto counts = point_counts(c, depth);
  for (std::uint32_t n = 1; n <= depth; ++n) {
    if (counts[n - 1] < 0) {
      flag("derived N_" + std::to_string(n) + " is negative");
      return report;
    }
  }
  try {
    place_counts(c, depth);
  } catch (const CurveDataError& e) {
    flag(e.what());
  }
  return report;
}

void require_valid_curve(const CurveSpec& c, std::uint32_t depth) {
  const WeilReport report = validate_weil(c, depth);
  if (!report.valid) {
    std::string msg = "invalid curve data (" + c.label() + ")";
    for (const auto& v : report.violations) msg += ": " + v;
    throw CurveDataError(msg);
  }
}

BigInt class_number(const CurveSpec& c) {
  BigInt h = 0;
  for (const auto& a : c.weil) h += a;
  return h;
}

std::vector<BigInt> power_sums(const CurveSpec& c, std::uint32_t n_max) {
  const std::size_t m = 2 * static_cast<std::size_t>(c.genus);
  // e_i = (-1)^i a_i, the elementary symmetric functions of the inverse roots.
  std::vector<BigInt> e(m + 1, 0);
  for (std::size_t i = 0; i <= m && i < c.weil.size(); ++i) {
    e[i] = (i % 2 == 0) ? c.weil[i] : -c.weil[i];
  }
  std::vector<BigInt> s(n_max + 1, 0);
  for (std::uint32_t k = 1; k <= n_max; ++k) {
    BigInt acc = 0;
    const std::size_t upper = std::min<std::size_t>(k - 1, m);
    for (std::size_t i = 1; i <= upper; ++i) {
      const BigInt term = e[i] * s[k - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (k <= m) {
      const BigInt term = BigInt(k) * e[k];
      acc += (k % 2 == 1) ? term : -term;
    }
    s[k] = acc;
  }
  return std::vector<BigInt>(s.begin() + 1, s.end());
}

std::vector<BigInt> point_counts(const CurveSpec& c, std::uint32_t n_max) {
  const auto s = power_sums(c, n_max);
  std::vector<BigInt> counts;
  counts.reserve(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    counts.push_back(ipow(c.q, n) + 1 - s[n - 1]);
  }
  return counts;
}

std::vector<BigInt> place_counts(const CurveSpec& c, std::uint32_t d_max) {
  const auto counts = point_counts(c, d_max);
  std::vector<BigInt> a;
  a.reserve(d_max);
  for (std::uint32_t d = 1; d <= d_max; ++d) {
    BigInt acc = 0;
    for (std::uint32_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      acc += BigInt(moebius_int(e)) * counts[d / e - 1];
    }
    if (acc % d != 0) {
      throw CurveDataError("place count a_" + std::to_string(d) + " is not integral");
    }
    acc /= d;
    if (acc < 0) {
      throw CurveDataError("place count a_" + std::to_string(d) + " is negative");
    }
    a.push_back(acc);
  }
  return a;
}

std::string SSpec::label() const {
  std::string out = "deg";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    out += (i == 0 ? "" : "+") + std::to_string(degrees[i]);
  }
  return out;
}

void validate_sspec(const CurveSpec& c, const SSpec& s) {
  if (s.degrees.empty()) throw std::invalid_argument("S must be nonempty");
  std::map<std::uint32_t, std::uint32_t> wanted;
  std::uint32_t d_max = 0;
  for (auto d : s.degrees) {
    if (d < 1) throw std::invalid_argument("S degrees must be >= 1");
    ++wanted[d];
    d_max = std::max(d_max, d);
  }
  const auto a = place_counts(c, d_max);
  for (const auto& [d, count] : wanted) {
    if (BigInt(count) > a[d - 1]) {
      throw std::invalid_argument("no available place of degree " + std::to_string(d) +
                                  " (requested " + std::to_string(count) + ", curve has " +
                                  a[d - 1].str() + ")");
    }
  }
}

}  // namespace ffzeta
