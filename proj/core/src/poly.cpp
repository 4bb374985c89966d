#include "ffzeta/poly.hpp"

#include <stdexcept>

#include "ffzeta/numbers.hpp"

namespace ffzeta {

Poly::Poly(std::vector<FqElem> coeffs, const Fq& f) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && f.is_zero(coeffs_.back())) coeffs_.pop_back();
}

const FqElem& Poly::lead() const {
  if (coeffs_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Poly poly_zero() { return Poly(); }

Poly poly_one(const Fq& f) { return Poly({f.one()}, f); }

Poly poly_x(const Fq& f, std::uint32_t k) {
  std::vector<FqElem> c(k + 1, f.zero());
  c[k] = f.one();
  return Poly(std::move(c), f);
}

Poly poly_from_indices(const Fq& f, const std::vector<std::uint32_t>& idx) {
  std::vector<FqElem> c;
  c.reserve(idx.size());
  for (auto i : idx) {
    if (i >= f.q()) throw std::invalid_argument("poly_from_indices: coefficient index out of range");
    c.push_back(f.from_index(i));
  }
  return Poly(std::move(c), f);
}

std::vector<std::uint32_t> poly_indices(const Fq& f, const Poly& a) {
  std::vector<std::uint32_t> idx;
  idx.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) idx.push_back(f.index(c));
  return idx;
}

std::string poly_to_string(const Fq& f, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint32_t v = f.index(a.coeffs()[static_cast<std::size_t>(i)]);
    if (v == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
    } else {
      if (v != 1) out += std::to_string(v) + "*";
      out += (i == 1) ? "X" : "X^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_add(const Fq& f, const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FqElem> c(std::max(ca.size(), cb.size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const FqElem& x = i < ca.size() ? ca[i] : f.zero();
    const FqElem& y = i < cb.size() ? cb[i] : f.zero();
    c[i] = f.add(x, y);
  }
  return Poly(std::move(c), f);
}

Poly poly_sub(const Fq& f, const Poly& a, const Poly& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FqElem> c(std::max(ca.size(), cb.size()), f.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const FqElem& x = i < ca.size() ? ca[i] : f.zero();
    const FqElem& y = i < cb.size() ? cb[i] : f.zero();
    c[i] = f.sub(x, y);
  }
  return Poly(std::move(c), f);
}

Poly poly_mul(const Fq& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FqElem> c(ca.size() + cb.size() - 1, f.zero());
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (f.is_zero(ca[i])) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(ca[i], cb[j]));
    }
  }
  return Poly(std::move(c), f);
}

Poly poly_scale(const Fq& f, const FqElem& s, const Poly& a) {
  std::vector<FqElem> c = a.coeffs();
  for (auto& x : c) x = f.mul(s, x);
  return Poly(std::move(c), f);
}

Poly poly_pow(const Fq& f, const Poly& a, std::uint32_t e) {
  Poly result = poly_one(f);
  Poly base = a;
  while (e > 0) {
    if (e & 1) result = poly_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = poly_mul(f, base, base);
  }
  return result;
}

std::pair<Poly, Poly> poly_divmod(const Fq& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {poly_zero(), a};
  const FqElem lead_inv = f.inv(b.lead());
  std::vector<FqElem> rem = a.coeffs();
  std::vector<FqElem> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f.zero());
  const auto& cb = b.coeffs();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const FqElem c = f.mul(rem[k + cb.size() - 1], lead_inv);
    quot[k] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t i = 0; i < cb.size(); ++i) {
      rem[k + i] = f.sub(rem[k + i], f.mul(c, cb[i]));
    }
  }
  return {Poly(std::move(quot), f), Poly(std::move(rem), f)};
}

bool poly_divides(const Fq& f, const Poly& d, const Poly& a) {
  return poly_divmod(f, a, d).second.is_zero();
}

Poly make_monic(const Fq& f, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("make_monic: zero polynomial");
  if (f.is_one(a.lead())) return a;
  return poly_scale(f, f.inv(a.lead()), a);
}

Poly poly_gcd(const Fq& f, const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0, 0) undefined");
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(f, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(f, x);
}

int poly_cmp(const Fq& f, const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::uint32_t x = f.index(a.coeffs()[i]);
    const std::uint32_t y = f.index(b.coeffs()[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

bool is_irreducible(const Fq& f, const Poly& a) {
  const int deg = a.degree();
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    // Trial division by all monic polynomials of degree d.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<FqElem> c(static_cast<std::size_t>(d) + 1, f.zero());
      std::uint64_t v = t;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = f.from_index(static_cast<std::uint32_t>(v % f.q()));
        v /= f.q();
      }
      c[static_cast<std::size_t>(d)] = f.one();
      if (poly_divides(f, Poly(std::move(c), f), a)) return false;
    }
  }
  return true;
}

std::vector<Poly> irreducibles_of_degree(const Fq& f, std::uint32_t d, Budget& budget) {
  if (d < 1) throw std::invalid_argument("irreducibles_of_degree: d must be >= 1");
  BigInt total = ipow(f.q(), d);
  if (total > BigInt(budget.limit())) {
    throw BudgetExceeded("irreducibles_of_degree: q^d exceeds the enumeration budget");
  }
  const std::uint64_t n = total.convert_to<std::uint64_t>();
  budget.charge(n, "irreducibles_of_degree");
  std::vector<Poly> out;
  for (std::uint64_t t = 0; t < n; ++t) {
    std::vector<FqElem> c(d + 1, f.zero());
    std::uint64_t v = t;
    for (std::uint32_t i = 0; i < d; ++i) {
      c[i] = f.from_index(static_cast<std::uint32_t>(v % f.q()));
      v /= f.q();
    }
    c[d] = f.one();
    Poly cand(std::move(c), f);
    if (is_irreducible(f, cand)) out.push_back(std::move(cand));
  }
  // Enumeration by digit value with the constant term as the fastest digit
  // is already poly_cmp order.
  return out;
}

std::vector<Poly> irreducibles_of_degree(const Fq& f, std::uint32_t d) {
  Budget budget;
  return irreducibles_of_degree(f, d, budget);
}

std::vector<std::pair<Poly, int>> factor(const Fq& f, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  Poly rem = make_monic(f, a);
  Budget budget;
  for (std::uint32_t d = 1; 2 * static_cast<int>(d) <= rem.degree(); ++d) {
    for (const Poly& p : irreducibles_of_degree(f, d, budget)) {
      int mult = 0;
      while (true) {
        auto [quot, r] = poly_divmod(f, rem, p);
        if (!r.is_zero()) break;
        rem = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.emplace_back(p, mult);
      if (2 * static_cast<int>(d) > rem.degree()) break;
    }
  }
  if (rem.degree() >= 1) out.emplace_back(rem, 1);
  // Degrees ascend and each degree is sieved in order, so out is sorted,
  // except the final irreducible remainder which belongs after smaller
  // degrees anyway.
  return out;
}

int valuation(const Fq& f, const Poly& d, const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("valuation: zero polynomial");
  if (d.degree() < 1) throw std::invalid_argument("valuation: divisor must be nonconstant");
  int v = 0;
  Poly rem = a;
  while (true) {
    auto [quot, r] = poly_divmod(f, rem, d);
    if (!r.is_zero()) return v;
    rem = std::move(quot);
    ++v;
  }
}

}  // namespace ffzeta
