#ifndef FFZETA_POLY_HPP
#define FFZETA_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffzeta/budget.hpp"
#include "ffzeta/fq.hpp"

namespace ffzeta {

// Polynomial over F_q, constant term first, no trailing zeros. The zero
// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<FqElem> coeffs, const Fq& f);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  const FqElem& lead() const;  // nonzero polynomial only

  bool operator==(const Poly&) const = default;

 private:
  std::vector<FqElem> coeffs_;
};

Poly poly_zero();
Poly poly_one(const Fq& f);
// X^k
Poly poly_x(const Fq& f, std::uint32_t k = 1);
// Coefficients given as element indices, constant term first.
Poly poly_from_indices(const Fq& f, const std::vector<std::uint32_t>& idx);
std::vector<std::uint32_t> poly_indices(const Fq& f, const Poly& a);
// Renders like "X^2+X+1"; extension-field coefficients print as element
// indices, e.g. "2*X".
std::string poly_to_string(const Fq& f, const Poly& a);

Poly poly_add(const Fq& f, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& f, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& f, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& f, const FqElem& s, const Poly& a);
Poly poly_pow(const Fq& f, const Poly& a, std::uint32_t e);

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Fq& f, const Poly& a, const Poly& b);
bool poly_divides(const Fq& f, const Poly& d, const Poly& a);

Poly make_monic(const Fq& f, const Poly& a);  // a != 0

// Monic gcd; rejects gcd(0, 0).
Poly poly_gcd(const Fq& f, const Poly& a, const Poly& b);

// Total order: degree first, then the coefficient vector (constant term
// first) compared by element index. Zero sorts before everything.
int poly_cmp(const Fq& f, const Poly& a, const Poly& b);

bool is_irreducible(const Fq& f, const Poly& a);

// All monic irreducible polynomials of degree d, sorted by poly_cmp (i.e.
// lexicographically on the coefficient vector). The q^d sieve is charged to
// the budget.
std::vector<Poly> irreducibles_of_degree(const Fq& f, std::uint32_t d, Budget& budget);
std::vector<Poly> irreducibles_of_degree(const Fq& f, std::uint32_t d);

// Monic irreducible factors with multiplicities, sorted by poly_cmp; the
// product times lead(a) reconstructs a. Rejects the zero polynomial; a unit
// gives an empty list.
std::vector<std::pair<Poly, int>> factor(const Fq& f, const Poly& a);

// Multiplicity of (irreducible, monic) d in a; a != 0.
int valuation(const Fq& f, const Poly& d, const Poly& a);

}  // namespace ffzeta

#endif
