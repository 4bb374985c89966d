#ifndef FFZETA_FQ_HPP
#define FFZETA_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ffzeta {

// Element of F_q, q = p^kappa, as the vector of its kappa residues mod p
// (coefficients of the representative polynomial, constant term first).
struct FqElem {
  std::vector<std::uint16_t> c;
  bool operator==(const FqElem&) const = default;
};

// The field F_q itself. For kappa > 1 the field is F_p[x]/(modulus) with a
// monic irreducible modulus of degree kappa, either user-supplied or taken
// from the built-in table (q in {4, 8, 9}). Immutable after construction.
class Fq {
 public:
  // modulus: constant-first coefficients, length kappa+1, monic; must be
  // empty when kappa == 1. Throws std::invalid_argument on bad data
  // (p not prime, q > 2^16, modulus not monic/irreducible).
  Fq(std::uint32_t p, std::uint32_t kappa, std::vector<std::uint16_t> modulus = {});

  // Builds F_q from its order; non-prime q needs a built-in modulus.
  static Fq from_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t kappa() const { return kappa_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint16_t>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  bool is_zero(const FqElem& a) const;
  bool is_one(const FqElem& a) const;

  // Bijection with [0, q): index = sum c_i p^i. Element order everywhere in
  // this library is index order.
  FqElem from_index(std::uint32_t idx) const;
  std::uint32_t index(const FqElem& a) const;

  FqElem add(const FqElem& a, const FqElem& b) const;
  FqElem sub(const FqElem& a, const FqElem& b) const;
  FqElem neg(const FqElem& a) const;
  FqElem mul(const FqElem& a, const FqElem& b) const;
  FqElem inv(const FqElem& a) const;  // a != 0

  bool operator==(const Fq& other) const {
    return p_ == other.p_ && kappa_ == other.kappa_ && modulus_ == other.modulus_;
  }

 private:
  std::uint32_t p_;
  std::uint32_t kappa_;
  std::uint32_t q_;
  std::vector<std::uint16_t> modulus_;  // empty for prime fields
};

}  // namespace ffzeta

#endif
