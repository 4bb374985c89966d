#ifndef FFZETA_DIVISOR_HPP
#define FFZETA_DIVISOR_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffzeta/budget.hpp"
#include "ffzeta/curve.hpp"
#include "ffzeta/numbers.hpp"

namespace ffzeta {

// One of the a_{S,d} interchangeable places of a given degree. Ideal-level
// counting only sees degrees, so this is all the structure a place needs.
struct AbstractPlace {
  std::uint32_t degree;
  std::uint32_t index;

  auto operator<=>(const AbstractPlace&) const = default;
};

// Census of the places outside S, by degree, up to d_max.
class PlaceTable {
 public:
  // counts[d-1] = number of places of degree d.
  explicit PlaceTable(std::vector<std::int64_t> counts);

  // place_counts of the curve minus the places S consumes.
  static PlaceTable from_curve(const CurveSpec& c, const SSpec& s, std::uint32_t d_max);

  std::uint32_t d_max() const { return static_cast<std::uint32_t>(counts_.size()); }
  std::int64_t count(std::uint32_t degree) const;

  // All places of degree <= cap, sorted by (degree, index).
  std::vector<AbstractPlace> places_up_to(std::uint32_t cap) const;

 private:
  std::vector<std::int64_t> counts_;
};

// Effective divisor of Div_S: sparse, sorted, strictly positive entries.
struct Divisor {
  std::vector<std::pair<AbstractPlace, std::int32_t>> entries;

  static Divisor zero() { return {}; }
  // Sorts and validates (positive coefficients, distinct places).
  static Divisor make(std::vector<std::pair<AbstractPlace, std::int32_t>> entries);

  std::int64_t degree() const;
  std::int32_t coeff(const AbstractPlace& p) const;  // 0 when absent

  bool operator==(const Divisor&) const = default;
};

// 1 for the zero divisor, (-1)^t for a squarefree divisor with t support
// places, 0 otherwise.
int mobius(const Divisor& d);

// Every effective divisor of degree <= n, each exactly once, ordered by
// total degree and then lexicographically on the (degree, index,
// coefficient) entry lists. Throws when the table is shallower than n.
std::vector<Divisor> enumerate_effective(const PlaceTable& t, std::int64_t n, Budget& budget);
std::vector<Divisor> enumerate_effective(const PlaceTable& t, std::int64_t n);

// False iff some place has min coefficient >= w across the tuple.
bool is_w_coprime(const std::vector<Divisor>& tuple, std::uint32_t w);

// Exact count of w-coprime m-tuples of effective divisors of degree <= n.
BigInt brute_Q(const PlaceTable& t, std::int64_t n, std::uint32_t m, std::uint32_t w,
               Budget& budget);
BigInt brute_Q(const PlaceTable& t, std::int64_t n, std::uint32_t m, std::uint32_t w);

// Checks sum_{0 <= D' <= d} mu_S(D') == delta(d) by enumerating the
// sub-divisor lattice.
bool mobius_inversion_check(const Divisor& d);

// A finite set with property assignments: item_masks[i] bit j set means
// item i satisfies property j, and property j is tied to places[j].
struct IEInstance {
  std::vector<AbstractPlace> places;       // pairwise distinct, <= 12
  std::vector<std::uint32_t> item_masks;
};

// Direct count of items avoiding every property versus the signed sum
// sum_{I} mu_S(D_I) A(I) over property subsets.
bool inclusion_exclusion_check(const IEInstance& instance);

}  // namespace ffzeta

#endif
