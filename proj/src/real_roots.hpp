#ifndef EULERIAN_REAL_ROOTS_HPP
#define EULERIAN_REAL_ROOTS_HPP

#include <optional>
#include <vector>

#include "poly.hpp"

namespace eulerian {

/// Sturm chain: f, f', then negated Euclidean remainders until zero.
/// Root counts are exact; endpoints that happen to be roots need no special
/// treatment because sign variations are evaluated just to the right of the
/// endpoint (the sign of the first nonzero Taylor coefficient), which makes
/// every count a count over a half-open interval (lo, hi].
class SturmChain {
 public:
  explicit SturmChain(RatPoly f);

  const std::vector<RatPoly>& polys() const { return polys_; }

  /// Sign variations just right of x.
  int variations_right_of(const Rat& x) const;
  int variations_at(bool positive_infinity) const;

  /// Number of distinct real roots of f in (lo, hi], with nullopt meaning
  /// the corresponding infinity. Exact for squarefree f.
  int count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const;

 private:
  std::vector<RatPoly> polys_;
};

/// Sign of p(x) (exact) and of p just right of x.
int sign_at(const RatPoly& p, const Rat& x);
int sign_at_right(const RatPoly& p, const Rat& x);

/// Monic f / gcd(f, f'): the same distinct roots, all simple. Constants map
/// to 1. Requires f nonzero.
RatPoly squarefree_part(const IntPoly& f);
RatPoly squarefree_part(const RatPoly& f);

/// Distinct real roots of f in (lo, hi]; nullopt bounds are infinities.
/// Requires f nonzero and lo < hi where both are finite.
int count_real_roots(const IntPoly& f, const std::optional<Rat>& lo, const std::optional<Rat>& hi);
int count_distinct_roots(const RatPoly& f, const std::optional<Rat>& lo,
                         const std::optional<Rat>& hi);

/// True iff every root of f is real: the squarefree part has as many
/// distinct real roots as its degree. Nonzero constants are vacuously
/// real-rooted. Requires f nonzero.
bool is_real_rooted(const IntPoly& f);

/// One distinct root of the owning polynomial lies in (lo, hi], with the
/// stated multiplicity; lo == hi marks an exact rational root.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
  int multiplicity = 1;
  bool is_point() const { return lo == hi; }
};

/// Disjoint isolating intervals inside the Cauchy bound, one distinct root
/// each, sorted ascending. Multiplicities come from the repeated
/// gcd-with-derivative ladder. Requires f nonzero.
std::vector<IsolatingInterval> isolate_roots(const IntPoly& f);

/// Bisects the interval until hi - lo <= width (point intervals are already
/// exact). The interval must isolate a root of f.
void refine_to_width(const IntPoly& f, IsolatingInterval& interval, const Rat& width);

/// True iff both polynomials are real-rooted, deg f <= deg g <= 1 + deg f,
/// and the root sequences, taken with multiplicity in weakly decreasing
/// order, weakly alternate as ... <= alpha_2 <= beta_2 <= alpha_1 <= beta_1
/// (alpha for f, beta for g). Shared roots are detected exactly through the
/// gcd, so coincident positions pass the weak inequalities. Requires both
/// nonzero.
bool interlaces(const IntPoly& f, const IntPoly& g);

/// Certificate for polynomials with nonnegative coefficients: interlacing
/// is equivalent to "f,g compatible and tf,g compatible", so the return
/// value certifies both. A negative coefficient is an error.
bool compatible_pair_cert(const IntPoly& f, const IntPoly& g);

/// Randomized falsifier, not a proof: draws `trials` tuples of nonnegative
/// rational coefficients from a generator fully determined by the seed and
/// checks that every linear combination is real-rooted. A trial whose draws
/// are all zero uses coefficient one on the first polynomial instead.
bool compatible_sample_check(const std::vector<IntPoly>& polys, unsigned trials,
                             unsigned long long seed);

}  // namespace eulerian

#endif
