#ifndef EULERIAN_EGF_HPP
#define EULERIAN_EGF_HPP

#include "poly.hpp"

namespace eulerian {

/// Truncated series in x whose coefficients are exact rational polynomials
/// in t: sum_{m<=M} c_m(t) x^m, stored as ordinary (not factorial-scaled)
/// coefficients c_0..c_M.
class PolySeries {
 public:
  explicit PolySeries(int order);
  static PolySeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatPoly& coeff(int m) const;
  RatPoly& coeff(int m);

  PolySeries& operator+=(const PolySeries& b);
  PolySeries& operator-=(const PolySeries& b);
  friend PolySeries operator+(PolySeries a, const PolySeries& b) { return a += b; }
  friend PolySeries operator-(PolySeries a, const PolySeries& b) { return a -= b; }
  friend bool operator==(const PolySeries& a, const PolySeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Every coefficient multiplied by the polynomial c.
  PolySeries scaled(const RatPoly& c) const;
  /// Multiplication by x: coefficients shift up one order, the top drops.
  PolySeries shifted_up() const;

 private:
  std::vector<RatPoly> coeffs_;
};

/// Cauchy product truncated at the common order. Orders must match.
PolySeries series_mul(const PolySeries& a, const PolySeries& b);

/// exp of a series with zero constant coefficient, via (exp a)' = a' exp a.
PolySeries series_exp(const PolySeries& a);

/// Solves f * den = num order by order. Each step divides exactly by the
/// polynomial den_0 (which need not be a scalar); a nonzero remainder means
/// the quotient does not have polynomial coefficients and raises
/// std::domain_error.
PolySeries series_div_exact(const PolySeries& num, const PolySeries& den);

/// (1-t) exp(x(1-t)) / (1 - t exp(2x(1-t))), truncated at the given order.
/// Contract: m! times coefficient m is the type B Eulerian polynomial B_m.
PolySeries egf_eulerian_b(int order);

/// ((1-t) exp(x(1-t)) - xt(1-t) exp(2x(1-t))) / (1 - t exp(2x(1-t))).
/// Contract: m! times coefficient m is D_m, with D_0 = D_1 = 1.
PolySeries egf_eulerian_d(int order);

/// Expands B_n(t) / (1-t)^(n+1) as a power series in t through degree K and
/// compares coefficient k with (2k+1)^n, exactly.
bool worpitzky_check_b(int n, int k_max);

}  // namespace eulerian

#endif
