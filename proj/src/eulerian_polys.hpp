#ifndef EULERIAN_EULERIAN_POLYS_HPP
#define EULERIAN_EULERIAN_POLYS_HPP

#include <map>
#include <utility>

#include "poly.hpp"
#include "signed_perm.hpp"

namespace eulerian {

enum class CoxeterType { A, B, D };

enum class Method { Enumeration, Recurrence, DerivativeRecurrence, DoubleSum };

GroupKind group_of(CoxeterType type);
Int coxeter_group_order(CoxeterType type, int n);

/// Descent statistic of a window under the family's convention.
int descent_count(CoxeterType type, std::span<const int> w);

/// Exact descent-statistic distribution over the group, by exhaustive
/// enumeration. With workers > 1 the group is split by first letter and the
/// partial distributions are added, so the result does not depend on the
/// worker count. This is the independent oracle for every recurrence below
/// and never memoizes.
IntPoly descent_polynomial(CoxeterType type, int n, int workers = 1);

/// Number of group elements visited by a full enumeration (the group order,
/// obtained by counting rather than by formula).
unsigned long long enumeration_count(CoxeterType type, int n, int workers = 1);

// Recurrences. Base cases A_0 = B_0 = D_0 = 1 and D_1 = 1 are shared by all
// of them.

/// A_n = sum_{k<n} A_k C(n,k) (t-1)^(n-k-1); n = 0 returns the base case.
IntPoly eulerian_recurrence_a(int n);
/// P_n = sum_{k<n} B_k C(n,k) (t-1)^(n-k-1), the descent polynomial of the
/// signed permutations with positive last letter. Degree n-1. Requires n >= 1.
IntPoly half_poly_b(int n);
/// B_n = P_n + t^n P_n(1/t); n = 0 returns the base case.
IntPoly eulerian_recurrence_b(int n);
/// Q_n = sum_{k<n} D_k C(n,k) (t-1)^(n-k-1). Degree n-1. Requires n >= 1.
IntPoly half_poly_d(int n);
/// D_n = Q_n + t^n Q_n(1/t). Requires n >= 2: the identity genuinely fails
/// at n = 1 (Q_1 + t Q_1(1/t) = 1 + t while D_1 = 1).
IntPoly eulerian_recurrence_d(int n);

/// A_n = (1 + (n-1)t) A_{n-1} + t(1-t) A'_{n-1}.
IntPoly eulerian_derivative_rec_a(int n);
/// B_n = ((2n-1)t + 1) B_{n-1} + 2t(1-t) B'_{n-1}.
IntPoly eulerian_derivative_rec_b(int n);

/// The closed double-sum recurrence for D_n obtained by expanding its
/// exponential generating function:
///   D_n = sum_{k<n} C(n,k) D_k sum_{j<=n-k} ((n-k)!/j!) t^(n-j-k) (1-t)^(j-1)
///         [ t (n-j-k+1)^j - (n-j-k-1)^j ].
/// At j = 0 the bracket equals (t-1), cancelling the (1-t)^(-1) factor, so
/// that summand is just -(n-k)! t^(n-k); the whole computation stays in
/// integer polynomials. Powers use exact integers with 0^0 = 1.
IntPoly eulerian_double_sum_d(int n);

/// Descent polynomial over signed permutations with max_displacement_b <= j,
/// by enumeration. Equals half_poly_b(n) at j = n-1 and the full B_n once
/// j >= n. n = 0 gives 1.
IntPoly bounded_displacement_poly(int n, int j);

/// Checks, with every side computed by enumeration, the displacement-bounded
/// recurrence
///   F(m+j+1, j) = sum_{k=1}^{j+1} C(j+1,k) F(m+j+1-k, j) (t-1)^(k-1)
/// where F = bounded_displacement_poly.
bool displacement_recurrence_holds(int m, int j);

/// The refined even-signed family, twice the descent polynomial over the
/// elements with prescribed last letter: last = n-k for 0 <= k <= n-1 and
/// last = n-1-k for n <= k <= 2n-1. Requires n >= 2.
IntPoly refined_descent_poly_d(int n, int k);
/// Signed analogue (no factor two), last letter n-k resp. n-1-k. n >= 1.
IntPoly refined_descent_poly_b(int n, int k);

/// For D: half of the low half-sum of the refined family equals
/// half_poly_d(n) and half of the high half-sum equals its degree-n reverse
/// (the halving must be exact; an odd coefficient fails the check). For B:
/// the same identities without the factor two.
bool half_sum_identity(CoxeterType type, int n);
/// Both half-sum identities.
bool half_sums_check(int n);

/// Descent polynomials over the positive-last and negative-last halves of
/// the group (B or D). The first equals half_poly_*, the second its
/// degree-n reverse. Requires n >= 1 for B, n >= 2 for D.
std::pair<IntPoly, IntPoly> positive_negative_split(CoxeterType type, int n, int workers = 1);

/// Cache of Eulerian polynomials for one family and method. Recurrence
/// methods memoize; enumeration recomputes every call so it stays usable as
/// an independent cross-check. Entries are validated on computation:
/// degree <= n, nonnegative coefficients, coefficient sum equal to the
/// group order.
class EulerianTable {
 public:
  EulerianTable(CoxeterType type, Method method, int workers = 1);

  CoxeterType type() const { return type_; }
  Method method() const { return method_; }

  IntPoly polynomial(int n);

 private:
  IntPoly compute(int n) const;

  CoxeterType type_;
  Method method_;
  int workers_;
  std::map<int, IntPoly> entries_;
};

}  // namespace eulerian

#endif
