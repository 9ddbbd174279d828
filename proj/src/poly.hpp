#ifndef EULERIAN_POLY_HPP
#define EULERIAN_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace eulerian {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. coeff(i) holds the coefficient of t^i. Canonical form:
/// the zero polynomial stores nothing; otherwise the top coefficient is
/// nonzero. degree() returns kDegreeOfZero (-1, standing in for minus
/// infinity) on the zero polynomial.
class IntPoly {
 public:
  static constexpr int kDegreeOfZero = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Int c);
  /// c * t^k
  static IntPoly monomial(Int c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// Coefficient of t^i; zero beyond the degree.
  Int coeff(int i) const;
  const Int& leading() const;

  Int eval(const Int& x) const;
  Int sum_of_coeffs() const { return eval(1); }

  IntPoly& operator+=(const IntPoly& g);
  IntPoly& operator-=(const IntPoly& g);
  IntPoly& operator*=(const IntPoly& g);
  IntPoly& operator*=(const Int& c);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
  friend IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
  friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator*(IntPoly f, const Int& c) { return f *= c; }
  friend IntPoly operator*(const Int& c, IntPoly f) { return f *= c; }
  friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.coeffs_ == g.coeffs_; }
  friend bool operator!=(const IntPoly& f, const IntPoly& g) { return !(f == g); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// (t - 1)^k expanded: coefficient of t^i is binomial(k,i) * (-1)^(k-i).
IntPoly linear_pow(int k);

/// t^n * f(1/t): coefficient of t^(n-i) equals coefficient of t^i in f.
/// Requires n >= deg f; applying it twice with the same n is the identity.
IntPoly reverse(const IntPoly& f, int n);

IntPoly derivative(const IntPoly& f);

/// True iff reverse(f, n) == f. Requires n >= deg f; the zero polynomial
/// is palindromic for every n.
bool is_palindromic(const IntPoly& f, int n);

/// Binomial coefficient, zero when k < 0 or k > n.
Int binomial(unsigned long n, long k);
Int factorial(unsigned long n);
/// Exact integer power with the 0^0 = 1 convention; base may be negative.
Int int_pow(const Int& base, unsigned long e);

/// Dense univariate polynomial with exact rational coefficients, same
/// canonical-form conventions as IntPoly. mpq_class keeps every stored
/// value reduced with positive denominator.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(Rat c);
  static RatPoly from(const IntPoly& f);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  const Rat& leading() const;

  /// Exact Horner evaluation.
  Rat eval(const Rat& x) const;

  /// Scaled so the leading coefficient is 1; the zero polynomial stays zero.
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& g);
  RatPoly& operator-=(const RatPoly& g);
  RatPoly& operator*=(const RatPoly& g);
  RatPoly& operator*=(const Rat& c);
  RatPoly operator-() const;

  friend RatPoly operator+(RatPoly f, const RatPoly& g) { return f += g; }
  friend RatPoly operator-(RatPoly f, const RatPoly& g) { return f -= g; }
  friend RatPoly operator*(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator*(RatPoly f, const Rat& c) { return f *= c; }
  friend RatPoly operator*(const Rat& c, RatPoly f) { return f *= c; }
  friend bool operator==(const RatPoly& f, const RatPoly& g) { return f.coeffs_ == g.coeffs_; }
  friend bool operator!=(const RatPoly& f, const RatPoly& g) { return !(f == g); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Euclidean division: f = q*g + r with deg r < deg g. Requires g nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g);

RatPoly derivative(const RatPoly& f);

/// Monic greatest common divisor via the Euclidean remainder sequence.
/// gcd(f, 0) is the monic scaling of f; both inputs zero is an error.
RatPoly gcd_monic(const RatPoly& f, const RatPoly& g);

/// Multiplies by the least common denominator; same roots as the input.
IntPoly clear_denominators(const RatPoly& f);

}  // namespace eulerian

#endif
