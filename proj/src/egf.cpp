#include "egf.hpp"

#include <stdexcept>

#include "eulerian_polys.hpp"

namespace eulerian {

PolySeries::PolySeries(int order) {
  if (order < 0) throw std::invalid_argument("PolySeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PolySeries PolySeries::one(int order) {
  PolySeries s(order);
  s.coeffs_[0] = RatPoly{1};
  return s;
}

const RatPoly& PolySeries::coeff(int m) const {
  if (m < 0 || m > order()) throw std::invalid_argument("PolySeries: order out of range");
  return coeffs_[static_cast<std::size_t>(m)];
}

RatPoly& PolySeries::coeff(int m) {
  if (m < 0 || m > order()) throw std::invalid_argument("PolySeries: order out of range");
  return coeffs_[static_cast<std::size_t>(m)];
}

PolySeries& PolySeries::operator+=(const PolySeries& b) {
  if (order() != b.order()) throw std::invalid_argument("PolySeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& b) {
  if (order() != b.order()) throw std::invalid_argument("PolySeries: order mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

PolySeries PolySeries::scaled(const RatPoly& c) const {
  PolySeries out(order());
  for (int m = 0; m <= order(); ++m) out.coeff(m) = coeff(m) * c;
  return out;
}

PolySeries PolySeries::shifted_up() const {
  PolySeries out(order());
  for (int m = 1; m <= order(); ++m) out.coeff(m) = coeff(m - 1);
  return out;
}

PolySeries series_mul(const PolySeries& a, const PolySeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
  PolySeries out(a.order());
  for (int m = 0; m <= a.order(); ++m)
    for (int k = 0; k <= m; ++k) out.coeff(m) += a.coeff(k) * b.coeff(m - k);
  return out;
}

PolySeries series_exp(const PolySeries& a) {
  if (!a.coeff(0).is_zero()) throw std::invalid_argument("series_exp: nonzero constant term");
  PolySeries e(a.order());
  e.coeff(0) = RatPoly{1};
  for (int m = 1; m <= a.order(); ++m) {
    RatPoly acc;
    for (int k = 1; k <= m; ++k) acc += a.coeff(k) * Rat(k) * e.coeff(m - k);
    e.coeff(m) = acc * Rat(1, static_cast<unsigned long>(m));
  }
  return e;
}

PolySeries series_div_exact(const PolySeries& num, const PolySeries& den) {
  if (num.order() != den.order()) throw std::invalid_argument("series_div_exact: order mismatch");
  if (den.coeff(0).is_zero())
    throw std::invalid_argument("series_div_exact: denominator has zero constant coefficient");
  PolySeries f(num.order());
  for (int m = 0; m <= num.order(); ++m) {
    RatPoly rhs = num.coeff(m);
    for (int k = 0; k < m; ++k) rhs -= f.coeff(k) * den.coeff(m - k);
    auto [q, r] = divmod(rhs, den.coeff(0));
    if (!r.is_zero())
      throw std::domain_error("series_div_exact: nonzero remainder at order " + std::to_string(m));
    f.coeff(m) = std::move(q);
  }
  return f;
}

namespace {

const RatPoly kOneMinusT{1, -1};
const RatPoly kT{0, 1};

PolySeries exp_linear(int order, const RatPoly& c) {
  PolySeries a(order);
  if (order >= 1) a.coeff(1) = c;
  return series_exp(a);
}

PolySeries egf_denominator(int order) {
  return PolySeries::one(order) - exp_linear(order, kOneMinusT * Rat(2)).scaled(kT);
}

}  // namespace

PolySeries egf_eulerian_b(int order) {
  PolySeries num = exp_linear(order, kOneMinusT).scaled(kOneMinusT);
  return series_div_exact(num, egf_denominator(order));
}

PolySeries egf_eulerian_d(int order) {
  PolySeries num = exp_linear(order, kOneMinusT).scaled(kOneMinusT);
  num -= exp_linear(order, kOneMinusT * Rat(2)).scaled(kT * kOneMinusT).shifted_up();
  return series_div_exact(num, egf_denominator(order));
}

bool worpitzky_check_b(int n, int k_max) {
  if (n < 0 || k_max < 0) throw std::invalid_argument("worpitzky_check_b: negative argument");
  const IntPoly b = eulerian_recurrence_b(n);
  for (int k = 0; k <= k_max; ++k) {
    // Coefficient k of B_n(t) (1-t)^-(n+1): the geometric factor contributes
    // binomial(k-i+n, n) against coefficient i of B_n.
    Int acc(0);
    for (int i = 0; i <= b.degree() && i <= k; ++i)
      acc += b.coeff(i) * binomial(static_cast<unsigned long>(k - i + n), n);
    if (acc != int_pow(Int(2 * k + 1), static_cast<unsigned long>(n))) return false;
  }
  return true;
}

}  // namespace eulerian
