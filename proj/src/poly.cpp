#include "poly.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerian {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly f;
  if (c != 0) f.coeffs_.push_back(std::move(c));
  return f;
}

IntPoly IntPoly::monomial(Int c, int k) {
  if (k < 0) throw std::invalid_argument("monomial: negative exponent");
  IntPoly f;
  if (c != 0) {
    f.coeffs_.assign(static_cast<std::size_t>(k) + 1, Int(0));
    f.coeffs_.back() = std::move(c);
  }
  return f;
}

Int IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Int& IntPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
  return coeffs_.back();
}

Int IntPoly::eval(const Int& x) const {
  Int acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& g) {
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& g) {
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return IntPoly{};
  std::vector<Int> out(f.coeffs_.size() + g.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& g) { return *this = *this * g; }

IntPoly& IntPoly::operator*=(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly f = *this;
  for (auto& a : f.coeffs_) a = -a;
  return f;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

IntPoly linear_pow(int k) {
  if (k < 0) throw std::invalid_argument("linear_pow: negative exponent");
  std::vector<Int> out(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Int c = binomial(static_cast<unsigned long>(k), i);
    if ((k - i) % 2 != 0) c = -c;
    out[static_cast<std::size_t>(i)] = std::move(c);
  }
  return IntPoly(std::move(out));
}

IntPoly reverse(const IntPoly& f, int n) {
  if (n < 0) throw std::invalid_argument("reverse: negative degree bound");
  if (n < f.degree()) throw std::invalid_argument("reverse: bound below the degree");
  if (f.is_zero()) return f;
  std::vector<Int> out(static_cast<std::size_t>(n) + 1, Int(0));
  for (int i = 0; i <= f.degree(); ++i) out[static_cast<std::size_t>(n - i)] = f.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return IntPoly{};
  std::vector<Int> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
  return IntPoly(std::move(out));
}

bool is_palindromic(const IntPoly& f, int n) { return reverse(f, n) == f; }

Int binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(Rat c) {
  RatPoly f;
  if (c != 0) f.coeffs_.push_back(std::move(c));
  return f;
}

RatPoly RatPoly::from(const IntPoly& f) {
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  for (const Int& c : f.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

Rat RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rat& RatPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading: zero polynomial");
  return coeffs_.back();
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  RatPoly f = *this;
  Rat inv = 1 / leading();
  for (auto& a : f.coeffs_) a *= inv;
  return f;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& g) {
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& g) {
  if (coeffs_.size() < g.coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return RatPoly{};
  std::vector<Rat> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& g) { return *this = *this * g; }

RatPoly& RatPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly f = *this;
  for (auto& a : f.coeffs_) a = -a;
  return f;
}

std::string RatPoly::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i];
  }
  os << "]";
  return os.str();
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  if (f.degree() < g.degree()) return {RatPoly{}, f};
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Rat(0));
  const int dg = g.degree();
  const Rat& lead = g.leading();
  for (int i = f.degree(); i >= dg; --i) {
    Rat c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(j);
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly derivative(const RatPoly& f) {
  if (f.degree() < 1) return RatPoly{};
  std::vector<Rat> out(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = f.coeff(i) * i;
  return RatPoly(std::move(out));
}

RatPoly gcd_monic(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_monic: both inputs zero");
  RatPoly a = f, b = g;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

IntPoly clear_denominators(const RatPoly& f) {
  Int lcm(1);
  for (const Rat& c : f.coeffs()) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> out;
  out.reserve(f.coeffs().size());
  for (const Rat& c : f.coeffs()) {
    Rat scaled = c * Rat(lcm);
    out.push_back(scaled.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace eulerian
