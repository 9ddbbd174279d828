#include "real_roots.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace eulerian {

namespace {

int sign_of(const Rat& x) { return sgn(x); }

int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Division by (t - x): quotient plus remainder p(x), one Horner pass.
std::pair<RatPoly, Rat> synthetic_divide(const RatPoly& p, const Rat& x) {
  if (p.degree() < 1) return {RatPoly{}, p.coeff(0)};
  std::vector<Rat> q(static_cast<std::size_t>(p.degree()));
  Rat carry = p.leading();
  for (int i = p.degree() - 1; i >= 1; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = p.coeff(i) + x * carry;
  }
  q[0] = carry;
  Rat rem = p.coeff(0) + x * carry;
  return {RatPoly(std::move(q)), rem};
}

Rat cauchy_bound(const RatPoly& w) {
  Rat best(0);
  for (int i = 0; i < w.degree(); ++i) {
    Rat c = abs(w.coeff(i) / w.leading());
    if (c > best) best = c;
  }
  return best + 1;
}

}  // namespace

int sign_at(const RatPoly& p, const Rat& x) { return sign_of(p.eval(x)); }

int sign_at_right(const RatPoly& p, const Rat& x) {
  RatPoly cur = p;
  while (!cur.is_zero()) {
    auto [q, r] = synthetic_divide(cur, x);
    if (r != 0) return sign_of(r);
    cur = std::move(q);
  }
  return 0;
}

SturmChain::SturmChain(RatPoly f) {
  if (f.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  polys_.push_back(std::move(f));
  RatPoly d = derivative(polys_.front());
  if (d.is_zero()) return;
  polys_.push_back(std::move(d));
  for (;;) {
    RatPoly r = divmod(polys_[polys_.size() - 2], polys_.back()).second;
    if (r.is_zero()) break;
    polys_.push_back(-r);
  }
}

int SturmChain::variations_right_of(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const RatPoly& p : polys_) signs.push_back(sign_at_right(p, x));
  return variations(signs);
}

int SturmChain::variations_at(bool positive_infinity) const {
  std::vector<int> signs;
  signs.reserve(polys_.size());
  for (const RatPoly& p : polys_) {
    int s = sign_of(p.leading());
    if (!positive_infinity && p.degree() % 2 != 0) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int SturmChain::count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
  const int vlo = lo ? variations_right_of(*lo) : variations_at(false);
  const int vhi = hi ? variations_right_of(*hi) : variations_at(true);
  return vlo - vhi;
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (f.degree() < 1) return RatPoly{1};
  RatPoly g = gcd_monic(f, derivative(f));
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: gcd does not divide");
  return q.monic();
}

RatPoly squarefree_part(const IntPoly& f) { return squarefree_part(RatPoly::from(f)); }

int count_distinct_roots(const RatPoly& f, const std::optional<Rat>& lo,
                         const std::optional<Rat>& hi) {
  RatPoly w = squarefree_part(f);
  if (w.degree() < 1) return 0;
  return SturmChain(std::move(w)).count(lo, hi);
}

int count_real_roots(const IntPoly& f, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi) {
  if (f.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("count_real_roots: lo must be < hi");
  return count_distinct_roots(RatPoly::from(f), lo, hi);
}

bool is_real_rooted(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  RatPoly w = squarefree_part(f);
  if (w.degree() < 1) return true;
  const int deg = w.degree();
  return SturmChain(std::move(w)).count(std::nullopt, std::nullopt) == deg;
}

namespace {

struct RootSet {
  RatPoly w;  // squarefree part, monic
  SturmChain chain;
  std::vector<IsolatingInterval> roots;  // ascending
};

int interval_count(const SturmChain& chain, const Rat& lo, const Rat& hi) {
  return chain.variations_right_of(lo) - chain.variations_right_of(hi);
}

void bisect(const RootSet& rs, const Rat& lo, const Rat& hi, const std::vector<RatPoly>& ladder,
            std::vector<IsolatingInterval>& out) {
  const int c = interval_count(rs.chain, lo, hi);
  if (c == 0) return;
  if (c == 1) {
    IsolatingInterval iv;
    if (sign_at(rs.w, hi) == 0) {
      iv.lo = iv.hi = hi;
      iv.multiplicity = 0;
      for (const RatPoly& g : ladder) {
        if (sign_at(g, hi) != 0) break;
        ++iv.multiplicity;
      }
    } else {
      iv.lo = lo;
      iv.hi = hi;
      iv.multiplicity = 0;
      for (const RatPoly& g : ladder) {
        if (count_distinct_roots(g, lo, hi) == 0) break;
        ++iv.multiplicity;
      }
    }
    out.push_back(std::move(iv));
    return;
  }
  const Rat mid = (lo + hi) / 2;
  bisect(rs, lo, mid, ladder, out);
  bisect(rs, mid, hi, ladder, out);
}

RootSet isolate_with_context(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  RatPoly w = squarefree_part(f);
  if (w.degree() < 1) {
    SturmChain trivial{RatPoly{1}};
    return {std::move(w), std::move(trivial), {}};
  }
  SturmChain chain(w);
  RootSet rs{std::move(w), std::move(chain), {}};
  // Multiplicity ladder: g_0 = f, g_{k+1} = gcd(g_k, g_k'). A root has
  // multiplicity m exactly when it survives through g_{m-1}.
  std::vector<RatPoly> ladder;
  RatPoly g = RatPoly::from(f).monic();
  while (g.degree() >= 1) {
    ladder.push_back(g);
    g = gcd_monic(g, derivative(g));
  }
  const Rat bound = cauchy_bound(rs.w);
  bisect(rs, -bound, bound, ladder, rs.roots);
  return rs;
}

void refine_step(RootSet& rs, IsolatingInterval& iv) {
  if (iv.is_point()) return;
  const Rat mid = (iv.lo + iv.hi) / 2;
  if (sign_at(rs.w, mid) == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  if (interval_count(rs.chain, iv.lo, mid) == 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

// Exact order of two algebraic numbers given by isolating intervals of the
// squarefree parts. Equality is decided through the common-root gcd: a root
// of gcd(w_a, w_b) inside both intervals must be the unique root of each.
int compare_roots(RootSet& ra, IsolatingInterval& a, RootSet& rb, IsolatingInterval& b,
                  const SturmChain* gcd_chain) {
  for (;;) {
    if (a.is_point() && b.is_point()) {
      if (a.lo < b.lo) return -1;
      return a.lo == b.lo ? 0 : 1;
    }
    if (a.is_point()) {
      if (a.lo <= b.lo) return -1;
      if (a.lo > b.hi) return 1;
      if (sign_at(rb.w, a.lo) == 0) return 0;
      refine_step(rb, b);
      continue;
    }
    if (b.is_point()) {
      if (b.lo <= a.lo) return 1;
      if (b.lo > a.hi) return -1;
      if (sign_at(ra.w, b.lo) == 0) return 0;
      refine_step(ra, a);
      continue;
    }
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    if (gcd_chain) {
      const Rat lo = a.lo > b.lo ? a.lo : b.lo;
      const Rat hi = a.hi < b.hi ? a.hi : b.hi;
      if (interval_count(*gcd_chain, lo, hi) >= 1) return 0;
    }
    refine_step(ra, a);
    refine_step(rb, b);
  }
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const IntPoly& f) {
  return isolate_with_context(f).roots;
}

void refine_to_width(const IntPoly& f, IsolatingInterval& interval, const Rat& width) {
  if (width <= 0) throw std::invalid_argument("refine_to_width: width must be positive");
  RatPoly w = squarefree_part(f);
  if (w.degree() < 1) throw std::invalid_argument("refine_to_width: no roots to refine");
  RootSet rs{w, SturmChain(w), {}};
  while (!interval.is_point() && interval.hi - interval.lo > width) refine_step(rs, interval);
}

bool interlaces(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("interlaces: zero polynomial");
  if (!is_real_rooted(f) || !is_real_rooted(g)) return false;
  const int df = f.degree();
  const int dg = g.degree();
  if (df > dg || dg > df + 1) return false;
  if (df == 0) return true;  // no alpha roots; the alternation is vacuous

  RootSet rf = isolate_with_context(f);
  RootSet rg = isolate_with_context(g);
  RatPoly common = gcd_monic(rf.w, rg.w);
  std::optional<SturmChain> gcd_chain;
  if (common.degree() >= 1) gcd_chain.emplace(std::move(common));

  // Expand to root lists with multiplicity, largest first, as indices into
  // the distinct-root tables so comparisons can be memoized per pair.
  auto expand = [](const RootSet& rs) {
    std::vector<int> idx;
    for (int i = static_cast<int>(rs.roots.size()) - 1; i >= 0; --i)
      for (int m = 0; m < rs.roots[static_cast<std::size_t>(i)].multiplicity; ++m) idx.push_back(i);
    return idx;
  };
  const std::vector<int> alpha = expand(rf);
  const std::vector<int> beta = expand(rg);
  if (static_cast<int>(alpha.size()) != df || static_cast<int>(beta.size()) != dg)
    throw std::logic_error("interlaces: multiplicities do not add up to the degree");

  std::map<std::pair<int, int>, int> memo;
  auto cmp = [&](int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int r = compare_roots(rf, rf.roots[static_cast<std::size_t>(i)], rg,
                          rg.roots[static_cast<std::size_t>(j)],
                          gcd_chain ? &*gcd_chain : nullptr);
    memo.emplace(key, r);
    return r;
  };

  for (int k = 0; k < df; ++k) {
    if (cmp(alpha[static_cast<std::size_t>(k)], beta[static_cast<std::size_t>(k)]) > 0)
      return false;  // alpha_k <= beta_k fails
    if (k + 1 < dg &&
        cmp(alpha[static_cast<std::size_t>(k)], beta[static_cast<std::size_t>(k + 1)]) < 0)
      return false;  // beta_{k+1} <= alpha_k fails
  }
  return true;
}

bool compatible_pair_cert(const IntPoly& f, const IntPoly& g) {
  for (const Int& c : f.coeffs())
    if (c < 0) throw std::invalid_argument("compatible_pair_cert: negative coefficient");
  for (const Int& c : g.coeffs())
    if (c < 0) throw std::invalid_argument("compatible_pair_cert: negative coefficient");
  return interlaces(f, g);
}

bool compatible_sample_check(const std::vector<IntPoly>& polys, unsigned trials,
                             unsigned long long seed) {
  if (polys.empty()) throw std::invalid_argument("compatible_sample_check: empty list");
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Rat> cs;
    cs.reserve(polys.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const unsigned long num = static_cast<unsigned long>(rng() % 10);
      const unsigned long den = static_cast<unsigned long>(1 + rng() % 4);
      if (num != 0) all_zero = false;
      cs.emplace_back(num, den);
    }
    if (all_zero) cs[0] = 1;
    RatPoly combo;
    for (std::size_t i = 0; i < polys.size(); ++i) combo += RatPoly::from(polys[i]) * cs[i];
    if (combo.is_zero()) continue;  // vacuous draw (possible only with zero inputs)
    if (!is_real_rooted(clear_denominators(combo))) return false;
  }
  return true;
}

}  // namespace eulerian
