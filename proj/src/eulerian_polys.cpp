#include "eulerian_polys.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace eulerian {

namespace {

IntPoly poly_from_counts(const std::vector<unsigned long long>& counts) {
  std::vector<Int> coeffs;
  coeffs.reserve(counts.size());
  for (unsigned long long c : counts) coeffs.emplace_back(static_cast<unsigned long>(c & 0xffffffffULL));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    Int hi(static_cast<unsigned long>(counts[i] >> 32));
    coeffs[i] += hi << 32;
  }
  return IntPoly(std::move(coeffs));
}

// Runs fn(slice, workers) on each slice, on threads when workers > 1.
template <typename Fn>
void run_sliced(int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0, 1);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) threads.emplace_back([&fn, w, workers] { fn(w, workers); });
  for (auto& t : threads) t.join();
}

std::vector<unsigned long long> merge_counts(std::vector<std::vector<unsigned long long>>& parts) {
  std::vector<unsigned long long> total(parts.front().size(), 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += p[i];
  return total;
}

// Table of A_0..A_n via the classic recurrence.
std::vector<IntPoly> a_table(int n) {
  std::vector<IntPoly> table;
  table.push_back(IntPoly{1});
  for (int m = 1; m <= n; ++m) {
    IntPoly sum;
    for (int k = 0; k < m; ++k)
      sum += table[static_cast<std::size_t>(k)] *
             IntPoly::constant(binomial(static_cast<unsigned long>(m), k)) * linear_pow(m - k - 1);
    table.push_back(std::move(sum));
  }
  return table;
}

IntPoly half_from(const std::vector<IntPoly>& table, int n) {
  IntPoly sum;
  for (int k = 0; k < n; ++k)
    sum += table[static_cast<std::size_t>(k)] *
           IntPoly::constant(binomial(static_cast<unsigned long>(n), k)) * linear_pow(n - k - 1);
  return sum;
}

// Table of B_0..B_n via P_m + reverse.
std::vector<IntPoly> b_table(int n) {
  std::vector<IntPoly> table;
  table.push_back(IntPoly{1});
  for (int m = 1; m <= n; ++m) {
    IntPoly p = half_from(table, m);
    table.push_back(p + reverse(p, m));
  }
  return table;
}

// Table of D_0..D_n via Q_m + reverse; D_1 = 1 by convention.
std::vector<IntPoly> d_table(int n) {
  std::vector<IntPoly> table;
  table.push_back(IntPoly{1});
  if (n >= 1) table.push_back(IntPoly{1});
  for (int m = 2; m <= n; ++m) {
    IntPoly q = half_from(table, m);
    table.push_back(q + reverse(q, m));
  }
  return table;
}

int refined_last_letter(int n, int k) {
  if (n < 1 || k < 0 || k > 2 * n - 1)
    throw std::invalid_argument("refined family: index out of range");
  return k <= n - 1 ? n - k : n - 1 - k;
}

IntPoly refined_poly(CoxeterType type, int n, int k) {
  const int target = refined_last_letter(n, k);
  const GroupKind kind = group_of(type);
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_window(kind, n, [&](std::span<const int> w) {
    if (w.back() != target) return;
    ++counts[static_cast<std::size_t>(descent_count(type, w))];
  });
  return poly_from_counts(counts);
}

}  // namespace

GroupKind group_of(CoxeterType type) {
  switch (type) {
    case CoxeterType::A:
      return GroupKind::Plain;
    case CoxeterType::B:
      return GroupKind::Signed;
    case CoxeterType::D:
      return GroupKind::EvenSigned;
  }
  throw std::invalid_argument("group_of: bad type");
}

Int coxeter_group_order(CoxeterType type, int n) { return group_order(group_of(type), n); }

int descent_count(CoxeterType type, std::span<const int> w) {
  switch (type) {
    case CoxeterType::A:
      return descent_count_plain(w);
    case CoxeterType::B:
      return descent_count_b(w);
    case CoxeterType::D:
      return descent_count_d(w);
  }
  throw std::invalid_argument("descent_count: bad type");
}

IntPoly descent_polynomial(CoxeterType type, int n, int workers) {
  if (n < 0) throw std::invalid_argument("descent_polynomial: negative n");
  if (workers < 1) throw std::invalid_argument("descent_polynomial: workers must be >= 1");
  const GroupKind kind = group_of(type);
  std::vector<std::vector<unsigned long long>> parts(
      static_cast<std::size_t>(workers),
      std::vector<unsigned long long>(static_cast<std::size_t>(n) + 1, 0));
  run_sliced(workers, [&](int slice, int slices) {
    auto& local = parts[static_cast<std::size_t>(slice)];
    for_each_window_slice(kind, n, slice, slices, [&](std::span<const int> w) {
      ++local[static_cast<std::size_t>(descent_count(type, w))];
    });
  });
  return poly_from_counts(merge_counts(parts));
}

unsigned long long enumeration_count(CoxeterType type, int n, int workers) {
  if (n < 0) throw std::invalid_argument("enumeration_count: negative n");
  if (workers < 1) throw std::invalid_argument("enumeration_count: workers must be >= 1");
  const GroupKind kind = group_of(type);
  std::vector<unsigned long long> parts(static_cast<std::size_t>(workers), 0);
  run_sliced(workers, [&](int slice, int slices) {
    unsigned long long local = 0;
    for_each_window_slice(kind, n, slice, slices, [&](std::span<const int>) { ++local; });
    parts[static_cast<std::size_t>(slice)] = local;
  });
  unsigned long long total = 0;
  for (unsigned long long p : parts) total += p;
  return total;
}

IntPoly eulerian_recurrence_a(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_recurrence_a: negative n");
  return a_table(n).back();
}

IntPoly half_poly_b(int n) {
  if (n < 1) throw std::invalid_argument("half_poly_b: requires n >= 1");
  return half_from(b_table(n - 1), n);
}

IntPoly eulerian_recurrence_b(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_recurrence_b: negative n");
  return b_table(n).back();
}

IntPoly half_poly_d(int n) {
  if (n < 1) throw std::invalid_argument("half_poly_d: requires n >= 1");
  return half_from(d_table(n - 1), n);
}

IntPoly eulerian_recurrence_d(int n) {
  if (n < 2) throw std::invalid_argument("eulerian_recurrence_d: defined for n >= 2");
  return d_table(n).back();
}

IntPoly eulerian_derivative_rec_a(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_derivative_rec_a: negative n");
  IntPoly a{1};
  for (int m = 1; m <= n; ++m) {
    // (1 + (m-1)t) A_{m-1} + t(1-t) A'_{m-1}
    IntPoly lead = IntPoly(std::vector<Int>{Int(1), Int(m - 1)}) * a;
    IntPoly grad = IntPoly(std::vector<Int>{Int(0), Int(1), Int(-1)}) * derivative(a);
    a = lead + grad;
  }
  return a;
}

IntPoly eulerian_derivative_rec_b(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_derivative_rec_b: negative n");
  IntPoly b{1};
  for (int m = 1; m <= n; ++m) {
    IntPoly lead = IntPoly(std::vector<Int>{Int(1), Int(2 * m - 1)}) * b;
    IntPoly grad = IntPoly(std::vector<Int>{Int(0), Int(2), Int(-2)}) * derivative(b);
    b = lead + grad;
  }
  return b;
}

IntPoly eulerian_double_sum_d(int n) {
  if (n < 0) throw std::invalid_argument("eulerian_double_sum_d: negative n");
  std::vector<IntPoly> table;
  table.push_back(IntPoly{1});
  for (int m = 1; m <= n; ++m) {
    IntPoly sum;
    for (int k = 0; k < m; ++k) {
      const int d = m - k;
      IntPoly inner = IntPoly::monomial(-factorial(static_cast<unsigned long>(d)), d);  // j = 0
      for (int j = 1; j <= d; ++j) {
        Int scale = factorial(static_cast<unsigned long>(d)) / factorial(static_cast<unsigned long>(j));
        // t (d-j+1)^j - (d-j-1)^j
        IntPoly bracket(std::vector<Int>{-int_pow(Int(d - j - 1), static_cast<unsigned long>(j)),
                                         int_pow(Int(d - j + 1), static_cast<unsigned long>(j))});
        IntPoly term = IntPoly::monomial(scale, d - j);
        IntPoly one_minus_t_pow = linear_pow(j - 1);
        if ((j - 1) % 2 != 0) one_minus_t_pow = -one_minus_t_pow;  // (1-t)^(j-1)
        sum += IntPoly::constant(binomial(static_cast<unsigned long>(m), k)) *
               table[static_cast<std::size_t>(k)] * term * one_minus_t_pow * bracket;
      }
      sum += IntPoly::constant(binomial(static_cast<unsigned long>(m), k)) *
             table[static_cast<std::size_t>(k)] * inner;
    }
    table.push_back(std::move(sum));
  }
  return table.back();
}

IntPoly bounded_displacement_poly(int n, int j) {
  if (n < 0 || j < 0) throw std::invalid_argument("bounded_displacement_poly: negative argument");
  if (n == 0) return IntPoly{1};
  std::vector<unsigned long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_window(GroupKind::Signed, n, [&](std::span<const int> w) {
    if (max_displacement_b(w) > j) return;
    ++counts[static_cast<std::size_t>(descent_count_b(w))];
  });
  return poly_from_counts(counts);
}

bool displacement_recurrence_holds(int m, int j) {
  if (m < 0 || j < 0) throw std::invalid_argument("displacement_recurrence_holds: negative argument");
  const int n = m + j + 1;
  IntPoly lhs = bounded_displacement_poly(n, j);
  IntPoly rhs;
  for (int k = 1; k <= j + 1; ++k)
    rhs += IntPoly::constant(binomial(static_cast<unsigned long>(j) + 1, k)) *
           bounded_displacement_poly(n - k, j) * linear_pow(k - 1);
  return lhs == rhs;
}

IntPoly refined_descent_poly_d(int n, int k) {
  if (n < 2) throw std::invalid_argument("refined_descent_poly_d: requires n >= 2");
  return refined_poly(CoxeterType::D, n, k) * Int(2);
}

IntPoly refined_descent_poly_b(int n, int k) {
  if (n < 1) throw std::invalid_argument("refined_descent_poly_b: requires n >= 1");
  return refined_poly(CoxeterType::B, n, k);
}

namespace {

bool halves_match(const IntPoly& low, const IntPoly& high, const IntPoly& half, int n, bool halve) {
  IntPoly lo = low, hi = high;
  if (halve) {
    std::vector<Int> lo2, hi2;
    for (const Int& c : lo.coeffs()) {
      if (c % 2 != 0) return false;
      lo2.push_back(c / 2);
    }
    for (const Int& c : hi.coeffs()) {
      if (c % 2 != 0) return false;
      hi2.push_back(c / 2);
    }
    lo = IntPoly(std::move(lo2));
    hi = IntPoly(std::move(hi2));
  }
  return lo == half && hi == reverse(half, n);
}

}  // namespace

bool half_sum_identity(CoxeterType type, int n) {
  if (type == CoxeterType::A) throw std::invalid_argument("half_sum_identity: only for B and D");
  const bool is_d = type == CoxeterType::D;
  if (n < (is_d ? 2 : 1)) throw std::invalid_argument("half_sum_identity: n out of range");
  IntPoly low, high;
  for (int k = 0; k < n; ++k)
    low += is_d ? refined_descent_poly_d(n, k) : refined_descent_poly_b(n, k);
  for (int k = n; k < 2 * n; ++k)
    high += is_d ? refined_descent_poly_d(n, k) : refined_descent_poly_b(n, k);
  IntPoly half = is_d ? half_poly_d(n) : half_poly_b(n);
  return halves_match(low, high, half, n, is_d);
}

bool half_sums_check(int n) {
  return half_sum_identity(CoxeterType::B, n) && half_sum_identity(CoxeterType::D, n);
}

std::pair<IntPoly, IntPoly> positive_negative_split(CoxeterType type, int n, int workers) {
  if (type == CoxeterType::A)
    throw std::invalid_argument("positive_negative_split: only for B and D");
  if (n < (type == CoxeterType::D ? 2 : 1))
    throw std::invalid_argument("positive_negative_split: n out of range");
  if (workers < 1) throw std::invalid_argument("positive_negative_split: workers must be >= 1");
  const GroupKind kind = group_of(type);
  std::vector<std::vector<unsigned long long>> pos_parts(
      static_cast<std::size_t>(workers),
      std::vector<unsigned long long>(static_cast<std::size_t>(n) + 1, 0));
  auto neg_parts = pos_parts;
  run_sliced(workers, [&](int slice, int slices) {
    auto& pos = pos_parts[static_cast<std::size_t>(slice)];
    auto& neg = neg_parts[static_cast<std::size_t>(slice)];
    for_each_window_slice(kind, n, slice, slices, [&](std::span<const int> w) {
      auto& counts = w.back() > 0 ? pos : neg;
      ++counts[static_cast<std::size_t>(descent_count(type, w))];
    });
  });
  return {poly_from_counts(merge_counts(pos_parts)), poly_from_counts(merge_counts(neg_parts))};
}

EulerianTable::EulerianTable(CoxeterType type, Method method, int workers)
    : type_(type), method_(method), workers_(workers) {
  if (workers < 1) throw std::invalid_argument("EulerianTable: workers must be >= 1");
  if (method == Method::DoubleSum && type != CoxeterType::D)
    throw std::invalid_argument("EulerianTable: the double-sum method only applies to D");
  if (method == Method::DerivativeRecurrence && type == CoxeterType::D)
    throw std::invalid_argument("EulerianTable: no derivative recurrence is provided for D");
}

IntPoly EulerianTable::compute(int n) const {
  switch (method_) {
    case Method::Enumeration:
      return descent_polynomial(type_, n, workers_);
    case Method::Recurrence:
      switch (type_) {
        case CoxeterType::A:
          return eulerian_recurrence_a(n);
        case CoxeterType::B:
          return eulerian_recurrence_b(n);
        case CoxeterType::D:
          return eulerian_recurrence_d(n);
      }
      break;
    case Method::DerivativeRecurrence:
      return type_ == CoxeterType::A ? eulerian_derivative_rec_a(n) : eulerian_derivative_rec_b(n);
    case Method::DoubleSum:
      return eulerian_double_sum_d(n);
  }
  throw std::invalid_argument("EulerianTable: bad method");
}

IntPoly EulerianTable::polynomial(int n) {
  if (method_ == Method::Enumeration) {
    IntPoly p = compute(n);
    if (p.degree() > n || p.sum_of_coeffs() != coxeter_group_order(type_, n))
      throw std::logic_error("EulerianTable: entry fails its invariant");
    return p;
  }
  auto it = entries_.find(n);
  if (it == entries_.end()) {
    IntPoly p = compute(n);
    if (p.degree() > n || p.sum_of_coeffs() != coxeter_group_order(type_, n))
      throw std::logic_error("EulerianTable: entry fails its invariant");
    for (const Int& c : p.coeffs())
      if (c < 0) throw std::logic_error("EulerianTable: negative coefficient");
    it = entries_.emplace(n, std::move(p)).first;
  }
  return it->second;
}

}  // namespace eulerian
