#include "verify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "egf.hpp"
#include "eulerian_polys.hpp"
#include "signed_perm.hpp"

namespace eulerian {

namespace {

bool check_type_b_recurrence(int n) {
  return eulerian_recurrence_b(n) == descent_polynomial(CoxeterType::B, n);
}

bool check_type_d_recurrence(int n) {
  return eulerian_recurrence_d(n) == descent_polynomial(CoxeterType::D, n);
}

bool check_egf(CoxeterType type, int n) {
  const PolySeries s = type == CoxeterType::B ? egf_eulerian_b(n) : egf_eulerian_d(n);
  const RatPoly scaled = s.coeff(n) * Rat(factorial(static_cast<unsigned long>(n)));
  return scaled == RatPoly::from(descent_polynomial(type, n));
}

bool check_positive_half_b(int n) {
  return bounded_displacement_poly(n, n - 1) == half_poly_b(n);
}

bool check_split_reverse(CoxeterType type, int n) {
  auto [pos, neg] = positive_negative_split(type, n);
  return neg == reverse(pos, n);
}

bool check_positive_half_d(int n) {
  return positive_negative_split(CoxeterType::D, n).first == half_poly_d(n);
}

// Round-trip and cardinality statement of the tail-splitting bijection, over
// every subset S of {0,...,n-1}.
bool check_tail_bijection(int n) {
  std::vector<std::vector<SignedPerm>> members(std::size_t{1} << n);
  for_each_in_group(GroupKind::EvenSigned, n, [&](const SignedPerm& p) {
    if (p.last() < 0) return;
    const std::uint64_t des = descent_set_d(p).mask();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
      if ((s & ~des) == 0) members[s].push_back(p);
  });
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const DescentSet set = DescentSet::from_mask(n, s);
    const int i = tail_run_length(set);
    if (i == n) {
      if (!members[s].empty()) return false;  // a full descent run cannot end positive
      continue;
    }
    const int m = n - i - 1;
    Int expected = group_order(GroupKind::EvenSigned, m) *
                   binomial(static_cast<unsigned long>(n), i + 1);
    if (Int(static_cast<unsigned long>(members[s].size())) != expected) return false;
    for (const SignedPerm& p : members[s]) {
      auto [sigma, tail] = split_descending_tail(p, set);
      if (sigma.size() != m) return false;
      DescentSet inner(m);
      for (int j = 0; j < m - 1 && j < n; ++j)
        if (set.contains(j)) inner.insert(j);
      if (!inner.subset_of(m >= 1 ? descent_set_d(sigma)
                                  : DescentSet(0)))
        return false;
      if (merge_descending_tail(sigma, tail, n) != p) return false;
    }
  }
  return true;
}

bool check_displacement_recurrence(int n) {
  for (int j = 0; j < n; ++j)
    if (!displacement_recurrence_holds(n - 1 - j, j)) return false;
  return true;
}

bool check_double_sum(int n) { return eulerian_double_sum_d(n) == eulerian_recurrence_d(n); }

struct Target {
  int min_n;
  std::function<bool(int)> run;
};

const std::vector<std::pair<std::string, Target>>& table() {
  static const std::vector<std::pair<std::string, Target>> t = {
      {"thmB", {1, check_type_b_recurrence}},
      {"thmD", {2, check_type_d_recurrence}},
      {"egfB", {0, [](int n) { return check_egf(CoxeterType::B, n); }}},
      {"egfD", {0, [](int n) { return check_egf(CoxeterType::D, n); }}},
      {"worpitzky", {0, [](int n) { return worpitzky_check_b(n, 20); }}},
      {"lemB1", {1, check_positive_half_b}},
      {"lemB2", {1, [](int n) { return check_split_reverse(CoxeterType::B, n); }}},
      {"lemD0", {1, check_tail_bijection}},
      {"lemD1", {2, check_positive_half_d}},
      {"lemD2", {2, [](int n) { return check_split_reverse(CoxeterType::D, n); }}},
      {"bjk", {1, check_displacement_recurrence}},
      {"unpleasant", {2, check_double_sum}},
      {"half-sums", {2, half_sums_check}},
  };
  return t;
}

const Target& find_target(const std::string& name) {
  for (const auto& [key, target] : table())
    if (key == name) return target;
  throw std::invalid_argument("unknown verify target: " + name);
}

}  // namespace

std::vector<std::string> verify_target_names() {
  std::vector<std::string> names;
  names.reserve(table().size());
  for (const auto& [key, target] : table()) names.push_back(key);
  return names;
}

int verify_min_n(const std::string& target) { return find_target(target).min_n; }

bool run_verify_target(const std::string& target, int n) {
  const Target& t = find_target(target);
  if (n < t.min_n)
    throw std::invalid_argument("verify target " + target + ": range starts at " +
                                std::to_string(t.min_n));
  return t.run(n);
}

}  // namespace eulerian
