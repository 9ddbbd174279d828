#include "signed_perm.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace eulerian {

namespace {

void check_window(const std::vector<int>& window, GroupKind kind) {
  const int n = static_cast<int>(window.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int negatives = 0;
  for (int v : window) {
    const int m = std::abs(v);
    if (m < 1 || m > n) throw std::invalid_argument("SignedPerm: letter out of range");
    if (seen[static_cast<std::size_t>(m)]) throw std::invalid_argument("SignedPerm: repeated letter");
    seen[static_cast<std::size_t>(m)] = 1;
    if (v < 0) ++negatives;
  }
  if (kind == GroupKind::Plain && negatives > 0)
    throw std::invalid_argument("SignedPerm: negative letter in a plain permutation");
  if (kind == GroupKind::EvenSigned && negatives % 2 != 0)
    throw std::invalid_argument("SignedPerm: odd number of negative letters");
}

std::string word_to_string(const std::vector<int>& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << "]";
  return os.str();
}

}  // namespace

SignedPerm::SignedPerm(std::vector<int> window, GroupKind kind)
    : window_(std::move(window)), kind_(kind) {
  check_window(window_, kind_);
}

SignedPerm SignedPerm::identity(GroupKind kind, int n) {
  if (n < 0) throw std::invalid_argument("identity: negative n");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return SignedPerm(std::move(w), kind);
}

int SignedPerm::value(int i) const {
  if (i < 1 || i > size()) throw std::invalid_argument("SignedPerm::value: position out of range");
  return window_[static_cast<std::size_t>(i - 1)];
}

int SignedPerm::last() const {
  if (window_.empty()) throw std::invalid_argument("SignedPerm::last: empty window");
  return window_.back();
}

int SignedPerm::negative_count() const {
  int c = 0;
  for (int v : window_)
    if (v < 0) ++c;
  return c;
}

std::string SignedPerm::to_string() const { return word_to_string(window_); }

SignedWord::SignedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  std::vector<int> abs;
  abs.reserve(letters_.size());
  for (int v : letters_) {
    if (v == 0) throw std::invalid_argument("SignedWord: zero letter");
    abs.push_back(std::abs(v));
  }
  std::sort(abs.begin(), abs.end());
  if (std::adjacent_find(abs.begin(), abs.end()) != abs.end())
    throw std::invalid_argument("SignedWord: repeated absolute value");
}

std::string SignedWord::to_string() const { return word_to_string(letters_); }

DescentSet::DescentSet(int n) : n_(n), bits_(0) {
  if (n < 0 || n > 63) throw std::invalid_argument("DescentSet: ambient size out of range");
}

DescentSet::DescentSet(int n, std::initializer_list<int> members) : DescentSet(n) {
  for (int i : members) insert(i);
}

DescentSet DescentSet::from_mask(int n, std::uint64_t mask) {
  DescentSet s(n);
  if (n < 64 && (mask >> n) != 0) throw std::invalid_argument("DescentSet: mask out of range");
  s.bits_ = mask;
  return s;
}

void DescentSet::insert(int i) {
  if (i < 0 || i >= n_) throw std::invalid_argument("DescentSet: member out of range");
  bits_ |= std::uint64_t{1} << i;
}

int DescentSet::size() const { return std::popcount(bits_); }

int DescentSet::rank(int i) const {
  if (i <= 0) return 0;
  const std::uint64_t below = i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
  return std::popcount(bits_ & below);
}

bool DescentSet::subset_of(const DescentSet& other) const { return (bits_ & ~other.bits_) == 0; }

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string DescentSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : members()) {
    if (!first) os << ",";
    first = false;
    os << i;
  }
  os << "}";
  return os.str();
}

DescentSet descent_set_plain(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  DescentSet s(n);
  for (int i = 1; i < n; ++i)
    if (w[static_cast<std::size_t>(i - 1)] > w[static_cast<std::size_t>(i)]) s.insert(i);
  return s;
}

DescentSet descent_set_b(std::span<const int> w) {
  DescentSet s = descent_set_plain(w);
  if (!w.empty() && w[0] < 0) s.insert(0);
  return s;
}

DescentSet descent_set_d(std::span<const int> w) {
  DescentSet s = descent_set_plain(w);
  if (w.size() >= 2 && w[0] + w[1] < 0) s.insert(0);
  return s;
}

int descent_count_plain(std::span<const int> w) {
  int c = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) ++c;
  return c;
}

int descent_count_b(std::span<const int> w) {
  return descent_count_plain(w) + (!w.empty() && w[0] < 0 ? 1 : 0);
}

int descent_count_d(std::span<const int> w) {
  return descent_count_plain(w) + (w.size() >= 2 && w[0] + w[1] < 0 ? 1 : 0);
}

int descent_count_a(const SignedPerm& p) {
  if (p.kind() != GroupKind::Plain)
    throw std::invalid_argument("descent_count_a: requires a plain permutation");
  return descent_count_plain(p.window());
}

DescentSet descent_set_b(const SignedPerm& p) { return descent_set_b(std::span<const int>(p.window())); }

int descent_count_b(const SignedPerm& p) { return descent_count_b(std::span<const int>(p.window())); }

DescentSet descent_set_d(const SignedPerm& p) {
  if (p.kind() != GroupKind::EvenSigned)
    throw std::invalid_argument("descent_set_d: requires an even-signed permutation");
  return descent_set_d(std::span<const int>(p.window()));
}

int descent_count_d(const SignedPerm& p) { return descent_set_d(p).size(); }

DescentSet descent_set_d(const SignedWord& w) { return descent_set_d(std::span<const int>(w.letters())); }

int max_displacement_b(std::span<const int> w) {
  if (w.empty()) throw std::invalid_argument("max_displacement_b: empty window");
  int best = 0;
  bool have = false;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    const int v = w[static_cast<std::size_t>(i - 1)];
    const int cand = v > 0 ? i - v : i;
    if (!have || cand > best) {
      best = cand;
      have = true;
    }
  }
  return best;
}

int max_displacement_b(const SignedPerm& p) {
  if (p.kind() == GroupKind::Plain)
    throw std::invalid_argument("max_displacement_b: requires a signed permutation");
  return max_displacement_b(std::span<const int>(p.window()));
}

SignedPerm standardize(const SignedWord& w) {
  std::vector<int> sorted = w.letters();
  for (int v : sorted)
    if (v < 0) throw std::invalid_argument("standardize: negative letter");
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int v : w.letters()) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return SignedPerm(std::move(out), GroupKind::Plain);
}

SignedPerm signed_standardize(const SignedWord& w) {
  std::vector<int> sorted;
  sorted.reserve(w.letters().size());
  for (int v : w.letters()) sorted.push_back(std::abs(v));
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  out.reserve(w.letters().size());
  for (int v : w.letters()) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), std::abs(v));
    const int rank = static_cast<int>(it - sorted.begin()) + 1;
    out.push_back(v > 0 ? rank : -rank);
  }
  return SignedPerm(std::move(out), GroupKind::Signed);
}

SignedWord signed_standardize_inverse(const std::vector<int>& support, const SignedPerm& p) {
  if (static_cast<int>(support.size()) != p.size())
    throw std::invalid_argument("signed_standardize_inverse: support size mismatch");
  if (!std::is_sorted(support.begin(), support.end()))
    throw std::invalid_argument("signed_standardize_inverse: support must be sorted");
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] <= 0) throw std::invalid_argument("signed_standardize_inverse: support not positive");
    if (i > 0 && support[i] == support[i - 1])
      throw std::invalid_argument("signed_standardize_inverse: repeated support value");
  }
  std::vector<int> out;
  out.reserve(support.size());
  for (int v : p.window()) {
    const int c = support[static_cast<std::size_t>(std::abs(v) - 1)];
    out.push_back(v > 0 ? c : -c);
  }
  return SignedWord(std::move(out));
}

SignedPerm negate_all_letters(const SignedPerm& p) {
  if (p.kind() != GroupKind::Signed)
    throw std::invalid_argument("negate_all_letters: requires kind Signed");
  std::vector<int> w = p.window();
  for (int& v : w) v = -v;
  return SignedPerm(std::move(w), GroupKind::Signed);
}

SignedPerm negate_preserving_parity(const SignedPerm& p) {
  if (p.kind() != GroupKind::EvenSigned)
    throw std::invalid_argument("negate_preserving_parity: requires kind EvenSigned");
  if (p.size() < 2) throw std::invalid_argument("negate_preserving_parity: requires n >= 2");
  std::vector<int> w = p.window();
  const std::size_t start = p.size() % 2 == 0 ? 0 : 1;
  for (std::size_t i = start; i < w.size(); ++i) w[i] = -w[i];
  return SignedPerm(std::move(w), GroupKind::EvenSigned);
}

int tail_run_length(const DescentSet& s) {
  const int n = s.ambient();
  int i = 0;
  while (i < n && s.contains(n - 1 - i)) ++i;
  return i;
}

std::pair<SignedPerm, std::vector<int>> split_descending_tail(const SignedPerm& p,
                                                              const DescentSet& s) {
  const int n = p.size();
  if (p.kind() != GroupKind::EvenSigned)
    throw std::invalid_argument("split_descending_tail: requires kind EvenSigned");
  if (n < 1) throw std::invalid_argument("split_descending_tail: requires n >= 1");
  if (s.ambient() != n) throw std::invalid_argument("split_descending_tail: ambient size mismatch");
  if (p.last() <= 0) throw std::invalid_argument("split_descending_tail: last letter not positive");
  if (!s.subset_of(descent_set_d(p)))
    throw std::invalid_argument("split_descending_tail: descent set does not contain S");
  const int i = tail_run_length(s);
  // With w(n) > 0 and {n-i,...,n-1} all descents, the tail is a positive
  // decreasing run, so i < n here.
  const int prefix_len = n - i - 1;
  std::vector<int> prefix(p.window().begin(), p.window().begin() + prefix_len);
  std::vector<int> tail(p.window().begin() + prefix_len, p.window().end());
  std::sort(tail.begin(), tail.end());
  SignedPerm sigma =
      signed_standardize(SignedWord(std::move(prefix))).retagged(GroupKind::EvenSigned);
  return {std::move(sigma), std::move(tail)};
}

SignedPerm merge_descending_tail(const SignedPerm& sigma, const std::vector<int>& tail_values,
                                 int n) {
  if (sigma.kind() != GroupKind::EvenSigned)
    throw std::invalid_argument("merge_descending_tail: sigma must be even-signed");
  if (sigma.size() + static_cast<int>(tail_values.size()) != n)
    throw std::invalid_argument("merge_descending_tail: sizes do not add up to n");
  std::vector<int> tail = tail_values;
  std::sort(tail.begin(), tail.end());
  std::vector<char> in_tail(static_cast<std::size_t>(n) + 1, 0);
  for (int v : tail) {
    if (v < 1 || v > n) throw std::invalid_argument("merge_descending_tail: tail value out of [n]");
    if (in_tail[static_cast<std::size_t>(v)])
      throw std::invalid_argument("merge_descending_tail: repeated tail value");
    in_tail[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> support;
  support.reserve(static_cast<std::size_t>(sigma.size()));
  for (int v = 1; v <= n; ++v)
    if (!in_tail[static_cast<std::size_t>(v)]) support.push_back(v);
  SignedWord prefix = signed_standardize_inverse(support, sigma);
  std::vector<int> window = prefix.letters();
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) window.push_back(*it);
  return SignedPerm(std::move(window), GroupKind::EvenSigned);
}

unsigned long long descent_superset_count(GroupKind kind, int n, const DescentSet& s,
                                          bool positive_last) {
  if (s.ambient() != n) throw std::invalid_argument("descent_superset_count: ambient size mismatch");
  unsigned long long count = 0;
  for_each_window(kind, n, [&](std::span<const int> w) {
    if (positive_last && (w.empty() || w.back() < 0)) return;
    DescentSet d = kind == GroupKind::Plain    ? descent_set_plain(w)
                   : kind == GroupKind::Signed ? descent_set_b(w)
                                               : descent_set_d(w);
    if (s.subset_of(d)) ++count;
  });
  return count;
}

Int group_order(GroupKind kind, int n) {
  if (n < 0) throw std::invalid_argument("group_order: negative n");
  Int f = factorial(static_cast<unsigned long>(n));
  switch (kind) {
    case GroupKind::Plain:
      return f;
    case GroupKind::Signed:
      return f << n;
    case GroupKind::EvenSigned:
      return n == 0 ? Int(1) : Int(f << (n - 1));
  }
  throw std::invalid_argument("group_order: bad kind");
}

}  // namespace eulerian
