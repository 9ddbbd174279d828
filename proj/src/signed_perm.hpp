#ifndef EULERIAN_SIGNED_PERM_HPP
#define EULERIAN_SIGNED_PERM_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace eulerian {

enum class GroupKind { Plain, Signed, EvenSigned };

/// A signed permutation in window notation: the word w(1..n) of its values
/// on 1..n, with |w(1)|,...,|w(n)| a permutation of {1,...,n}. The kind
/// flag is validated at construction (Plain: all entries positive,
/// EvenSigned: evenly many negative entries) and is an invariant afterwards.
class SignedPerm {
 public:
  SignedPerm(std::vector<int> window, GroupKind kind);

  static SignedPerm identity(GroupKind kind, int n);

  int size() const { return static_cast<int>(window_.size()); }
  /// 1-based window access: value(i) = w(i).
  int value(int i) const;
  int last() const;
  const std::vector<int>& window() const { return window_; }
  GroupKind kind() const { return kind_; }
  int negative_count() const;

  /// Same window under a different kind flag, revalidated.
  SignedPerm retagged(GroupKind kind) const { return SignedPerm(window_, kind); }

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.kind_ == b.kind_ && a.window_ == b.window_;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.window_ < b.window_; }

  std::string to_string() const;

 private:
  std::vector<int> window_;
  GroupKind kind_;
};

/// A word of nonzero integers with pairwise distinct absolute values,
/// not necessarily drawn from {1..n}.
class SignedWord {
 public:
  explicit SignedWord(std::vector<int> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

  friend bool operator==(const SignedWord& a, const SignedWord& b) { return a.letters_ == b.letters_; }

  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// Subset of {0,...,n-1} over a fixed ambient size n.
class DescentSet {
 public:
  explicit DescentSet(int n);
  DescentSet(int n, std::initializer_list<int> members);
  static DescentSet from_mask(int n, std::uint64_t mask);

  int ambient() const { return n_; }
  bool contains(int i) const { return i >= 0 && i < n_ && (bits_ >> i & 1u); }
  void insert(int i);
  int size() const;
  /// Number of members strictly below i.
  int rank(int i) const;
  bool subset_of(const DescentSet& other) const;
  std::uint64_t mask() const { return bits_; }
  std::vector<int> members() const;

  friend bool operator==(const DescentSet& a, const DescentSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const DescentSet& a, const DescentSet& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int n_;
  std::uint64_t bits_;
};

// Descent statistics. The window-span overloads implement the statistics on
// raw words (used both by the enumeration hot path and by SignedWord); the
// SignedPerm overloads add the kind preconditions.

/// Positions i in [1, n-1] with w(i) > w(i+1), as a subset of {0,...,n-1}.
DescentSet descent_set_plain(std::span<const int> w);
/// Adds position 0 exactly when w(1) < 0.
DescentSet descent_set_b(std::span<const int> w);
/// Adds position 0 exactly when w(1) + w(2) < 0; words of length <= 1 have
/// an empty descent set.
DescentSet descent_set_d(std::span<const int> w);

int descent_count_plain(std::span<const int> w);
int descent_count_b(std::span<const int> w);
int descent_count_d(std::span<const int> w);

int descent_count_a(const SignedPerm& p);  // requires Plain
DescentSet descent_set_b(const SignedPerm& p);
int descent_count_b(const SignedPerm& p);
DescentSet descent_set_d(const SignedPerm& p);  // requires EvenSigned
int descent_count_d(const SignedPerm& p);
DescentSet descent_set_d(const SignedWord& w);

/// max( max{ i - w(i) : w(i) > 0 }, max{ i : w(i) < 0 } ) over 1-based
/// positions. Requires n >= 1 (each max over an empty set simply drops
/// out; for n >= 1 at least one candidate exists). The useful consequence:
/// the value is <= n-1 exactly when w(n) > 0.
int max_displacement_b(std::span<const int> w);
int max_displacement_b(const SignedPerm& p);  // requires Signed or EvenSigned

/// Order-isomorphic relabeling of an all-positive word onto {1,...,n}.
SignedPerm standardize(const SignedWord& w);
/// Standardizes the absolute values and restores each position's sign.
/// Preserves the type D descent set of the word. Result is tagged Signed;
/// retag when an even-signed element is required.
SignedPerm signed_standardize(const SignedWord& w);
/// Inverse of signed_standardize for a fixed support set C (sorted
/// ascending, positive, |C| = size of p).
SignedWord signed_standardize_inverse(const std::vector<int>& support, const SignedPerm& p);

/// Negates every letter. Requires kind Signed. An involution; descent
/// counts of the input and output sum to n.
SignedPerm negate_all_letters(const SignedPerm& p);
/// The parity-preserving variant for even-signed permutations (n >= 2):
/// negates every letter when n is even, fixes the first letter and negates
/// the rest when n is odd. An involution mapping {w(n) > 0} onto
/// {w(n) < 0}; type D descent counts of input and output sum to n.
SignedPerm negate_preserving_parity(const SignedPerm& p);

/// Largest i such that {n-i,...,n-1} is contained in S (ambient n);
/// zero when n-1 is not a member, n when S is all of {0,...,n-1}.
int tail_run_length(const DescentSet& s);

/// Splits p (even-signed, w(n) > 0, descent set containing S) into the
/// signed standardization of its first n-i-1 letters and the set of its
/// trailing i+1 letters, where i = tail_run_length(S). The trailing letters
/// form a decreasing run of positive values.
std::pair<SignedPerm, std::vector<int>> split_descending_tail(const SignedPerm& p,
                                                              const DescentSet& s);
/// Inverse: relabels sigma onto [n] minus the tail values and appends the
/// tail values in decreasing order.
SignedPerm merge_descending_tail(const SignedPerm& sigma, const std::vector<int>& tail_values,
                                 int n);

/// |{ p in group : descent set of p contains S (and p(n) > 0 when
/// positive_last) }| by exhaustive enumeration. The descent notion follows
/// the kind: Plain/Signed/EvenSigned use the A/B/D statistics.
unsigned long long descent_superset_count(GroupKind kind, int n, const DescentSet& s,
                                          bool positive_last);

/// n!, 2^n n!, 2^(n-1) n! (with the n = 0 group a single empty window).
Int group_order(GroupKind kind, int n);

namespace detail {

// Depth-first window generation. Letters are ordered -n < ... < -1 < 1 <
// ... < n (sign dominates, then the natural order), and windows are emitted
// in lexicographic order with respect to it, so streams are deterministic
// and can be split by first letter. For EvenSigned the final letter's sign
// is forced by the parity of the prefix, which keeps the visit count at
// 2^(n-1) n! instead of filtering.
template <typename Fn>
class GroupEnumerator {
 public:
  GroupEnumerator(GroupKind kind, int n, int slice, int slices, Fn& fn)
      : kind_(kind), n_(n), slice_(slice), slices_(slices), fn_(fn) {
    window_.resize(static_cast<std::size_t>(n));
    used_.assign(static_cast<std::size_t>(n) + 1, 0);
  }

  void run() {
    if (n_ == 0) {
      if (slice_ == 0) fn_(std::span<const int>(window_));
      return;
    }
    descend(0);
  }

 private:
  void place(int pos, int letter) {
    const int m = letter < 0 ? -letter : letter;
    used_[static_cast<std::size_t>(m)] = 1;
    if (letter < 0) ++negatives_;
    window_[static_cast<std::size_t>(pos)] = letter;
    if (pos + 1 == n_)
      fn_(std::span<const int>(window_));
    else
      descend(pos + 1);
    used_[static_cast<std::size_t>(m)] = 0;
    if (letter < 0) --negatives_;
  }

  void descend(int pos) {
    if (kind_ == GroupKind::EvenSigned && pos == n_ - 1) {
      int m = 1;
      while (used_[static_cast<std::size_t>(m)]) ++m;
      if (pos == 0 && slices_ > 1 && slice_ != 0) return;  // single forced choice
      place(pos, negatives_ % 2 == 0 ? m : -m);
      return;
    }
    int choice = 0;
    auto try_letter = [&](int letter) {
      const int m = letter < 0 ? -letter : letter;
      if (used_[static_cast<std::size_t>(m)]) return;
      if (pos == 0 && slices_ > 1 && choice++ % slices_ != slice_) return;
      place(pos, letter);
    };
    if (kind_ != GroupKind::Plain)
      for (int v = -n_; v <= -1; ++v) try_letter(v);
    for (int v = 1; v <= n_; ++v) try_letter(v);
  }

  GroupKind kind_;
  int n_;
  int slice_;
  int slices_;
  Fn& fn_;
  std::vector<int> window_;
  std::vector<char> used_;
  int negatives_ = 0;
};

}  // namespace detail

/// Visits one slice of the group's windows. Slices partition the group by
/// first letter (round-robin in letter order): the union over
/// slice = 0..slices-1 is the whole group with no duplicates. The span is
/// only valid during the callback.
template <typename Fn>
void for_each_window_slice(GroupKind kind, int n, int slice, int slices, Fn&& fn) {
  if (n < 0) throw std::invalid_argument("for_each_window_slice: negative n");
  if (slices < 1 || slice < 0 || slice >= slices)
    throw std::invalid_argument("for_each_window_slice: bad slice");
  detail::GroupEnumerator<Fn> e(kind, n, slice, slices, fn);
  e.run();
}

template <typename Fn>
void for_each_window(GroupKind kind, int n, Fn&& fn) {
  for_each_window_slice(kind, n, 0, 1, fn);
}

/// Spec-level iteration yielding validated SignedPerm values.
template <typename Fn>
void for_each_in_group(GroupKind kind, int n, Fn&& fn) {
  for_each_window(kind, n, [&](std::span<const int> w) {
    fn(SignedPerm(std::vector<int>(w.begin(), w.end()), kind));
  });
}

}  // namespace eulerian

#endif
