#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilc {

/// A finite multiset of positive integers, stored canonically as a
/// value -> multiplicity map iterated in non-increasing value order.
/// The same type serves as an integer partition (a multiset whose parts
/// sum to n) and as the working multisets of the completion engine.
class Partition {
 public:
  using Multiplicities = std::map<int, int, std::greater<>>;

  Partition() = default;
  Partition(std::initializer_list<int> parts);

  /// Sorts the parts non-increasing. Throws InvalidPart for parts <= 0.
  static Partition normalize(std::span<const int> raw);

  /// Parses "5,4,1" (any order, surrounding blanks allowed). The empty
  /// string yields the empty multiset.
  static Partition parse(std::string_view text);

  /// Builds {value^count}; count 0 yields the empty multiset.
  static Partition repeated(int value, int count);

  int multiplicity(int value) const;
  std::vector<int> support() const;
  /// Number of parts counted with multiplicity, |lambda|.
  int size() const noexcept { return size_; }
  std::int64_t sum() const noexcept { return sum_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Largest element of the support. Throws EmptyMultiset.
  int max() const;

  /// Parts in non-increasing order, with repetition.
  std::vector<int> parts() const;
  const Multiplicities& multiplicities() const noexcept { return mult_; }

  /// Comma separated non-increasing parts, e.g. "5,4,1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend Partition msum(const Partition& a, const Partition& b);
  friend Partition mdiff(const Partition& a, const Partition& b);

 private:
  void add(int value, int count);

  Multiplicities mult_;
  int size_ = 0;
  std::int64_t sum_ = 0;
};

/// Pointwise sum of multiplicities.
Partition msum(const Partition& a, const Partition& b);
/// Pointwise max(0, mult_a - mult_b).
Partition mdiff(const Partition& a, const Partition& b);
/// Largest element; throws EmptyMultiset on the empty multiset.
int mmax(const Partition& a);

inline Partition operator+(const Partition& a, const Partition& b) { return msum(a, b); }
inline Partition operator-(const Partition& a, const Partition& b) { return mdiff(a, b); }

/// Dominance (majorization) order on partitions of the same integer:
/// lam has no more parts than mu and every prefix sum of lam is at least
/// the corresponding prefix sum of mu. Throws SumMismatch if the sums differ.
bool dominates(const Partition& lam, const Partition& mu);

/// Jordan type of N_r in gl_n: {ceil(n/r)^(n mod r), floor(n/r)^(r - n mod r)}.
/// Throws InvalidShape unless 0 < r < n.
Partition nr_type(int n, int r);

/// Every partition of n, in descending lexicographic order of the part
/// sequence ({n} first, {1^n} last). Only partitions with at most
/// max_parts parts are produced when max_parts > 0.
std::vector<Partition> partitions_of(int n, int max_parts = 0);

/// Visits the same sequence as partitions_of without materializing it.
void for_each_partition(int n, int max_parts,
                        const std::function<void(const Partition&)>& visit);

}  // namespace nilc
