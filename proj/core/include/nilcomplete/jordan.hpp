#pragma once

#include <cstddef>
#include <vector>

#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/partition.hpp"

namespace nilc {

struct JordanType {
  Partition partition;

  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Rank over Q by fraction-free (Bareiss) elimination. Runs in checked
/// 128-bit arithmetic and restarts with GMP integers on overflow, so the
/// result is exact either way.
std::size_t exact_rank(const IntMatrix& a);

/// a^n == 0 with n the dimension.
bool is_nilpotent(const IntMatrix& a);

/// rank(a^0), rank(a^1), ... up to the first zero, or up to the first
/// repeated value when a is not nilpotent.
std::vector<std::size_t> rank_sequence(const IntMatrix& a);

/// Block sizes from the rank sequence: the number of blocks of size >= k
/// is rank(a^(k-1)) - rank(a^k). Throws NotNilpotent.
JordanType jordan_type(const IntMatrix& a);

/// Strictly upper triangular Jordan form of type lambda: blocks in
/// non-increasing size order along the diagonal, ones on the superdiagonal
/// inside each block.
IntMatrix jordan_block_matrix(const Partition& lambda);

}  // namespace nilc
