#include "nilcomplete/jordan.hpp"

#include <optional>
#include <utility>

#include "nilcomplete/error.hpp"

namespace nilc {

namespace {

using Wide = __int128;

// Exact arithmetic policies for the elimination. The wide policy reports
// overflow instead of wrapping; the GMP policy never fails.
struct WideOps {
  using Value = Wide;
  static bool mul(Wide a, Wide b, Wide& out) { return !__builtin_mul_overflow(a, b, &out); }
  static bool sub(Wide a, Wide b, Wide& out) { return !__builtin_sub_overflow(a, b, &out); }
  static bool add(Wide a, Wide b, Wide& out) { return !__builtin_add_overflow(a, b, &out); }
  static bool is_zero(Wide a) { return a == 0; }
};

struct BigOps {
  using Value = Integer;
  static bool mul(const Integer& a, const Integer& b, Integer& out) {
    out = a * b;
    return true;
  }
  static bool sub(const Integer& a, const Integer& b, Integer& out) {
    out = a - b;
    return true;
  }
  static bool add(const Integer& a, const Integer& b, Integer& out) {
    out = a + b;
    return true;
  }
  static bool is_zero(const Integer& a) { return a == 0; }
};

template <class Ops>
using Dense = std::vector<typename Ops::Value>;

// Fraction-free elimination with row pivoting; divisions are exact.
// Returns nullopt on overflow.
template <class Ops>
std::optional<std::size_t> bareiss_rank(Dense<Ops> a, int n) {
  using V = typename Ops::Value;
  auto at = [&](int i, int j) -> V& { return a[static_cast<std::size_t>(i * n + j)]; };
  std::size_t rank = 0;
  V previous = 1;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pivot = row;
    while (pivot < n && Ops::is_zero(at(pivot, col))) ++pivot;
    if (pivot == n) continue;
    if (pivot != row)
      for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(row, j));
    const V p = at(row, col);
    for (int i = row + 1; i < n; ++i) {
      const V f = at(i, col);
      for (int j = col + 1; j < n; ++j) {
        V x, y, d;
        if (!Ops::mul(p, at(i, j), x) || !Ops::mul(f, at(row, j), y) || !Ops::sub(x, y, d))
          return std::nullopt;
        at(i, j) = d / previous;
      }
      at(i, col) = 0;
    }
    previous = p;
    ++row;
    ++rank;
  }
  return rank;
}

template <class Ops>
std::optional<Dense<Ops>> multiply(const Dense<Ops>& a, const Dense<Ops>& b, int n) {
  using V = typename Ops::Value;
  Dense<Ops> c(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), V(0));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      const V& ail = a[static_cast<std::size_t>(i * n + l)];
      if (Ops::is_zero(ail)) continue;
      for (int j = 0; j < n; ++j) {
        const V& blj = b[static_cast<std::size_t>(l * n + j)];
        if (Ops::is_zero(blj)) continue;
        V prod, sum;
        if (!Ops::mul(ail, blj, prod)) return std::nullopt;
        V& cij = c[static_cast<std::size_t>(i * n + j)];
        if (!Ops::add(cij, prod, sum)) return std::nullopt;
        cij = sum;
      }
    }
  }
  return c;
}

template <class Ops>
std::optional<std::vector<std::size_t>> ranks_of_powers(const Dense<Ops>& a, int n) {
  std::vector<std::size_t> ranks{static_cast<std::size_t>(n)};
  Dense<Ops> power = a;
  while (true) {
    auto rk = bareiss_rank<Ops>(power, n);
    if (!rk) return std::nullopt;
    if (*rk == ranks.back()) return ranks;  // stabilized: not nilpotent
    ranks.push_back(*rk);
    if (*rk == 0) return ranks;
    auto next = multiply<Ops>(power, a, n);
    if (!next) return std::nullopt;
    power = std::move(*next);
  }
}

std::optional<Dense<WideOps>> to_wide(const IntMatrix& m) {
  Dense<WideOps> out;
  out.reserve(static_cast<std::size_t>(m.dim()) * static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      auto v = to_int64(m(i, j));
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
  }
  return out;
}

Dense<BigOps> to_big(const IntMatrix& m) {
  Dense<BigOps> out;
  out.reserve(static_cast<std::size_t>(m.dim()) * static_cast<std::size_t>(m.dim()));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

std::size_t exact_rank(const IntMatrix& a) {
  if (auto wide = to_wide(a)) {
    if (auto rk = bareiss_rank<WideOps>(std::move(*wide), a.dim())) return *rk;
  }
  return *bareiss_rank<BigOps>(to_big(a), a.dim());
}

bool is_nilpotent(const IntMatrix& a) {
  IntMatrix power = a;
  for (int k = 1; k < a.dim(); ++k) {
    if (power.is_zero()) return true;
    power = power * a;
  }
  return power.is_zero();
}

std::vector<std::size_t> rank_sequence(const IntMatrix& a) {
  if (auto wide = to_wide(a)) {
    if (auto ranks = ranks_of_powers<WideOps>(*wide, a.dim())) return *ranks;
  }
  return *ranks_of_powers<BigOps>(to_big(a), a.dim());
}

JordanType jordan_type(const IntMatrix& a) {
  const auto ranks = rank_sequence(a);
  if (ranks.back() != 0) {
    throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent (rank of powers stabilizes at " +
                                             std::to_string(ranks.back()) + ")");
  }
  // at_least[k] = number of blocks of size >= k = ranks[k-1] - ranks[k].
  std::vector<int> parts;
  const std::size_t index = ranks.size() - 1;
  for (std::size_t k = 1; k <= index; ++k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t longer = k < index ? ranks[k] - ranks[k + 1] : 0;
    parts.insert(parts.end(), at_least - longer, static_cast<int>(k));
  }
  return {Partition::normalize(parts)};
}

IntMatrix jordan_block_matrix(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorKind::InvalidShape, "empty partition has no Jordan form");
  IntMatrix j(static_cast<int>(lambda.sum()));
  int offset = 0;
  for (int size : lambda.parts()) {
    for (int i = 0; i + 1 < size; ++i) j(offset + i, offset + i + 1) = 1;
    offset += size;
  }
  return j;
}

}  // namespace nilc
