#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "nilcomplete/integer.hpp"

namespace nilc {

/// One nonzero entry of a sparse matrix, with 1-based row and column.
struct Triplet {
  int row = 0;
  int col = 0;
  Integer value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Dense square matrix of exact integers. Element access is 0-based;
/// the text formats and triplets are 1-based.
class IntMatrix {
 public:
  /// Zero matrix of dimension n >= 1. Throws InvalidShape for n < 1.
  explicit IntMatrix(int n);

  static IntMatrix identity(int n);
  /// Builds a matrix from 1-based triplets. Throws InvalidShape if an index
  /// falls outside [1, n]; repeated positions are summed.
  static IntMatrix from_triplets(int n, const std::vector<Triplet>& entries);

  int dim() const noexcept { return n_; }

  Integer& operator()(int row, int col) { return data_[index(row, col)]; }
  const Integer& operator()(int row, int col) const { return data_[index(row, col)]; }

  bool is_zero() const;
  bool is_binary() const;
  bool is_strictly_upper_triangular() const;
  std::size_t nnz() const;

  IntMatrix transpose() const;
  IntMatrix pow(int k) const;

  /// Nonzero entries in row-major order, 1-based.
  std::vector<Triplet> triplets() const;

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator-(IntMatrix a);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(col);
  }

  int n_;
  std::vector<Integer> data_;
};

/// Ones on the r-th subdiagonal: entry (i+r, i) for 1 <= i <= n-r.
/// Throws InvalidShape unless 0 < r < n.
IntMatrix make_nr(int n, int r);

/// Ones on the (n-r)-th superdiagonal: entry (i, i+n-r) for 1 <= i <= r.
/// Throws InvalidShape unless 0 < r < n.
IntMatrix make_er(int n, int r);

/// Single one at the 1-based position (row, col).
IntMatrix unit_matrix(int n, int row, int col);

// Text formats.
//   dense:    n lines of n space separated integers
//   triplets: one "i j v" line per nonzero entry, 1-based

std::string to_dense_text(const IntMatrix& m);
std::string to_triplet_text(const std::vector<Triplet>& entries);
inline std::string to_triplet_text(const IntMatrix& m) { return to_triplet_text(m.triplets()); }

/// Throws ParseError on malformed or non-square input.
IntMatrix parse_dense(std::string_view text);
/// Throws ParseError on malformed lines and InvalidShape on indices outside [1, n].
IntMatrix parse_triplets(std::string_view text, int n);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace nilc
