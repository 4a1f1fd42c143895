#pragma once

#include <map>
#include <string>

#include "nilcomplete/int_matrix.hpp"

namespace nilc {

/// Finite Laurent polynomial in z with IntMatrix coefficients:
/// sum_k M_k z^k. Zero coefficients are never stored, so two equal
/// polynomials always compare equal.
class LaurentMatrix {
 public:
  explicit LaurentMatrix(int n);

  /// M z^exponent.
  static LaurentMatrix monomial(const IntMatrix& m, int exponent);

  int dim() const noexcept { return n_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of z^exponent (the zero matrix when absent).
  IntMatrix coeff(int exponent) const;
  const std::map<int, IntMatrix>& coeffs() const noexcept { return coeffs_; }

  /// Adds m to the coefficient of z^exponent. Throws DimMismatch.
  void add_term(int exponent, const IntMatrix& m);

  LaurentMatrix& operator+=(const LaurentMatrix& other);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  int n_;
  std::map<int, IntMatrix> coeffs_;
};

/// Cauchy product. Throws DimMismatch.
LaurentMatrix lmul(const LaurentMatrix& a, const LaurentMatrix& b);
inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) { return lmul(a, b); }

/// a^k for k >= 1. Throws InvalidShape for k < 1.
LaurentMatrix lpow(const LaurentMatrix& a, int k);

/// omega = sum_i e_{i,i+1} + z e_{n,1}.
LaurentMatrix omega(int n);
/// omega^{-1} = E_1 z^{-1} + N_1 (for n = 1 this is z^{-1}).
LaurentMatrix omega_inverse(int n);

/// {"n": n, "coeffs": {"-1": [[...]], "0": [[...]]}}
std::string to_json(const LaurentMatrix& m);

}  // namespace nilc
