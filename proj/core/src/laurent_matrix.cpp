#include "nilcomplete/laurent_matrix.hpp"

#include <string>

#include <json.hpp>

#include "nilcomplete/error.hpp"
#include "json_util.hpp"

namespace nilc {

LaurentMatrix::LaurentMatrix(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidShape, "matrix dimension must be >= 1");
}

LaurentMatrix LaurentMatrix::monomial(const IntMatrix& m, int exponent) {
  LaurentMatrix out(m.dim());
  out.add_term(exponent, m);
  return out;
}

IntMatrix LaurentMatrix::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? IntMatrix(n_) : it->second;
}

void LaurentMatrix::add_term(int exponent, const IntMatrix& m) {
  if (m.dim() != n_) {
    throw Error(ErrorKind::DimMismatch, "Laurent term of dimension " + std::to_string(m.dim()) +
                                            " added to dimension " + std::to_string(n_));
  }
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    if (!m.is_zero()) coeffs_.emplace(exponent, m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& other) {
  if (other.n_ != n_) {
    throw Error(ErrorKind::DimMismatch, "Laurent matrices of different dimensions");
  }
  for (const auto& [k, m] : other.coeffs_) add_term(k, m);
  return *this;
}

LaurentMatrix lmul(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "Laurent matrices of different dimensions: " +
                                            std::to_string(a.dim()) + " vs " +
                                            std::to_string(b.dim()));
  }
  LaurentMatrix out(a.dim());
  for (const auto& [i, ai] : a.coeffs())
    for (const auto& [j, bj] : b.coeffs()) out.add_term(i + j, ai * bj);
  return out;
}

LaurentMatrix lpow(const LaurentMatrix& a, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidShape, "lpow requires k >= 1");
  LaurentMatrix result = a;
  for (int i = 1; i < k; ++i) result = lmul(result, a);
  return result;
}

LaurentMatrix omega(int n) {
  IntMatrix super(n);
  for (int i = 0; i + 1 < n; ++i) super(i, i + 1) = 1;
  LaurentMatrix out = LaurentMatrix::monomial(super, 0);
  out.add_term(1, unit_matrix(n, n, 1));
  return out;
}

LaurentMatrix omega_inverse(int n) {
  IntMatrix sub(n);
  for (int i = 0; i + 1 < n; ++i) sub(i + 1, i) = 1;
  LaurentMatrix out = LaurentMatrix::monomial(unit_matrix(n, 1, n), -1);
  out.add_term(0, sub);
  return out;
}

std::string to_json(const LaurentMatrix& m) { return detail::laurent_json(m).dump(); }

}  // namespace nilc
