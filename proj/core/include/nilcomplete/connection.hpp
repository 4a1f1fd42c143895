#pragma once

#include <string>

#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/laurent_matrix.hpp"
#include "nilcomplete/partition.hpp"

namespace nilc {

/// The connection d + A(z) dz/z on the trivial rank-n bundle, slope r/n at 0.
struct ConnectionForm {
  int n = 0;
  LaurentMatrix coeff{1};
  int slope_num = 0;
  int slope_den = 1;
};

/// Homogeneous Coxeter connection with formal type omega^{-r} dz/z at 0
/// and residue of type lambda at infinity.
///   r < n: A = E_r z^{-1} + N_r + X with X from the completion engine.
///   r > n: A = omega^{-r} + J_lambda.
/// Throws NotCoprime, SumMismatch, or NoCompletionExists.
ConnectionForm emit(int n, int r, const Partition& lambda);

/// z^0 coefficient of the connection matrix.
IntMatrix residue(const ConnectionForm& c);

/// {"n":n,"slope":"r/n","coeff":{"n":n,"coeffs":{...}}}
std::string to_json(const ConnectionForm& c);

/// "d + (E_3 z^-1 + N_3 + X) dz/z" followed by X as triplets when r < n,
/// or by the full coefficient list otherwise.
std::string render_text(const ConnectionForm& c);

}  // namespace nilc
