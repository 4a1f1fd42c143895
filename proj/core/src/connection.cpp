#include "nilcomplete/connection.hpp"

#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "nilcomplete/engine.hpp"
#include "nilcomplete/error.hpp"
#include "nilcomplete/jordan.hpp"

namespace nilc {

ConnectionForm emit(int n, int r, const Partition& lambda) {
  if (n < 1 || r < 1) {
    throw Error(ErrorKind::InvalidShape, "connection requires n >= 1 and r >= 1");
  }
  if (std::gcd(n, r) != 1) {
    throw Error(ErrorKind::NotCoprime, "slope " + std::to_string(r) + "/" + std::to_string(n) +
                                           " is not in lowest terms");
  }
  if (lambda.sum() != n) {
    throw Error(ErrorKind::SumMismatch, "lambda=" + lambda.to_string() + " is not a partition of " +
                                            std::to_string(n));
  }

  ConnectionForm c;
  c.n = n;
  c.slope_num = r;
  c.slope_den = n;
  c.coeff = lpow(omega_inverse(n), r);
  if (r < n) {
    const Completion completion = run(n, r, lambda);
    c.coeff.add_term(0, completion.dense_x());
  } else {
    c.coeff.add_term(0, jordan_block_matrix(lambda));
  }
  return c;
}

IntMatrix residue(const ConnectionForm& c) { return c.coeff.coeff(0); }

std::string to_json(const ConnectionForm& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["slope"] = std::to_string(c.slope_num) + "/" + std::to_string(c.slope_den);
  j["coeff"] = detail::laurent_json(c.coeff);
  return j.dump();
}

std::string render_text(const ConnectionForm& c) {
  std::ostringstream os;
  const int n = c.n;
  const int r = c.slope_num;
  if (r < n) {
    IntMatrix x = residue(c) - make_nr(n, r);
    os << "d + (E_" << r << " z^-1 + N_" << r << " + X) dz/z\n";
    os << "X (i j v):\n" << to_triplet_text(x);
    return os.str();
  }
  os << "d + (omega^-" << r << " + J) dz/z\n";
  for (const auto& [k, m] : c.coeff.coeffs()) {
    os << "z^" << k << " (i j v):\n" << to_triplet_text(m);
  }
  return os.str();
}

}  // namespace nilc
