#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace nilc {

/// Exact integer used for every matrix entry and arrow weight.
using Integer = mpz_class;

inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace nilc
