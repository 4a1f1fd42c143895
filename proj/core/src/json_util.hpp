#pragma once

// Private to the core library: keeps nlohmann out of the public headers.

#include <json.hpp>

#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/laurent_matrix.hpp"
#include "nilcomplete/partition.hpp"

namespace nilc::detail {

inline nlohmann::ordered_json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

inline nlohmann::ordered_json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::ordered_json laurent_json(const LaurentMatrix& m) {
  auto coeffs = nlohmann::ordered_json::object();
  for (const auto& [k, c] : m.coeffs()) coeffs[std::to_string(k)] = matrix_json(c);
  return {{"n", m.dim()}, {"coeffs", std::move(coeffs)}};
}

inline nlohmann::ordered_json partition_json(const Partition& p) { return p.parts(); }

}  // namespace nilc::detail
