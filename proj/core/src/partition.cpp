#include "nilcomplete/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "nilcomplete/error.hpp"

namespace nilc {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(normalize(std::span<const int>(parts.begin(), parts.size()))) {}

Partition Partition::normalize(std::span<const int> raw) {
  Partition p;
  for (int v : raw) {
    if (v <= 0) {
      throw Error(ErrorKind::InvalidPart,
                  "partition parts must be positive, got " + std::to_string(v));
    }
    p.add(v, 1);
  }
  return p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> raw;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                          s.back() == '\r'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return {};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "malformed partition part '" + std::string(token) + "'");
    }
    raw.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return normalize(raw);
}

Partition Partition::repeated(int value, int count) {
  Partition p;
  if (count <= 0) return p;
  if (value <= 0) {
    throw Error(ErrorKind::InvalidPart,
                "partition parts must be positive, got " + std::to_string(value));
  }
  p.add(value, count);
  return p;
}

void Partition::add(int value, int count) {
  mult_[value] += count;
  size_ += count;
  sum_ += static_cast<std::int64_t>(value) * count;
}

int Partition::multiplicity(int value) const {
  auto it = mult_.find(value);
  return it == mult_.end() ? 0 : it->second;
}

std::vector<int> Partition::support() const {
  std::vector<int> out;
  out.reserve(mult_.size());
  for (const auto& [value, count] : mult_) out.push_back(value);
  return out;
}

int Partition::max() const {
  if (mult_.empty()) throw Error(ErrorKind::EmptyMultiset, "max of an empty multiset");
  return mult_.begin()->first;
}

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const auto& [value, count] : mult_) out.insert(out.end(), count, value);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int v : parts()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os.str();
}

Partition msum(const Partition& a, const Partition& b) {
  Partition out = a;
  for (const auto& [value, count] : b.mult_) out.add(value, count);
  return out;
}

Partition mdiff(const Partition& a, const Partition& b) {
  Partition out;
  for (const auto& [value, count] : a.mult_) {
    int keep = count - b.multiplicity(value);
    if (keep > 0) out.add(value, keep);
  }
  return out;
}

int mmax(const Partition& a) { return a.max(); }

bool dominates(const Partition& lam, const Partition& mu) {
  if (lam.sum() != mu.sum()) {
    throw Error(ErrorKind::SumMismatch, "dominance compares partitions of different integers (" +
                                            std::to_string(lam.sum()) + " vs " +
                                            std::to_string(mu.sum()) + ")");
  }
  if (lam.size() > mu.size()) return false;
  auto lp = lam.parts();
  auto mp = mu.parts();
  std::int64_t ls = 0;
  std::int64_t ms = 0;
  for (std::size_t j = 0; j < lp.size(); ++j) {
    ls += lp[j];
    ms += mp[j];
    if (ls < ms) return false;
  }
  return true;
}

Partition nr_type(int n, int r) {
  if (r <= 0 || r >= n) {
    throw Error(ErrorKind::InvalidShape, "N_r requires 0 < r < n, got n=" + std::to_string(n) +
                                             " r=" + std::to_string(r));
  }
  int rprime = n % r;
  return Partition::repeated((n + r - 1) / r, rprime) + Partition::repeated(n / r, r - rprime);
}

void for_each_partition(int n, int max_parts,
                        const std::function<void(const Partition&)>& visit) {
  if (n <= 0) return;
  // Descending lexicographic generation on the part sequence.
  std::vector<int> parts{n};
  while (true) {
    if (max_parts <= 0 || static_cast<int>(parts.size()) <= max_parts) {
      visit(Partition::normalize(parts));
    }
    // Drop trailing ones, then decrement the last part > 1 and refill.
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) return;
    int v = --parts.back();
    int rest = ones + 1;
    while (rest > 0) {
      int take = std::min(v, rest);
      parts.push_back(take);
      rest -= take;
    }
  }
}

std::vector<Partition> partitions_of(int n, int max_parts) {
  std::vector<Partition> out;
  for_each_partition(n, max_parts, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace nilc
