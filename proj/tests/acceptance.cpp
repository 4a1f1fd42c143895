// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nilcomplete/nilcomplete.hpp"
#include "support/graft_lemma.hpp"

using nilc::IntMatrix;
using nilc::Partition;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs_text(double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", secs);
  return buf;
}

std::string instance_name(int n, int r, const Partition& lam) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r) + " lambda=" + lam.to_string();
}

// Runs `check` on every (n, r, lambda) with 0 < r < n <= max_n and at most
// r parts, over `threads` workers. Returns the instance count and the first
// failure in enumeration order.
struct Sweep {
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

Sweep sweep(int max_n, unsigned threads,
            const std::function<std::string(int, int, const Partition&)>& check) {
  std::vector<std::pair<int, int>> shapes;
  for (int n = max_n; n >= 2; --n)
    for (int r = 1; r < n; ++r) shapes.emplace_back(n, r);
  std::atomic<std::size_t> next{0}, instances{0};
  std::mutex mu;
  std::vector<std::string> failures;
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      const auto [n, r] = shapes[i];
      nilc::for_each_partition(n, r, [&](const Partition& lam) {
        ++instances;
        std::string why;
        try {
          why = check(n, r, lam);
        } catch (const std::exception& e) {
          why = e.what();
        }
        if (!why.empty()) {
          std::lock_guard lock(mu);
          failures.push_back(instance_name(n, r, lam) + ": " + why);
        }
      });
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < std::max(1u, threads); ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::sort(failures.begin(), failures.end());
  return {instances.load(), failures.size(), failures.empty() ? "" : failures.front()};
}

std::string oracle_check(int n, int r, const Partition& lam) {
  const auto c = nilc::run(n, r, lam);
  const IntMatrix x = c.dense_x();
  if (!x.is_binary()) return "X not binary";
  if (!x.is_strictly_upper_triangular()) return "X not strictly upper triangular";
  const Partition got = nilc::jordan_type(nilc::make_nr(n, r) + x).partition;
  if (got != lam) return "type " + got.to_string();
  return {};
}

Outcome oracle_sweep(int max_n, unsigned threads, double budget) {
  const auto start = Clock::now();
  const Sweep s = sweep(max_n, threads, oracle_check);
  const double secs = seconds_since(start);
  Outcome o;
  o.pass = s.failures == 0 && secs < budget;
  o.detail = std::to_string(s.instances) + " instances, " + std::to_string(s.failures) +
             " failures, " + secs_text(secs) + " of " + secs_text(budget) + " budget";
  if (!s.first_failure.empty()) o.detail += "; first: " + s.first_failure;
  return o;
}

Outcome criterion_1() { return oracle_sweep(20, 1, 60.0); }

Outcome criterion_2() {
  return oracle_sweep(30, std::max(1u, std::thread::hardware_concurrency()), 15 * 60.0);
}

Outcome criterion_3() {
  // run() asserts P2-P10 after every iteration and the Little-Loop
  // propositions after every Little-Loop iteration when checking is on.
  const Sweep s = sweep(20, 1, [](int n, int r, const Partition& lam) -> std::string {
    nilc::run(n, r, lam, {.check_invariants = true});
    return {};
  });
  return {s.failures == 0, std::to_string(s.instances) + " checked runs, " +
                               std::to_string(s.failures) + " violations" +
                               (s.first_failure.empty() ? "" : "; first: " + s.first_failure)};
}

Outcome criterion_4() {
  std::mt19937_64 rng(20240611);
  graft_lemma::Tally tally;
  std::string failure;
  while (tally.checked < 2000 && failure.empty()) {
    auto in = graft_lemma::random_input(rng);
    if (!in || !nilc::is_properly_downward(in->g)) continue;
    failure = graft_lemma::check(*in, tally);
  }
  Outcome o;
  o.pass = failure.empty() && tally.checked >= 1000 && tally.single_entry_cases > 0;
  o.detail = std::to_string(tally.checked) + " grafts, part 5 hypothesis " +
             std::to_string(tally.properly_downward_cases) + " times, part 6 hypothesis " +
             std::to_string(tally.single_entry_cases) + " times";
  if (!failure.empty()) o.detail += "; " + failure;
  return o;
}

Outcome criterion_5() {
  const nilc::GlnGraph before = nilc::canonical_nr_graph(10, 3);
  const nilc::GlnGraph after = nilc::graft(before, 2, 3, 2);
  const bool arrow = after.has_arrow(4, 3) && !before.has_arrow(4, 3);
  const bool matrix =
      nilc::matrix_of_graph(after) == nilc::make_nr(10, 3) + nilc::unit_matrix(10, 3, 4);
  const bool parts = nilc::heights(after) == Partition{5, 3, 2};
  return {arrow && matrix && parts, std::string("arrow 4->3 ") + (arrow ? "added" : "missing") +
                                        ", matrix N_3 + e_{3,4} " + (matrix ? "yes" : "no") +
                                        ", heights " + nilc::heights(after).to_string()};
}

Outcome criterion_6() {
  int checked = 0;
  std::string failure;
  for (int n = 2; n <= 12 && failure.empty(); ++n) {
    const auto w = nilc::omega_inverse(n);
    for (int r = 1; r < n; ++r) {
      nilc::LaurentMatrix expect = nilc::LaurentMatrix::monomial(nilc::make_er(n, r), -1);
      expect.add_term(0, nilc::make_nr(n, r));
      ++checked;
      if (nilc::lpow(w, r) != expect) {
        failure = "r=" + std::to_string(r) + " n=" + std::to_string(n);
        break;
      }
    }
    ++checked;
    if (nilc::lpow(w, n) != nilc::LaurentMatrix::monomial(IntMatrix::identity(n), -1))
      failure = "power n, n=" + std::to_string(n);
  }
  return {failure.empty(), std::to_string(checked) + " identities" +
                               (failure.empty() ? "" : "; failed at " + failure)};
}

Outcome criterion_7() {
  std::size_t checked = 0;
  std::string failure;
  for (int n = 2; n <= 20; ++n) {
    const auto all = nilc::partitions_of(n);
    for (int r = 1; r < n; ++r) {
      const Partition mu = nilc::nr_type(n, r);
      for (const auto& lam : all) {
        ++checked;
        if (nilc::dominates(lam, mu) != (lam.size() <= r) && failure.empty())
          failure = instance_name(n, r, lam);
      }
    }
  }
  return {failure.empty(), std::to_string(checked) + " pairs" +
                               (failure.empty() ? "" : "; mismatch at " + failure)};
}

Outcome criterion_8() {
  int checked = 0;
  std::string failure;
  for (int n = 2; n <= 20; ++n)
    for (int r = 1; r < n; ++r) {
      const auto c = nilc::run(n, r, nilc::nr_type(n, r), {.trace = true});
      ++checked;
      if ((!c.x.empty() || !c.trace.empty()) && failure.empty()) failure = "n=" + std::to_string(n) + " r=" + std::to_string(r);
    }
  return {failure.empty(), std::to_string(checked) + " shapes with X = 0 and empty trace" +
                               (failure.empty() ? "" : "; nonzero at " + failure)};
}

// Uniform random partition of n (Nijenhuis-Wilf), restricted to at most
// max_parts parts by rejection.
Partition uniform_partition(std::mt19937_64& rng, int n, int max_parts) {
  std::vector<long double> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  std::uniform_real_distribution<long double> u(0, 1);
  for (;;) {
    std::vector<int> parts;
    int m = n;
    while (m > 0) {
      const long double target = u(rng) * m * p[m];
      long double acc = 0;
      int d_pick = 1, j_pick = m;
      bool found = false;
      for (int d = 1; d <= m && !found; ++d)
        for (int j = 1; j * d <= m; ++j) {
          acc += d * p[m - j * d];
          if (acc >= target) {
            d_pick = d, j_pick = j, found = true;
            break;
          }
        }
      parts.insert(parts.end(), j_pick, d_pick);
      m -= j_pick * d_pick;
    }
    if (static_cast<int>(parts.size()) <= max_parts) return Partition::normalize(parts);
  }
}

Outcome criterion_9() {
  const int n = 5000, r = 2499;
  std::mt19937_64 rng(5000);
  const Partition lam = uniform_partition(rng, n, r);
  const auto start = Clock::now();
  const auto c = nilc::run(n, r, lam, {.trace = true});
  const double secs = seconds_since(start);

  std::size_t second_grafts = 0;  // case 2b's extra one-vertex graft
  for (std::size_t i = 1; i < c.trace.size(); ++i)
    if (c.trace[i].kase == nilc::CaseTag::C2b && c.trace[i - 1].kase == nilc::CaseTag::C2b &&
        c.trace[i].k == c.trace[i - 1].k)
      ++second_grafts;
  const std::size_t graft_count = c.trace.size();
  const std::size_t bound = static_cast<std::size_t>(lam.size()) + c.little_iterations;
  const bool fast = secs < 1.0;
  const bool bounded = graft_count <= bound;

  Outcome o;
  o.pass = fast && bounded;
  o.detail = std::to_string(lam.size()) + " parts, " + secs_text(secs) + ", " +
             std::to_string(graft_count) + " grafts vs bound |lambda| + little = " +
             std::to_string(lam.size()) + " + " + std::to_string(c.little_iterations) + " = " +
             std::to_string(bound);
  if (!bounded) {
    o.detail += "; exceeded by " + std::to_string(graft_count - bound) + ", case 2b second grafts " +
                std::to_string(second_grafts) + " (bound + those = " +
                std::to_string(bound + second_grafts) + ")";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"1 exhaustive oracle equivalence, n <= 20", criterion_1},
      {"2 exhaustive oracle equivalence, n <= 30", criterion_2},
      {"3 invariant suite, n <= 20", criterion_3},
      {"4 graft lemma property tests", criterion_4},
      {"5 graft of 2 vertices from column 3 to 2 on N_3 in gl_10", criterion_5},
      {"6 Laurent power identities, n <= 12", criterion_6},
      {"7 dominance criterion, n <= 20", criterion_7},
      {"8 zero completion, n <= 20", criterion_8},
      {"9 performance n = 5000, r = 2499", criterion_9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %s: %s (%s)\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
