#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcomplete/error.hpp"
#include "nilcomplete/gln_graph.hpp"
#include "nilcomplete/int_matrix.hpp"
#include "nilcomplete/partition.hpp"

namespace nilc {

enum class LoopTag { Loop1, Loop2, Little };

enum class CaseTag { C1a, C1b, C1c, C1d, C2a, C2b, C2c, C2d, Little };

std::string_view to_string(LoopTag tag);
std::string_view to_string(CaseTag tag);

struct GraftParams {
  int scion = 0;
  int stock = 0;
  int count = 0;

  friend bool operator==(const GraftParams&, const GraftParams&) = default;
};

/// One record per graft, emitted after the graft and the pointer updates
/// that accompany it. The last record of a primary iteration also reflects
/// the multiset updates of that iteration.
struct TraceRecord {
  int k = 0;
  LoopTag loop = LoopTag::Loop1;
  CaseTag kase = CaseTag::C1a;
  GraftParams graft;
  Partition long_parts;
  Partition short_parts;
  int scion = 0;
  int stock = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// {"k":..,"loop":..,"case":..,"graft":{"t":..,"s":..,"m":..},"L":[..],"S":[..],"t":..,"s_ptr":..}
std::string to_json_line(const TraceRecord& record);

/// Mutable state of the completion algorithm.
///
/// `scion` and `stock` are the column pointers (t and s), `long_parts` and
/// `short_parts` the multisets of parts still to be produced that are longer
/// (resp. shorter) than the columns of N_r's graph. `end` is fixed at
/// initialization and only consulted by the invariant checks.
struct EngineState {
  int n = 0;
  int r = 0;
  int rprime = 0;
  Partition lambda;
  GlnGraph graph{std::vector<Point>{{1, 1}}};
  int scion = 0;
  int stock = 0;
  Partition long_parts;
  Partition short_parts;
  int end = 0;
  /// Set when case 2b takes the last vertex of the column that becomes the
  /// new scion (only possible when floor(n/r) = 1). The scion then has
  /// height 0 until the next instruction translates a whole column onto it.
  bool scion_empty = false;
  /// Completed primary-loop iterations.
  int k = 0;
  std::size_t grafts = 0;
  std::size_t translations = 0;
  std::size_t little_iterations = 0;

  bool finished() const noexcept { return long_parts.empty() && short_parts.empty(); }
  int floor_height() const noexcept { return n / r; }
  int ceil_height() const noexcept { return (n + r - 1) / r; }
};

/// Propositions checked at iteration boundaries (P1..P10) and inside the
/// Little Loop (LP3..LP8).
enum class Invariant { P1, P2, P3, P4, P5, P6, P7, P8, P9, P10, LP3, LP4, LP5, LP6, LP7, LP8 };

std::string_view to_string(Invariant which);
/// "P7" -> Invariant::P7. Throws UnknownInvariant.
Invariant parse_invariant(std::string_view name);

inline constexpr Invariant kIterationInvariants[] = {
    Invariant::P2, Invariant::P3, Invariant::P4, Invariant::P5, Invariant::P6,
    Invariant::P7, Invariant::P8, Invariant::P9, Invariant::P10};
inline constexpr Invariant kLittleLoopInvariants[] = {
    Invariant::LP3, Invariant::LP4, Invariant::LP5, Invariant::LP6, Invariant::LP7, Invariant::LP8};

/// The part of an earlier state that P2, P3 and LP3 compare against.
struct Snapshot {
  ArrowMap arrows;
  Partition long_parts;
  Partition short_parts;
  int scion_height = 0;
};

Snapshot snapshot(const EngineState& state);

class InvariantViolation : public Error {
 public:
  InvariantViolation(Invariant which, int k, const std::string& message)
      : Error(ErrorKind::InvariantViolation, message), which_(which), k_(k) {}
  Invariant which() const noexcept { return which_; }
  int iteration() const noexcept { return k_; }

 private:
  Invariant which_;
  int k_;
};

/// Evaluates one proposition on `state`. P2, P3 and LP3 need the state
/// before the step and hold vacuously without it. P1 (well-definedness) is
/// witnessed by the absence of exceptions, so it is always true here.
/// Little-Loop propositions read the state between Little-Loop iterations:
/// the scion is fixed and `long_parts` still holds max(L).
bool check_invariant(const EngineState& state, Invariant which,
                     const Snapshot* previous = nullptr);

/// Lines 1-9: canonical graph of N_r, pointers, and the long/short multisets.
/// Throws InvalidShape, SumMismatch, or NoCompletionExists (|lambda| > r).
EngineState initialize(int n, int r, const Partition& lambda);

struct StepOptions {
  bool check_invariants = false;
};

/// One iteration of Loop 1. Requires short_parts nonempty.
TraceRecord step_loop1(EngineState& state, const StepOptions& options = {});

/// One iteration of Loop 2: the Little Loop to exhaustion, one of cases
/// 2a-2d, then removal of max(L). Requires short_parts empty and
/// long_parts nonempty.
std::vector<TraceRecord> step_loop2(EngineState& state, const StepOptions& options = {});

struct RunOptions {
  bool check_invariants = false;
  bool trace = false;
};

struct Completion {
  int n = 0;
  int r = 0;
  /// X = matrix(final graph) - N_r, nonzero entries only.
  std::vector<Triplet> x;
  GlnGraph graph{std::vector<Point>{{1, 1}}};
  std::vector<TraceRecord> trace;
  /// Grafts that added an arrow; each adds exactly one entry to X.
  std::size_t grafts = 0;
  /// Whole-column moves onto an emptied scion (no arrow, X unchanged).
  std::size_t translations = 0;
  std::size_t little_iterations = 0;
  int iterations = 0;

  IntMatrix dense_x() const { return IntMatrix::from_triplets(n, x); }
};

/// Runs the completion end to end: N_r + X is binary, nilpotent of type
/// lambda, with X strictly upper triangular. Throws NoCompletionExists when
/// |lambda| > r, and InvariantViolation when checking is enabled (by the
/// option or NILCOMPLETE_CHECK=1) and a proposition fails.
Completion run(int n, int r, const Partition& lambda, const RunOptions& options = {});

/// True when NILCOMPLETE_CHECK=1 is set in the environment.
bool checks_forced_by_environment();

}  // namespace nilc
