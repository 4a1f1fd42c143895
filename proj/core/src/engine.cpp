#include "nilcomplete/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <set>
#include <tuple>

#include "json_util.hpp"

namespace nilc {

std::string_view to_string(LoopTag tag) {
  switch (tag) {
    case LoopTag::Loop1: return "loop1";
    case LoopTag::Loop2: return "loop2";
    case LoopTag::Little: return "little";
  }
  return "unknown";
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::C1a: return "1a";
    case CaseTag::C1b: return "1b";
    case CaseTag::C1c: return "1c";
    case CaseTag::C1d: return "1d";
    case CaseTag::C2a: return "2a";
    case CaseTag::C2b: return "2b";
    case CaseTag::C2c: return "2c";
    case CaseTag::C2d: return "2d";
    case CaseTag::Little: return "little";
  }
  return "unknown";
}

std::string to_json_line(const TraceRecord& record) {
  nlohmann::ordered_json j;
  j["k"] = record.k;
  j["loop"] = to_string(record.loop);
  j["case"] = to_string(record.kase);
  j["graft"] = {{"t", record.graft.scion}, {"s", record.graft.stock}, {"m", record.graft.count}};
  j["L"] = detail::partition_json(record.long_parts);
  j["S"] = detail::partition_json(record.short_parts);
  j["t"] = record.scion;
  j["s_ptr"] = record.stock;
  return j.dump();
}

namespace {

constexpr std::string_view kInvariantNames[] = {"P1",  "P2",  "P3",  "P4",  "P5",  "P6",
                                                "P7",  "P8",  "P9",  "P10", "LP3", "LP4",
                                                "LP5", "LP6", "LP7", "LP8"};

Partition remove_max(const Partition& p) { return p - Partition{p.max()}; }

// matrix(current) - matrix(previous) is strictly upper triangular: every
// changed entry sits at (ord target, ord source) with target < source.
bool delta_strictly_upper(const ArrowMap& previous, const ArrowMap& current) {
  auto changed_ok = [](const ArrowKey& key) { return key.second < key.first; };
  for (const auto& [key, w] : current) {
    auto it = previous.find(key);
    if ((it == previous.end() || it->second != w) && !changed_ok(key)) return false;
  }
  for (const auto& [key, w] : previous) {
    if (!current.contains(key) && !changed_ok(key)) return false;
  }
  return true;
}

bool is_submultiset(const Partition& a, const Partition& b) { return (a - b).empty(); }

// Heights of the columns outside [stock, end] other than the scion. Once L
// and S are both exhausted the scion is retired and its column counts.
Partition bookkept_heights(const EngineState& st) {
  const bool scion_active = !st.long_parts.empty() || !st.short_parts.empty();
  std::vector<int> hs;
  for (int x : st.graph.domain()) {
    if (x >= st.stock && x <= st.end) continue;
    if (scion_active && x == st.scion) continue;
    hs.push_back(st.graph.height(x));
  }
  return Partition::normalize(hs);
}

std::optional<int> ord_at(const GlnGraph& g, int x, int y) { return g.ordinal_at({x, y}); }

// Conditions (1)-(4) on the window [stock, end] plus type-writer order of
// its vertices; `below_long` is the bound of condition (5) for long parts.
bool window_ok(const EngineState& st, const Partition& short_parts, const Partition& long_parts) {
  const auto& g = st.graph;
  std::vector<int> vertices;
  int previous_height = 0;
  for (int i = st.stock; i <= st.end; ++i) {
    if (!g.in_domain(i)) return false;
    if (!is_downward_path(g, i)) return false;
    const int h = g.height(i);
    if (h != st.floor_height() && h != st.ceil_height()) return false;
    if (h < previous_height) return false;
    previous_height = h;
    if (!short_parts.empty() && h <= short_parts.max()) return false;
    if (!long_parts.empty() && h >= long_parts.max()) return false;
    for (int ord : g.column(i)) vertices.push_back(ord);
  }
  return is_typewriter_ordered(g, vertices);
}

// ord(t, h_t) < ord(s, max{1, h_s - (bound - h_t) + 1})
// Vacuous for an emptied scion: the next graft onto it adds no arrow.
bool scion_top_precedes(const EngineState& st, int bound) {
  const auto& g = st.graph;
  if (st.scion_empty) return st.scion < st.stock && g.in_domain(st.stock);
  if (!g.in_domain(st.scion) || !g.in_domain(st.stock)) return false;
  const int ht = g.height(st.scion);
  const int level = std::max(1, g.height(st.stock) - (bound - ht) + 1);
  auto top = ord_at(g, st.scion, ht);
  auto other = ord_at(g, st.stock, level);
  return top && other && *top < *other;
}

void check_all(const EngineState& st, std::span<const Invariant> which, const Snapshot* previous,
               int k) {
  for (Invariant p : which) {
    if (!check_invariant(st, p, previous)) {
      throw InvariantViolation(p, k,
                               "invariant " + std::string(to_string(p)) + " violated at iteration " +
                                   std::to_string(k) + " (n=" + std::to_string(st.n) +
                                   ", r=" + std::to_string(st.r) +
                                   ", lambda=" + st.lambda.to_string() + ")");
    }
  }
}

class Stepper {
 public:
  Stepper(EngineState& st, const StepOptions& options) : st_(st), options_(options) {}

  int h(int x) const {
    if (x == st_.scion && st_.scion_empty) return 0;
    return st_.graph.height(x);
  }

  // An empty scion has no top vertex to attach to, so grafting onto it is
  // the translation of Step 2 alone; only whole columns keep the graph
  // downward there.
  void graft(int m, int from) {
    if (st_.scion_empty) {
      if (m != st_.graph.height(from)) {
        throw GraftError(GraftClause::PositionNotInDomain,
                         "partial graft onto the empty column " + std::to_string(st_.scion));
      }
      st_.graph = translate_column(std::move(st_.graph), from, st_.scion);
      st_.scion_empty = false;
      ++st_.translations;
    } else {
      st_.graph = nilc::graft(std::move(st_.graph), st_.scion, from, m,
                              options_.check_invariants ? GraftCheck::Full : GraftCheck::Local);
      ++st_.grafts;
    }
    last_ = {st_.scion, from, m};
  }

  TraceRecord record(LoopTag loop, CaseTag kase) const {
    return {st_.k + 1, loop, kase, last_, st_.long_parts, st_.short_parts, st_.scion, st_.stock};
  }

 private:
  EngineState& st_;
  const StepOptions& options_;
  GraftParams last_;
};

}  // namespace

std::string_view to_string(Invariant which) {
  return kInvariantNames[static_cast<std::size_t>(which)];
}

Invariant parse_invariant(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kInvariantNames); ++i) {
    if (kInvariantNames[i] == name) return static_cast<Invariant>(i);
  }
  throw Error(ErrorKind::UnknownInvariant, "unknown invariant '" + std::string(name) + "'");
}

Snapshot snapshot(const EngineState& state) {
  Snapshot snap{state.graph.arrows(), state.long_parts, state.short_parts, 0};
  if (state.graph.in_domain(state.scion)) snap.scion_height = state.graph.height(state.scion);
  return snap;
}

bool check_invariant(const EngineState& st, Invariant which, const Snapshot* previous) {
  const auto& g = st.graph;
  const auto& L = st.long_parts;
  const auto& S = st.short_parts;
  switch (which) {
    case Invariant::P1:
      return true;
    case Invariant::P2:
      return previous == nullptr || delta_strictly_upper(previous->arrows, g.arrows());
    case Invariant::P3:
      if (previous == nullptr) return true;
      return is_submultiset(S, previous->short_parts) && is_submultiset(L, previous->long_parts) &&
             (S != previous->short_parts || L != previous->long_parts);
    case Invariant::P4:
    case Invariant::LP4:
      return is_properly_downward(g);
    case Invariant::P5:
      return bookkept_heights(st) == st.lambda - (L + S);
    case Invariant::LP5:
      return bookkept_heights(st) == st.lambda - L;
    case Invariant::P6:
      return window_ok(st, S, L);
    case Invariant::LP6:
      return window_ok(st, Partition{}, L.empty() ? L : remove_max(L));
    case Invariant::P7:
      if (st.scion >= st.stock) return false;
      if (L.empty()) return true;
      return (st.scion_empty || g.in_domain(st.scion)) && g.in_domain(st.stock) &&
             st.stock <= st.end;
    case Invariant::LP7:
      if (L.empty()) return false;
      if (st.scion_empty) return st.stock <= st.end;
      if (!g.in_domain(st.scion)) return false;
      return g.height(st.scion) >= L.max() || st.stock <= st.end;
    case Invariant::P8: {
      if (!S.empty()) {
        if (!g.in_domain(st.scion) || !g.in_domain(st.stock)) return false;
        auto top = ord_at(g, st.scion, g.height(st.scion));
        auto other = ord_at(g, st.stock, S.max() + 1);
        if (!top || !other || *top >= *other) return false;
      }
      return L.empty() || scion_top_precedes(st, L.max());
    }
    case Invariant::LP8:
      return !L.empty() && scion_top_precedes(st, L.max());
    case Invariant::P9:
      return S.empty() || (g.in_domain(st.scion) && g.height(st.scion) > S.max());
    case Invariant::P10:
      return S.empty() || !L.empty();
    case Invariant::LP3:
      return previous == nullptr ||
             (g.in_domain(st.scion) && g.height(st.scion) > previous->scion_height);
  }
  return false;
}

EngineState initialize(int n, int r, const Partition& lambda) {
  if (r <= 0 || r >= n) {
    throw Error(ErrorKind::InvalidShape, "completion requires 0 < r < n, got n=" +
                                             std::to_string(n) + " r=" + std::to_string(r));
  }
  if (lambda.sum() != n) {
    throw Error(ErrorKind::SumMismatch, "lambda=" + lambda.to_string() + " is not a partition of " +
                                            std::to_string(n));
  }
  if (lambda.size() > r) {
    throw Error(ErrorKind::NoCompletionExists,
                "no completion exists: |lambda| = " + std::to_string(lambda.size()) + " > r = " +
                    std::to_string(r));
  }

  EngineState st;
  st.n = n;
  st.r = r;
  st.rprime = n % r;
  st.lambda = lambda;
  st.graph = canonical_nr_graph(n, r);
  const int low = st.floor_height();
  const int high = st.ceil_height();
  const int rp = st.rprime;

  for (const auto& [x, count] : lambda.multiplicities()) {
    if (x > high) st.long_parts = st.long_parts + Partition::repeated(x, count);
    if (x < low) st.short_parts = st.short_parts + Partition::repeated(x, count);
  }
  if (rp != 0 && lambda.multiplicity(high) > rp) {
    st.long_parts = st.long_parts + Partition::repeated(high, lambda.multiplicity(high) - rp);
  }
  if (lambda.multiplicity(low) > r - rp) {
    st.short_parts =
        st.short_parts + Partition::repeated(low, lambda.multiplicity(low) - (r - rp));
  }
  st.scion = std::min(lambda.multiplicity(low), r - rp) + 1;
  st.stock = st.scion + 1;
  st.end = r - std::min(rp, lambda.multiplicity(high));
  st.k = 0;
  return st;
}

TraceRecord step_loop1(EngineState& st, const StepOptions& options) {
  Stepper step(st, options);
  const int max_long = st.long_parts.max();
  const int max_short = st.short_parts.max();
  const int t = st.scion;
  const int s = st.stock;
  const int gap = max_long - step.h(t);
  const int room = step.h(s) - max_short;

  // Case 1a reads h(s+1) only once its first conjunct holds.
  CaseTag kase;
  if (gap == room + 1 && step.h(s) < step.h(s + 1)) {
    kase = CaseTag::C1a;
    step.graft(step.h(s + 1) - max_short, s + 1);
    st.short_parts = remove_max(st.short_parts);
    st.long_parts = remove_max(st.long_parts);
    st.scion = s;
    st.stock = s + 2;
  } else if (gap > room) {
    kase = CaseTag::C1b;
    step.graft(room, s);
    st.short_parts = remove_max(st.short_parts);
    st.stock = s + 1;
  } else if (gap == room) {
    kase = CaseTag::C1c;
    step.graft(room, s);
    st.short_parts = remove_max(st.short_parts);
    st.long_parts = remove_max(st.long_parts);
    st.scion = s + 1;
    st.stock = s + 2;
  } else {
    kase = CaseTag::C1d;
    step.graft(gap, s);
    st.long_parts = remove_max(st.long_parts);
    st.scion = s;
    st.stock = s + 1;
  }
  TraceRecord rec = step.record(LoopTag::Loop1, kase);
  ++st.k;
  return rec;
}

std::vector<TraceRecord> step_loop2(EngineState& st, const StepOptions& options) {
  Stepper step(st, options);
  std::vector<TraceRecord> records;
  const int max_long = st.long_parts.max();
  const int high = st.ceil_height();
  const int low = st.floor_height();

  if (options.check_invariants) {
    check_all(st, {kLittleLoopInvariants + 1, std::size(kLittleLoopInvariants) - 1}, nullptr,
              st.k + 1);
  }
  while (max_long - step.h(st.scion) > high) {
    Snapshot before;
    if (options.check_invariants) before = snapshot(st);
    step.graft(step.h(st.stock), st.stock);
    ++st.stock;
    ++st.little_iterations;
    records.push_back(step.record(LoopTag::Little, CaseTag::Little));
    if (options.check_invariants) {
      check_all(st, kLittleLoopInvariants, &before, st.k + 1);
      if (!delta_strictly_upper(before.arrows, st.graph.arrows())) {
        throw InvariantViolation(Invariant::P2, st.k + 1,
                                 "Little-Loop graft changed a non-upper-triangular entry");
      }
    }
  }

  const int t = st.scion;
  const int s = st.stock;
  const int gap = max_long - step.h(t);
  const int hs = step.h(s);
  CaseTag kase;
  if (gap > hs && step.h(s + 1) == high) {
    kase = CaseTag::C2a;
    step.graft(step.h(s + 1), s + 1);
    st.scion = s;
    st.stock = s + 2;
  } else if (gap > hs && step.h(s + 1) == low) {
    kase = CaseTag::C2b;
    step.graft(hs, s);
    st.stock = s + 1;
    records.push_back(step.record(LoopTag::Loop2, kase));
    step.graft(1, st.stock);
    st.scion = st.stock;
    st.stock = st.stock + 1;
    st.scion_empty = !st.graph.in_domain(st.scion);
  } else if (gap > hs) {
    throw InvariantViolation(Invariant::P1, st.k + 1,
                             "cases 2a/2b: column " + std::to_string(s + 1) +
                                 " has height " + std::to_string(step.h(s + 1)) +
                                 ", neither floor(n/r) nor ceil(n/r)");
  } else if (gap == hs) {
    kase = CaseTag::C2c;
    step.graft(hs, s);
    st.scion = s + 1;
    st.stock = s + 2;
  } else {
    kase = CaseTag::C2d;
    step.graft(gap, s);
    st.scion = s;
    st.stock = s + 1;
  }
  st.long_parts = remove_max(st.long_parts);
  records.push_back(step.record(LoopTag::Loop2, kase));
  ++st.k;
  return records;
}

Completion run(int n, int r, const Partition& lambda, const RunOptions& options) {
  EngineState st = initialize(n, r, lambda);
  const bool check = options.check_invariants || checks_forced_by_environment();
  const StepOptions step_options{check};
  Completion out;
  out.n = n;
  out.r = r;

  if (check && !st.finished()) {
    check_all(st, {kIterationInvariants + 3, std::size(kIterationInvariants) - 3}, nullptr, 0);
  }
  while (!st.finished()) {
    Snapshot before;
    if (check) before = snapshot(st);
    if (!st.short_parts.empty()) {
      auto rec = step_loop1(st, step_options);
      if (options.trace) out.trace.push_back(std::move(rec));
    } else {
      auto recs = step_loop2(st, step_options);
      if (options.trace) {
        for (auto& rec : recs) out.trace.push_back(std::move(rec));
      }
    }
    if (check) check_all(st, kIterationInvariants, &before, st.k);
  }

  // X = matrix(G) - N_r as a sparse difference; N_r has a one at
  // (i + r, i), i.e. the arrow i -> i + r.
  const auto& arrows = st.graph.arrows();
  for (const auto& [key, w] : arrows) {
    const bool in_nr = key.second == key.first + r;
    Integer v = in_nr ? Integer(w - 1) : w;
    if (v != 0) out.x.push_back({key.second, key.first, std::move(v)});
  }
  for (int i = 1; i + r <= n; ++i) {
    if (!arrows.contains({i, i + r})) out.x.push_back({i + r, i, Integer(-1)});
  }
  std::sort(out.x.begin(), out.x.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  out.grafts = st.grafts;
  out.translations = st.translations;
  out.little_iterations = st.little_iterations;
  out.iterations = st.k;
  out.graph = std::move(st.graph);
  return out;
}

bool checks_forced_by_environment() {
  const char* v = std::getenv("NILCOMPLETE_CHECK");
  return v != nullptr && std::strcmp(v, "1") == 0;
}

}  // namespace nilc
