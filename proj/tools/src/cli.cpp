#include "nilcomplete/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilcomplete/nilcomplete.hpp"

namespace nilc::cli {
namespace {

using json = nlohmann::ordered_json;

struct InstanceArgs {
  int n = 0;
  int r = 0;
  std::string lambda;
};

void add_instance_options(CLI::App& cmd, InstanceArgs& a, bool lambda_required) {
  cmd.add_option("--n", a.n, "matrix dimension")->required();
  cmd.add_option("--r", a.r, "diagonal offset of N_r")->required();
  auto* opt = cmd.add_option("--lambda", a.lambda, "target Jordan type, e.g. 5,4,1");
  if (lambda_required) opt->required();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to `out` when the path is empty.
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::ios_base::failure("write to '" + path + "' failed");
}

std::string rank_text(const std::vector<std::size_t>& ranks) {
  std::string s;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ranks[i]);
  }
  return s;
}

json triplets_json(const std::vector<Triplet>& x) {
  json arr = json::array();
  for (const auto& t : x) arr.push_back({t.row, t.col, t.value.get_si()});
  return arr;
}

// Empty when (n, r, lambda) checks out, otherwise the reason it failed.
std::string check_instance(int n, int r, const Partition& lambda) {
  Completion c = run(n, r, lambda, {.check_invariants = true});
  IntMatrix x = c.dense_x();
  if (!x.is_binary()) return "X is not binary";
  if (!x.is_strictly_upper_triangular()) return "X is not strictly upper triangular";
  if (x.nnz() != c.grafts) return "nnz(X) differs from the graft count";
  IntMatrix a = make_nr(n, r) + x;
  if (!is_nilpotent(a)) return "N_r + X is not nilpotent";
  Partition got = jordan_type(a).partition;
  if (got != lambda) return "Jordan type " + got.to_string();
  if (heights(c.graph) != lambda) return "final column heights " + heights(c.graph).to_string();
  return {};
}

int cmd_complete(const InstanceArgs& a, const std::string& format, bool verify,
                 const std::string& trace_path, bool check, std::ostream& out) {
  const Partition lambda = Partition::parse(a.lambda);
  const bool want_trace = !trace_path.empty();
  Completion c = run(a.n, a.r, lambda, {.check_invariants = check, .trace = want_trace});

  if (want_trace) {
    std::string lines;
    for (const auto& rec : c.trace) lines += to_json_line(rec) + "\n";
    write_output(trace_path, lines, out);
  }

  std::optional<Partition> certified;
  if (verify) {
    IntMatrix m = make_nr(a.n, a.r) + c.dense_x();
    if (!is_nilpotent(m)) throw Error(ErrorKind::NotNilpotent, "N_r + X is not nilpotent");
    certified = jordan_type(m).partition;
    if (*certified != lambda) {
      throw Error(ErrorKind::InvariantViolation,
                  "certified type " + certified->to_string() + " differs from " + lambda.to_string());
    }
  }

  if (format == "json") {
    json j;
    j["n"] = a.n;
    j["r"] = a.r;
    j["lambda"] = lambda.to_string();
    j["x"] = triplets_json(c.x);
    j["grafts"] = c.grafts;
    j["little_iterations"] = c.little_iterations;
    if (certified) j["certified_type"] = certified->to_string();
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << (format == "dense" ? to_dense_text(c.dense_x()) : to_triplet_text(c.x));
  if (certified) out << "certified type: " << certified->to_string() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& format, int n,
               const std::string& expect, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(input);
  IntMatrix m = format == "triplets" ? parse_triplets(text, n) : parse_dense(text);
  const auto ranks = rank_sequence(m);
  out << "dimension: " << m.dim() << "\n";
  out << "rank sequence: " << rank_text(ranks) << "\n";
  if (!is_nilpotent(m)) {
    out << "nilpotent: no\n";
    return kExitNoSolution;
  }
  const Partition type = jordan_type(m).partition;
  out << "nilpotent: yes\n";
  out << "type: " << type.to_string() << "\n";
  if (!expect.empty() && type != Partition::parse(expect)) {
    err << "type " << type.to_string() << " does not match expected " << expect << "\n";
    return kExitNoSolution;
  }
  return kExitOk;
}

int cmd_batch(int max_n, unsigned threads, std::ostream& out, std::ostream& err) {
  if (max_n < 2) {
    err << "nothing to test: --max-n must be at least 2\n";
    return kExitUsage;
  }
  std::vector<std::pair<int, int>> shapes;
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r < n; ++r) shapes.emplace_back(n, r);
  }
  // Large n first so the tail of the run is short work.
  std::reverse(shapes.begin(), shapes.end());

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> instances{0};
  std::mutex mu;
  std::vector<std::string> failures;
  auto worker = [&] {
    for (std::size_t i = next++; i < shapes.size(); i = next++) {
      const auto [n, r] = shapes[i];
      for_each_partition(n, r, [&](const Partition& lambda) {
        ++instances;
        std::string why;
        try {
          why = check_instance(n, r, lambda);
        } catch (const std::exception& e) {
          why = e.what();
        }
        if (!why.empty()) {
          std::lock_guard lock(mu);
          failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " lambda=" + lambda.to_string() + ": " + why);
        }
      });
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::sort(failures.begin(), failures.end());
  for (const auto& f : failures) err << "FAIL " << f << "\n";
  out << "instances: " << instances.load() << "\n";
  out << "failures: " << failures.size() << "\n";
  return failures.empty() ? kExitOk : kExitUsage;
}

int cmd_connection(const InstanceArgs& a, const std::string& format, std::ostream& out) {
  ConnectionForm c = emit(a.n, a.r, Partition::parse(a.lambda));
  std::string text = format == "text" ? render_text(c) : to_json(c);
  if (!text.ends_with('\n')) text += '\n';
  out << text;
  return kExitOk;
}

int cmd_graph(const InstanceArgs& a, bool initial, bool tikz, const std::string& output,
              std::ostream& out, std::ostream& err) {
  GlnGraph g = canonical_nr_graph(a.n, a.r);
  if (!initial) {
    if (a.lambda.empty()) {
      err << "--lambda is required unless --initial is given\n";
      return kExitUsage;
    }
    g = run(a.n, a.r, Partition::parse(a.lambda)).graph;
  }
  write_output(output, tikz ? to_tikz(g) : to_dot(g), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent completions of N_r with prescribed Jordan type", "nilcomplete"};
  app.require_subcommand(1);

  InstanceArgs inst;
  std::string complete_format;
  std::string verify_format;
  std::string connection_format;
  std::string trace_path;
  std::string input;
  std::string expect;
  std::string output;
  bool verify = false;
  bool check = false;
  bool initial = false;
  bool dot = false;
  bool tikz = false;
  int max_n = 0;
  int verify_n = 0;
  unsigned threads = 1;

  auto* complete = app.add_subcommand("complete", "compute X with N_r + X of type lambda");
  add_instance_options(*complete, inst, true);
  complete->add_option("--format", complete_format, "dense, triplets or json")
      ->check(CLI::IsMember({"dense", "triplets", "json"}))
      ->default_val("triplets");
  complete->add_flag("--verify", verify, "certify the Jordan type of N_r + X");
  complete->add_option("--trace", trace_path, "write the trace as JSON lines to this file");
  complete->add_flag("--check", check, "assert the loop invariants at every iteration");

  auto* verify_cmd = app.add_subcommand("verify", "certify nilpotency and type of a matrix file");
  verify_cmd->add_option("--input", input, "matrix file")->required();
  verify_cmd->add_option("--format", verify_format, "dense or triplets")
      ->check(CLI::IsMember({"dense", "triplets"}))
      ->default_val("dense");
  verify_cmd->add_option("--n", verify_n, "dimension (triplet input)");
  verify_cmd->add_option("--expect", expect, "expected Jordan type");

  auto* batch = app.add_subcommand("batch", "exhaustive check of every instance up to --max-n");
  batch->add_option("--max-n", max_n, "largest dimension")->required();
  batch->add_option("--threads", threads, "worker threads")->default_val(1);

  auto* connection = app.add_subcommand("connection", "emit the connection one-form");
  add_instance_options(*connection, inst, true);
  connection->add_option("--format", connection_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_val("json");

  auto* graph = app.add_subcommand("graph", "export the initial or final graph");
  add_instance_options(*graph, inst, false);
  graph->add_flag("--initial", initial, "export the graph of N_r");
  auto* dot_flag = graph->add_flag("--dot", dot, "Graphviz output (default)");
  graph->add_flag("--tikz", tikz, "TikZ output")->excludes(dot_flag);
  graph->add_option("--output", output, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*complete) return cmd_complete(inst, complete_format, verify, trace_path, check, out);
    if (*verify_cmd) {
      if (verify_format == "triplets" && verify_n < 1) {
        err << "--n is required for triplet input\n";
        return kExitUsage;
      }
      return cmd_verify(input, verify_format, verify_n, expect, out, err);
    }
    if (*batch) return cmd_batch(max_n, threads, out, err);
    if (*connection) return cmd_connection(inst, connection_format, out);
    if (*graph) return cmd_graph(inst, initial, tikz, output, out, err);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NoCompletionExists) {
      err << "no completion exists: |lambda| > r\n";
      return kExitNoSolution;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nilc::cli
