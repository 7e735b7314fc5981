// qedmonds: decides Edmonds' problem for quiver data (W, sigma).
//
// Subcommands build the N x N block-matrix family of an instance, test its
// span for a non-singular member (exact randomized/symbolic oracles), run the
// operator-Sinkhorn capacity decision, and combine both into membership and
// saturation reports. Instances are JSON files with exact rational entries;
// reports go to stdout as JSON, diagnostics to stderr.
//
// Exit codes: 0 decided, 2 invalid input, 3 inconclusive or size-capped,
// 4 internal-consistency alarm (a theorem-grade invariant failed).

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "quiver/json_io.hpp"

namespace fs = std::filesystem;
using namespace quiver;

namespace {

struct CommonOptions {
  std::string input;
  bool inexact = false;
  int jobs = 1;
};

struct OracleOptions {
  std::string method = "auto";
  int trials = 40;
  long long sample_bound = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  long long size_cap = 8;
  long long op_cap = 12;
  long long scale = 1;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QEDMONDS_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

OracleMode parse_mode(const std::string& method) {
  if (method == "randomized") return OracleMode::Randomized;
  if (method == "symbolic") return OracleMode::Symbolic;
  if (method == "auto") return OracleMode::Auto;
  throw ParseError("unknown method '" + method + "'");
}

MembershipOptions to_membership_options(const OracleOptions& o) {
  MembershipOptions m;
  m.mode = parse_mode(o.method);
  m.randomized.trials = o.trials;
  m.randomized.sample_bound = o.sample_bound;
  m.randomized.seed = o.seed_given ? o.seed : default_seed();
  m.symbolic.max_size = o.size_cap;
  m.symbolic.max_operators = (std::size_t)o.op_cap;
  m.weight_scale = o.scale;
  return m;
}

// One instance file -> (exit code, report text). Shared by all subcommands;
// `run` produces the result payload and may refine the exit code.
template <typename Run>
int process_file(const std::string& command, const std::string& path,
                 const CommonOptions& common, const Json& flags,
                 std::uint64_t seed, Run run, std::string* out_text) {
  auto started = std::chrono::steady_clock::now();
  std::string bytes;
  int code = 0;
  Json result;
  try {
    bytes = read_file(path);
    InstanceDocument doc = parse_instance_text(bytes, common.inexact);
    if (!doc.quiver->is_connected()) {
      std::cerr << "warning: underlying graph of '" << path
                << "' is disconnected\n";
    }
    auto checks = check_relations(doc.rep, doc.relations);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      if (!checks[k].passes) {
        throw ParseError("representation violates relation " +
                         std::to_string(k + 1));
      }
    }
    code = run(doc, &result);
  } catch (const InconsistencyAlarm& e) {
    std::cerr << "alarm: " << e.what() << "\n";
    return 4;
  } catch (const SizeCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const QuiverError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  *out_text =
      make_report(command, path, bytes, seed, flags, result, seconds).dump(2);
  return code;
}

// Runs `path` (file or directory of *.json) through process_file; directory
// entries go to a small worker pool, outputs kept in filename order.
template <typename Run>
int process_input(const std::string& command, const CommonOptions& common,
                  const Json& flags, std::uint64_t seed, Run run) {
  std::vector<std::string> files;
  if (fs::is_directory(common.input)) {
    for (const auto& entry : fs::directory_iterator(common.input)) {
      if (entry.path().extension() == ".json") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      std::cerr << "error: no .json instances in '" << common.input << "'\n";
      return 2;
    }
  } else {
    files.push_back(common.input);
  }

  std::vector<std::string> outputs(files.size());
  std::vector<int> codes(files.size(), 0);
  int jobs = std::max(1, common.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next.fetch_add(1); k < files.size();
         k = next.fetch_add(1)) {
      codes[k] = process_file(command, files[k], common, flags, seed, run,
                              &outputs[k]);
    }
  };
  if (jobs == 1 || files.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int exit_code = 0;
  for (std::size_t k = 0; k < files.size(); ++k) {
    if (!outputs[k].empty()) std::cout << outputs[k] << "\n";
    exit_code = std::max(exit_code, codes[k]);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qedmonds: span and capacity decisions for quiver data (W, sigma).\n"
      "Instances are JSON files; matrix entries are exact rationals given as\n"
      "integers or strings like \"3/4\". Paths list arrow ids in traversal\n"
      "order; evaluating a path multiplies the matrices in reverse list\n"
      "order (the first traversed arrow acts first). The environment\n"
      "variable QEDMONDS_SEED supplies the default seed."};
  app.require_subcommand(1);

  CommonOptions common;
  OracleOptions oracle;
  std::string emit_path;
  bool emit_dense = false;
  long long max_iters = -1;
  double threshold = -1.0;
  int n_max = 4;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("instance", common.input,
                    "instance file or directory of *.json")
        ->required();
    cmd->add_flag("--inexact", common.inexact,
                  "accept float entries (exact dyadic conversion); only the "
                  "randomized and capacity paths are allowed");
    cmd->add_option("--jobs", common.jobs,
                    "worker threads for directory inputs");
  };
  auto add_oracle = [&](CLI::App* cmd, bool with_method = true) {
    if (with_method) {
      cmd->add_option("--method", oracle.method,
                      "randomized | symbolic | auto");
    }
    cmd->add_option("--trials", oracle.trials, "randomized trials (k)");
    cmd->add_option("--sample-bound", oracle.sample_bound,
                    "coefficient range S (default 2N)");
    cmd->add_option("--seed", oracle.seed, "randomized master seed")
        ->each([&](const std::string&) { oracle.seed_given = true; });
    cmd->add_option("--size-cap", oracle.size_cap, "symbolic N cap");
    cmd->add_option("--op-cap", oracle.op_cap, "symbolic |F| cap");
  };

  CLI::App* build = app.add_subcommand(
      "build-datum", "build the block-matrix family and sigma split");
  add_common(build);
  build->add_option("--emit", emit_path, "write the family document here");
  build->add_flag("--dense", emit_dense, "include dense N x N matrices");

  CLI::App* edmonds = app.add_subcommand(
      "edmonds", "decide whether the span contains a non-singular matrix");
  add_common(edmonds);
  add_oracle(edmonds);
  edmonds->add_option("--scale", oracle.scale, "test n*sigma instead of sigma");

  CLI::App* capacity = app.add_subcommand(
      "capacity", "operator-Sinkhorn decision for cap(W, sigma) > 0");
  add_common(capacity);
  capacity->add_option("--max-iters", max_iters, "iteration budget");
  capacity->add_option("--threshold", threshold,
                       "ds threshold for POSITIVE (default 1/(N+1))");

  CLI::App* membership = app.add_subcommand(
      "membership", "orbit-semigroup membership report (all three probes)");
  add_common(membership);
  add_oracle(membership);
  membership->add_option("--max-iters", max_iters, "capacity iteration budget");
  membership->add_option("--threshold", threshold, "capacity ds threshold");

  CLI::App* saturate = app.add_subcommand(
      "saturate", "saturation / Edmonds-Rado probe over n*sigma");
  add_common(saturate);
  add_oracle(saturate);
  saturate->add_option("--n-max", n_max, "largest multiple n to test");
  saturate->add_option("--max-iters", max_iters, "capacity iteration budget");
  saturate->add_option("--threshold", threshold, "capacity ds threshold");

  CLI11_PARSE(app, argc, argv);

  if (common.inexact && oracle.method == "symbolic") {
    std::cerr << "error: --inexact input is limited to the randomized and "
                 "capacity paths\n";
    return 2;
  }

  std::uint64_t seed = oracle.seed_given ? oracle.seed : default_seed();
  oracle.seed = seed;
  oracle.seed_given = true;

  CapacityParams capacity_params;
  capacity_params.max_iters = max_iters;
  capacity_params.threshold = threshold;

  if (build->parsed()) {
    Json flags{{"emit", emit_path}, {"dense", emit_dense}};
    return process_input(
        "build-datum", common, flags, seed,
        [&](const InstanceDocument& doc, Json* result) {
          BlockMatrixFamily family = build_block_matrices(doc.datum());
          Json body = family_to_json(family, emit_dense);
          if (!emit_path.empty()) {
            std::ofstream out(emit_path);
            out << body.dump(2) << "\n";
          }
          *result = std::move(body);
          return 0;
        });
  }

  if (edmonds->parsed()) {
    MembershipOptions opts = to_membership_options(oracle);
    Json flags{{"method", oracle.method}, {"trials", oracle.trials},
               {"sample_bound", oracle.sample_bound},
               {"scale", oracle.scale},   {"size_cap", oracle.size_cap},
               {"op_cap", oracle.op_cap}};
    return process_input(
        "edmonds", common, flags, seed,
        [&](const InstanceDocument& doc, Json* result) {
          SpanDecision decision = decide_membership(doc.datum(), opts);
          *result = span_decision_to_json(decision);
          std::cerr << (decision.answer == SpanAnswer::Yes ? "YES" : "NO")
                    << "\n";
          return 0;
        });
  }

  if (capacity->parsed()) {
    Json flags{{"max_iters", max_iters}, {"threshold", threshold}};
    return process_input(
        "capacity", common, flags, seed,
        [&](const InstanceDocument& doc, Json* result) {
          CapacityReport report =
              decide_capacity(build_block_matrices(doc.datum()),
                              capacity_params);
          *result = capacity_report_to_json(report);
          return report.decision == CapacityDecision::Inconclusive ? 3 : 0;
        });
  }

  if (membership->parsed()) {
    OrbitMembershipOptions opts;
    opts.oracle = to_membership_options(oracle);
    opts.capacity = capacity_params;
    Json flags{{"method", oracle.method}, {"trials", oracle.trials}};
    return process_input(
        "membership", common, flags, seed,
        [&](const InstanceDocument& doc, Json* result) {
          opts.relations = doc.relations;
          MembershipReport report = orbit_membership(doc.datum(), opts);
          *result = membership_report_to_json(report);
          return report.semistable.decision == CapacityDecision::Inconclusive
                     ? 3
                     : 0;
        });
  }

  // saturate
  SaturationOptions opts;
  opts.n_max = n_max;
  opts.oracle = to_membership_options(oracle);
  opts.capacity = capacity_params;
  Json flags{{"method", oracle.method}, {"n_max", n_max},
             {"trials", oracle.trials}};
  return process_input(
      "saturate", common, flags, seed,
      [&](const InstanceDocument& doc, Json* result) {
        SaturationReport report = saturation_probe(doc.datum(), opts);
        *result = saturation_report_to_json(report);
        return report.status == SaturationStatus::Inconclusive ? 3 : 0;
      });
}
