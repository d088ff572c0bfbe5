#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <termios.h>

#include "rscram/analysis.hpp"
#include "rscram/errors.hpp"
#include "rscram/graph.hpp"
#include "rscram/hasher.hpp"
#include "rscram/phc.hpp"
#include "rscram/shuffle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Two-row window of 2^14 digests is 1 MiB: fast interactive default.
constexpr std::uint32_t kDefaultGarlic = 14;
constexpr std::uint32_t kDefaultLambda = 2;

bool color_enabled() {
  return isatty(fileno(stderr)) && std::getenv("RSCRAM_NO_COLOR") == nullptr;
}

void print_error(const std::string& msg) {
  if (color_enabled())
    std::cerr << "\x1b[31merror:\x1b[0m " << msg << "\n";
  else
    std::cerr << "error: " << msg << "\n";
}

std::vector<std::uint8_t> parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0)
    throw rscram::UsageError("hex string must have even length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw rscram::UsageError("invalid hex digit");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((nibble(hex[2 * i]) << 4) |
                                       nibble(hex[2 * i + 1]));
  return out;
}

// Secrets come from stdin or an echo-less prompt, never argv.
std::vector<std::uint8_t> read_password() {
  std::string line;
  if (isatty(fileno(stdin))) {
    std::cerr << "Password: " << std::flush;
    termios oldt{};
    tcgetattr(fileno(stdin), &oldt);
    termios newt = oldt;
    newt.c_lflag &= ~static_cast<tcflag_t>(ECHO);
    tcsetattr(fileno(stdin), TCSANOW, &newt);
    std::getline(std::cin, line);
    tcsetattr(fileno(stdin), TCSANOW, &oldt);
    std::cerr << "\n";
  } else {
    std::getline(std::cin, line);
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.pop_back();
  return {line.begin(), line.end()};
}

rscram::RiffleGraph graph_from_salt(std::size_t g,
                                    const std::vector<std::uint8_t>& salt,
                                    std::size_t lambda) {
  const auto& h = rscram::Sha256::instance();
  auto sigma = rscram::inverse_riffle_shuffle(h, std::size_t{1} << g, salt);
  return rscram::gen_graph(g, sigma.permutation, lambda);
}

struct RangeOpt {
  std::uint32_t lo = 0, hi = 0;
};

RangeOpt parse_range(const std::string& text) {
  std::size_t pos = text.find("..");
  if (pos == std::string::npos)
    throw rscram::UsageError("range must look like a..b");
  RangeOpt r;
  r.lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, pos)));
  r.hi = static_cast<std::uint32_t>(std::stoul(text.substr(pos + 2)));
  if (r.lo > r.hi) throw rscram::UsageError("range must be ascending");
  return r;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw rscram::ResourceError("cannot open output file");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"RiffleScrambler password hashing and graph analysis"};
  app.require_subcommand(1);

  // hash
  auto* hash_cmd = app.add_subcommand("hash", "hash a password from stdin");
  std::uint32_t garlic = kDefaultGarlic, lambda = kDefaultLambda;
  std::string salt_hex;
  bool random_salt_flag = false;
  hash_cmd->add_option("--garlic", garlic, "log2 of the row width");
  hash_cmd->add_option("--lambda", lambda, "number of stacked blocks");
  auto* salt_opt = hash_cmd->add_option("--salt-hex", salt_hex, "salt bytes in hex");
  hash_cmd->add_flag("--random-salt", random_salt_flag, "draw a 16-byte salt")
      ->excludes(salt_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify stdin password against a hash");
  std::string encoded;
  verify_cmd->add_option("phc", encoded, "encoded hash string")->required();

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "export the salt-derived graph");
  std::uint32_t graph_g = 3, graph_lambda = 1;
  std::string graph_salt_hex, export_format = "dot", out_path;
  graph_cmd->add_option("--garlic", graph_g)->required();
  graph_cmd->add_option("--salt-hex", graph_salt_hex)->required();
  graph_cmd->add_option("--lambda", graph_lambda);
  graph_cmd->add_option("--export", export_format, "dot or json");
  graph_cmd->add_option("--out", out_path, "write to file instead of stdout");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "structural security checks");
  bool want_super = false, want_dispersion = false, exhaustive = false;
  std::uint32_t an_g = 3;
  std::string an_salt_hex;
  std::uint64_t samples = 1000, seed = 0, trials = 200;
  std::size_t disp_h = 1;
  unsigned jobs = 1;
  analyze_cmd->add_flag("--superconcentrator", want_super);
  analyze_cmd->add_flag("--dispersion", want_dispersion);
  auto* ex_opt = analyze_cmd->add_flag("--exhaustive", exhaustive);
  auto* samples_opt = analyze_cmd->add_option("--samples", samples);
  ex_opt->excludes(samples_opt);
  analyze_cmd->add_option("--seed", seed);
  analyze_cmd->add_option("--garlic", an_g)->required();
  analyze_cmd->add_option("--salt-hex", an_salt_hex)->required();
  analyze_cmd->add_option("--h", disp_h, "subset size for dispersion");
  analyze_cmd->add_option("--trials", trials, "dispersion trials");
  analyze_cmd->add_option("--jobs", jobs, "worker threads");

  // pebble
  auto* pebble_cmd = app.add_subcommand("pebble", "pebbling simulation");
  std::uint32_t pb_g = 3, pb_lambda = 1;
  std::string pb_salt_hex, strategy = "honest", csv_path;
  std::uint64_t budget = 0;
  bool have_budget = false;
  pebble_cmd->add_option("--garlic", pb_g)->required();
  pebble_cmd->add_option("--salt-hex", pb_salt_hex)->required();
  pebble_cmd->add_option("--lambda", pb_lambda);
  pebble_cmd->add_option("--strategy", strategy, "honest or greedy");
  auto* budget_opt = pebble_cmd->add_option("--budget", budget);
  pebble_cmd->add_option("--csv", csv_path, "write the trace as CSV");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "wall time and call counts");
  std::string g_range = "10..14", l_range = "1..2";
  bench_cmd->add_option("--garlic-range", g_range, "a..b");
  bench_cmd->add_option("--lambda-range", l_range, "a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  have_budget = budget_opt->count() > 0;
  const auto& h = rscram::Sha256::instance();

  if (*hash_cmd) {
    std::vector<std::uint8_t> salt;
    if (!salt_hex.empty()) salt = parse_hex(salt_hex);
    rscram::HashParams params(garlic, lambda, std::move(salt));
    auto password = read_password();
    std::cout << rscram::hash_password(h, std::move(params), password) << "\n";
    return kExitOk;
  }

  if (*verify_cmd) {
    auto password = read_password();
    return rscram::verify_password(h, encoded, password) ? kExitOk
                                                         : kExitMismatch;
  }

  if (*graph_cmd) {
    auto graph = graph_from_salt(graph_g, parse_hex(graph_salt_hex), graph_lambda);
    rscram::ExportFormat fmt;
    if (export_format == "dot")
      fmt = rscram::ExportFormat::kDot;
    else if (export_format == "json")
      fmt = rscram::ExportFormat::kAdjacencyJson;
    else
      throw rscram::UsageError("--export must be dot or json");
    write_output(rscram::export_graph(graph, fmt), out_path);
    return kExitOk;
  }

  if (*analyze_cmd) {
    if (!want_super && !want_dispersion)
      throw rscram::UsageError(
          "analyze needs --superconcentrator and/or --dispersion");
    auto graph = graph_from_salt(an_g, parse_hex(an_salt_hex), 1);
    nlohmann::json reports = nlohmann::json::array();
    bool all_pass = true;
    if (want_super) {
      auto report = rscram::check_superconcentrator(
          graph, exhaustive ? rscram::CheckMode::kExhaustive
                            : rscram::CheckMode::kSampled,
          samples, seed, jobs);
      all_pass = all_pass && report.pass;
      reports.push_back(nlohmann::json::parse(report.to_json()));
    }
    if (want_dispersion) {
      auto report =
          rscram::check_layer_dispersion_report(graph, 0, disp_h, trials, seed);
      all_pass = all_pass && report.pass;
      reports.push_back(nlohmann::json::parse(report.to_json()));
    }
    std::cout << reports.dump() << "\n";
    return all_pass ? kExitOk : kExitMismatch;
  }

  if (*pebble_cmd) {
    auto graph = graph_from_salt(pb_g, parse_hex(pb_salt_hex), pb_lambda);
    rscram::PebbleStrategy strat;
    if (strategy == "honest")
      strat = rscram::PebbleStrategy::kHonestRowwise;
    else if (strategy == "greedy")
      strat = rscram::PebbleStrategy::kGreedyBudget;
    else
      throw rscram::UsageError("--strategy must be honest or greedy");
    auto trace = rscram::simulate_pebbling(
        graph, strat, have_budget ? budget : rscram::kUnlimitedBudget);
    nlohmann::json j{{"strategy", strategy},
                     {"budget", have_budget ? nlohmann::json(budget)
                                            : nlohmann::json("unlimited")},
                     {"placements", trace.placements},
                     {"time", trace.time},
                     {"space", trace.max_space},
                     {"cumulative", trace.cumulative},
                     {"legal", trace.legal},
                     {"failed", trace.failed}};
    if (trace.failed) {
      j["failure"] = trace.failure;
      if (trace.blocking_node) {
        auto id = graph.node_at(*trace.blocking_node);
        j["blocking_node"] = {id.row, id.col};
      }
    }
    std::cout << j.dump() << "\n";
    if (!csv_path.empty()) write_output(rscram::trace_to_csv(trace), csv_path);
    return kExitOk;
  }

  if (*bench_cmd) {
    RangeOpt gr = parse_range(g_range), lr = parse_range(l_range);
    nlohmann::json rows = nlohmann::json::array();
    std::vector<std::uint8_t> salt(16, 0xa5);
    std::vector<std::uint8_t> password{'b', 'e', 'n', 'c', 'h'};
    for (std::uint32_t g = gr.lo; g <= gr.hi; ++g) {
      for (std::uint32_t l = lr.lo; l <= lr.hi; ++l) {
        rscram::HashParams params(g, l, salt);
        rscram::EvalStats stats;
        auto t0 = std::chrono::steady_clock::now();
        rscram::evaluate(h, password, params, &stats);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back({{"garlic", g},
                        {"lambda", l},
                        {"wall_ms", ms},
                        {"seeding_calls", stats.seeding_calls},
                        {"evaluation_calls", stats.evaluation_calls},
                        {"shuffle_calls", stats.shuffle_calls},
                        {"shuffle_rounds", stats.shuffle_rounds}});
      }
    }
    std::cout << rows.dump() << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rscram::DecodeError& e) {
    print_error(e.what());
    return kExitUsage;
  } catch (const rscram::UsageError& e) {
    print_error(e.what());
    return kExitUsage;
  } catch (const rscram::ResourceError& e) {
    print_error(e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    print_error(e.what());
    return kExitInternal;
  }
}
