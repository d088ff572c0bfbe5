#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "rscram/analysis.hpp"
#include "rscram/errors.hpp"

namespace rscram {

namespace {

// Unit-capacity Dinic; exact and comfortably fast for the desk-scale
// networks here (a few thousand nodes).
class Dinic {
 public:
  explicit Dinic(std::size_t n) : adj_(n), level_(n), iter_(n) {}

  void add_edge(std::uint32_t from, std::uint32_t to, std::uint32_t cap) {
    adj_[from].push_back(edges_.size());
    edges_.push_back({to, cap});
    adj_[to].push_back(edges_.size());
    edges_.push_back({from, 0});
  }

  std::uint64_t max_flow(std::uint32_t s, std::uint32_t t) {
    std::uint64_t flow = 0;
    while (bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (dfs(s, t)) ++flow;
    }
    return flow;
  }

 private:
  struct Edge {
    std::uint32_t to;
    std::uint32_t cap;
  };

  bool bfs(std::uint32_t s, std::uint32_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      std::uint32_t v = queue_[head];
      for (std::size_t id : adj_[v]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          queue_.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  bool dfs(std::uint32_t v, std::uint32_t t) {
    if (v == t) return true;
    for (std::size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
      std::size_t id = adj_[v][i];
      Edge& e = edges_[id];
      if (e.cap > 0 && level_[e.to] == level_[v] + 1 && dfs(e.to, t)) {
        --e.cap;
        ++edges_[id ^ 1].cap;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  std::vector<std::uint32_t> queue_;
};

void require_terminals(const RiffleGraph& graph, std::span<const NodeId> sources,
                       std::span<const NodeId> sinks) {
  if (sources.empty() || sinks.empty())
    throw UsageError("flow: empty terminal set");
  std::set<NodeId> seen;
  for (NodeId v : sources) {
    if (!graph.contains(v)) throw UsageError("flow: terminal outside graph");
    if (!seen.insert(v).second) throw UsageError("flow: duplicate terminal");
  }
  for (NodeId v : sinks) {
    if (!graph.contains(v)) throw UsageError("flow: terminal outside graph");
    if (!seen.insert(v).second)
      throw UsageError("flow: source and sink sets must be disjoint");
  }
}

std::vector<std::uint32_t> sample_subset(std::mt19937_64& rng, std::size_t n,
                                         std::size_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::string cols_to_string(std::span<const std::uint32_t> cols) {
  std::string s = "[";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cols[i]);
  }
  return s + "]";
}

struct FlowTask {
  std::size_t k;
  std::vector<std::uint32_t> in_cols;
  std::vector<std::uint32_t> out_cols;
};

std::vector<NodeId> row_nodes(std::uint32_t row,
                              std::span<const std::uint32_t> cols) {
  std::vector<NodeId> nodes;
  nodes.reserve(cols.size());
  for (std::uint32_t c : cols) nodes.push_back({row, c});
  return nodes;
}

// Enumerates k-combinations of [0, n) in lexicographic order.
bool next_combination(std::vector<std::uint32_t>& comb, std::size_t n) {
  std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void run_flow_tasks(const RiffleGraph& graph, std::uint32_t out_row,
                    const std::vector<FlowTask>& tasks, EdgeFilter filter,
                    unsigned jobs, CheckReport& report) {
  std::mutex mu;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      std::size_t idx = cursor.fetch_add(1);
      if (idx >= tasks.size()) return;
      const FlowTask& task = tasks[idx];
      std::size_t flow = max_vertex_disjoint_paths(
          graph, row_nodes(0, task.in_cols), row_nodes(out_row, task.out_cols),
          filter);
      if (flow != task.k) {
        std::lock_guard<std::mutex> lock(mu);
        report.failures.push_back(
            "k=" + std::to_string(task.k) + " in=" + cols_to_string(task.in_cols) +
            " out=" + cols_to_string(task.out_cols) +
            " flow=" + std::to_string(flow));
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::sort(report.failures.begin(), report.failures.end());
  report.trials += tasks.size();
}

}  // namespace

std::size_t max_vertex_disjoint_paths(const RiffleGraph& graph,
                                      std::span<const NodeId> sources,
                                      std::span<const NodeId> sinks,
                                      EdgeFilter filter) {
  require_terminals(graph, sources, sinks);

  std::size_t v = graph.node_count();
  std::uint32_t super_s = static_cast<std::uint32_t>(2 * v);
  std::uint32_t super_t = super_s + 1;
  Dinic net(2 * v + 2);

  // Split every node; unit splitting capacity makes paths vertex-disjoint
  // and lets each terminal carry exactly one path.
  for (std::uint32_t i = 0; i < v; ++i) net.add_edge(2 * i, 2 * i + 1, 1);

  for (std::size_t idx = 0; idx < v; ++idx) {
    NodeId child = graph.node_at(idx);
    for (const ParentRef& p : graph.parents(child)) {
      if (filter == EdgeFilter::kInterLayerOnly &&
          !(p.kinds & kEdgePermutation))
        continue;
      std::uint32_t from = static_cast<std::uint32_t>(graph.node_index(p.node));
      net.add_edge(2 * from + 1, 2 * static_cast<std::uint32_t>(idx), 1);
    }
  }

  for (NodeId s : sources)
    net.add_edge(super_s, 2 * static_cast<std::uint32_t>(graph.node_index(s)), 1);
  for (NodeId t : sinks)
    net.add_edge(2 * static_cast<std::uint32_t>(graph.node_index(t)) + 1,
                 super_t, 1);

  return net.max_flow(super_s, super_t);
}

CheckReport check_superconcentrator(const RiffleGraph& graph, CheckMode mode,
                                    std::uint64_t samples, std::uint64_t seed,
                                    unsigned jobs) {
  if (graph.lambda() != 1)
    throw UsageError("check_superconcentrator: expects a single block");
  std::size_t n = graph.width();
  std::uint32_t out_row = static_cast<std::uint32_t>(graph.rows() - 1);

  CheckReport report;
  report.check = "superconcentrator";

  std::vector<FlowTask> tasks;
  if (mode == CheckMode::kExhaustive) {
    if (graph.garlic() > 3)
      throw UsageError(
          "check_superconcentrator: exhaustive mode is refused for g > 3; "
          "use sampled mode");
    report.params_json = "{\"mode\":\"exhaustive\",\"g\":" +
                         std::to_string(graph.garlic()) + "}";
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::uint32_t> in(k);
      std::iota(in.begin(), in.end(), 0);
      do {
        std::vector<std::uint32_t> out(k);
        std::iota(out.begin(), out.end(), 0);
        do {
          tasks.push_back({k, in, out});
        } while (next_combination(out, n));
      } while (next_combination(in, n));
    }
  } else {
    report.params_json = "{\"mode\":\"sampled\",\"g\":" +
                         std::to_string(graph.garlic()) +
                         ",\"samples\":" + std::to_string(samples) +
                         ",\"seed\":" + std::to_string(seed) + "}";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_k(1, n);
    for (std::uint64_t t = 0; t < samples; ++t) {
      std::size_t k = pick_k(rng);
      tasks.push_back({k, sample_subset(rng, n, k), sample_subset(rng, n, k)});
    }
  }

  run_flow_tasks(graph, out_row, tasks, EdgeFilter::kAll, jobs, report);
  report.pass = report.failures.empty();
  return report;
}

bool check_layer_dispersion(const RiffleGraph& graph, std::size_t block,
                            std::size_t h, std::uint64_t trials,
                            std::uint64_t seed) {
  return check_layer_dispersion_report(graph, block, h, trials, seed).pass;
}

CheckReport check_layer_dispersion_report(const RiffleGraph& graph,
                                          std::size_t block, std::size_t h,
                                          std::uint64_t trials,
                                          std::uint64_t seed) {
  if (block >= graph.lambda())
    throw UsageError("check_layer_dispersion: no such block");
  std::size_t n = graph.width();
  if (h < 1 || h > n) throw UsageError("check_layer_dispersion: h out of range");

  std::uint32_t in_row = static_cast<std::uint32_t>(block * 2 * graph.garlic());
  std::uint32_t out_row =
      static_cast<std::uint32_t>((block + 1) * 2 * graph.garlic());

  CheckReport report;
  report.check = "layer_dispersion";
  report.params_json = "{\"block\":" + std::to_string(block) +
                       ",\"h\":" + std::to_string(h) +
                       ",\"trials\":" + std::to_string(trials) +
                       ",\"seed\":" + std::to_string(seed) + "}";

  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t) {
    auto in_cols = sample_subset(rng, n, h);
    auto out_cols = sample_subset(rng, n, h);
    std::size_t flow =
        max_vertex_disjoint_paths(graph, row_nodes(in_row, in_cols),
                                  row_nodes(out_row, out_cols),
                                  EdgeFilter::kInterLayerOnly);
    ++report.trials;
    if (flow != h)
      report.failures.push_back("h=" + std::to_string(h) +
                                " in=" + cols_to_string(in_cols) +
                                " out=" + cols_to_string(out_cols) +
                                " flow=" + std::to_string(flow));
  }
  report.pass = report.failures.empty();
  return report;
}

RiffleGraph identity_control_graph(std::size_t g, std::size_t lambda) {
  std::size_t n = std::size_t{1} << g;
  return gen_graph_from_words(g, std::vector<BitWord>(g, BitWord(n)), lambda);
}

}  // namespace rscram
