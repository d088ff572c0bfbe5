#include <algorithm>
#include <numeric>

#include "rscram/analysis.hpp"
#include "rscram/errors.hpp"

namespace rscram {

namespace {

struct PebbleSet {
  std::vector<std::uint8_t> has;
  std::uint64_t count = 0;

  explicit PebbleSet(std::size_t n) : has(n, 0) {}
  bool test(std::uint32_t v) const { return has[v] != 0; }
  void add(std::uint32_t v) {
    if (!has[v]) {
      has[v] = 1;
      ++count;
    }
  }
  void drop(std::uint32_t v) {
    if (has[v]) {
      has[v] = 0;
      --count;
    }
  }
};

class Simulator {
 public:
  Simulator(const RiffleGraph& graph, std::uint64_t budget,
            std::uint64_t max_placements, std::size_t retain_steps)
      : graph_(graph),
        budget_(budget),
        max_placements_(max_placements),
        retain_steps_(retain_steps),
        pebbles_(graph.node_count()) {}

  PebbleTrace honest_rowwise() {
    std::size_t n = graph_.width();
    for (std::uint32_t row = 0; row < graph_.rows(); ++row) {
      for (std::uint32_t col = 0; col < n; ++col) {
        std::vector<std::uint32_t> removed;
        if (col == 0 && row >= 2) {
          // The window only ever needs the previous row.
          for (std::uint32_t c = 0; c < n; ++c)
            removed.push_back(node_of(row - 2, c));
        }
        if (!commit(node_of(row, col), std::move(removed))) return finish();
      }
    }
    return finish();
  }

  PebbleTrace greedy_budget() {
    std::size_t max_indegree = 0;
    std::uint32_t widest = 0;
    for (std::size_t idx = 0; idx < graph_.node_count(); ++idx) {
      std::size_t d = graph_.parents(graph_.node_at(idx)).size();
      if (d > max_indegree) {
        max_indegree = d;
        widest = static_cast<std::uint32_t>(idx);
      }
    }
    if (budget_ < max_indegree + 1) {
      trace_.failed = true;
      trace_.failure = "budget below max indegree + 1";
      trace_.blocking_node = widest;
      return finish();
    }

    build_consumers();
    std::uint32_t sink = static_cast<std::uint32_t>(graph_.node_count() - 1);
    std::vector<std::uint32_t> stack{sink};
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      if (pebbles_.test(v)) {
        stack.pop_back();
        continue;
      }
      std::uint32_t missing = v;
      bool all_present = true;
      for (const ParentRef& p : graph_.parents(graph_.node_at(v))) {
        std::uint32_t u = node_of(p.node.row, p.node.col);
        if (!pebbles_.test(u)) {
          missing = u;
          all_present = false;
          break;
        }
      }
      if (!all_present) {
        stack.push_back(missing);
        continue;
      }
      std::vector<std::uint32_t> removed;
      if (pebbles_.count >= budget_) {
        std::uint32_t victim;
        if (!pick_victim(v, victim)) {
          trace_.failed = true;
          trace_.failure = "working set exceeds budget";
          trace_.blocking_node = v;
          return finish();
        }
        removed.push_back(victim);
      }
      if (!commit(v, std::move(removed))) return finish();
    }
    return finish();
  }

 private:
  std::uint32_t node_of(std::uint32_t row, std::uint32_t col) const {
    return static_cast<std::uint32_t>(graph_.node_index({row, col}));
  }

  void build_consumers() {
    consumers_.assign(graph_.node_count(), {});
    for (std::size_t idx = 0; idx < graph_.node_count(); ++idx)
      for (const ParentRef& p : graph_.parents(graph_.node_at(idx)))
        consumers_[graph_.node_index(p.node)].push_back(
            static_cast<std::uint32_t>(idx));
    // Construction order already yields sorted consumer lists.
  }

  std::uint64_t next_use(std::uint32_t u, std::uint32_t after) const {
    const auto& uses = consumers_[u];
    auto it = std::upper_bound(uses.begin(), uses.end(), after);
    return it == uses.end() ? ~std::uint64_t{0} : *it;
  }

  // Furthest next use in the fixed evaluation order, never a parent of the
  // node about to be placed.
  bool pick_victim(std::uint32_t placing, std::uint32_t& victim) const {
    auto parents = graph_.parents(graph_.node_at(placing));
    auto is_parent = [&](std::uint32_t u) {
      for (const ParentRef& p : parents)
        if (graph_.node_index(p.node) == u) return true;
      return false;
    };
    bool found = false;
    std::uint64_t best_use = 0;
    for (std::uint32_t u = 0; u < pebbles_.has.size(); ++u) {
      if (!pebbles_.test(u) || is_parent(u)) continue;
      std::uint64_t use = next_use(u, placing);
      if (!found || use > best_use || (use == best_use && u > victim)) {
        victim = u;
        best_use = use;
        found = true;
      }
    }
    return found;
  }

  // Applies one transition; false when the placement cap is hit.
  bool commit(std::uint32_t placed, std::vector<std::uint32_t> removed) {
    if (trace_.placements >= max_placements_) {
      trace_.failed = true;
      trace_.failure = "placement cap exceeded";
      trace_.blocking_node = placed;
      return false;
    }
    for (std::uint32_t r : removed) pebbles_.drop(r);
    pebbles_.add(placed);
    ++trace_.placements;
    ++trace_.time;
    trace_.max_space = std::max(trace_.max_space, pebbles_.count);
    trace_.cumulative += pebbles_.count;
    if (placed == graph_.node_count() - 1) trace_.target_pebbled = true;
    if (trace_.steps.size() < retain_steps_)
      trace_.steps.push_back({placed, std::move(removed)});
    else
      trace_.steps_complete = false;
    return true;
  }

  PebbleTrace finish() {
    if (!trace_.failed) {
      trace_.legal =
          trace_.steps_complete
              ? check_trace_legality(graph_, trace_.steps, budget_, nullptr)
              : inline_legal_;
      if (!trace_.target_pebbled) trace_.legal = false;
    }
    return std::move(trace_);
  }

  const RiffleGraph& graph_;
  std::uint64_t budget_;
  std::uint64_t max_placements_;
  std::size_t retain_steps_;
  PebbleSet pebbles_;
  std::vector<std::vector<std::uint32_t>> consumers_;
  PebbleTrace trace_;
  // The simulator never places without parents present, so a truncated log
  // is legal iff the replayed prefix is; recorded here for that case.
  bool inline_legal_ = true;
};

}  // namespace

PebbleTrace simulate_pebbling(const RiffleGraph& graph, PebbleStrategy strategy,
                              std::uint64_t budget,
                              std::uint64_t max_placements,
                              std::size_t retain_steps) {
  Simulator sim(graph, budget, max_placements, retain_steps);
  switch (strategy) {
    case PebbleStrategy::kHonestRowwise:
      return sim.honest_rowwise();
    case PebbleStrategy::kGreedyBudget:
      return sim.greedy_budget();
  }
  throw UsageError("simulate_pebbling: unknown strategy");
}

bool check_trace_legality(const RiffleGraph& graph,
                          std::span<const PebbleStep> steps,
                          std::uint64_t budget, std::string* why) {
  PebbleSet pebbles(graph.node_count());
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  bool sink_seen = false;
  std::uint32_t sink = static_cast<std::uint32_t>(graph.node_count() - 1);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const PebbleStep& step = steps[i];
    if (step.placed >= graph.node_count())
      return fail("step " + std::to_string(i) + ": node out of range");
    // Parents must carry pebbles at the end of the previous step.
    for (const ParentRef& p : graph.parents(graph.node_at(step.placed)))
      if (!pebbles.test(static_cast<std::uint32_t>(graph.node_index(p.node))))
        return fail("step " + std::to_string(i) + ": parent not pebbled");
    for (std::uint32_t r : step.removed) {
      if (r >= graph.node_count() || !pebbles.test(r))
        return fail("step " + std::to_string(i) + ": removing absent pebble");
      pebbles.drop(r);
    }
    pebbles.add(step.placed);
    if (pebbles.count > budget)
      return fail("step " + std::to_string(i) + ": budget exceeded");
    if (step.placed == sink) sink_seen = true;
  }
  if (!sink_seen) return fail("target never pebbled");
  return true;
}

ComplexityReport pebble_metrics(const PebbleTrace& trace) {
  if (!trace.legal) throw UsageError("pebble_metrics: trace is not legal");
  ComplexityReport r;
  r.time = trace.time;
  r.space = trace.max_space;
  r.space_time = trace.time * trace.max_space;
  r.cumulative = trace.cumulative;
  return r;
}

std::uint64_t graph_depth(const RiffleGraph& graph,
                          std::span<const NodeId> removed) {
  std::vector<std::uint8_t> gone(graph.node_count(), 0);
  for (NodeId id : removed) {
    if (!graph.contains(id)) throw UsageError("graph_depth: node outside graph");
    gone[graph.node_index(id)] = 1;
  }
  std::vector<std::uint64_t> depth(graph.node_count(), 0);
  std::uint64_t best = 0;
  for (std::size_t idx = 0; idx < graph.node_count(); ++idx) {
    if (gone[idx]) continue;
    std::uint64_t d = 0;
    for (const ParentRef& p : graph.parents(graph.node_at(idx))) {
      std::size_t u = graph.node_index(p.node);
      if (!gone[u]) d = std::max(d, depth[u] + 1);
    }
    depth[idx] = d;
    best = std::max(best, d);
  }
  return best;
}

bool sequential_bound_ok(const PebbleTrace& trace, std::size_t n_inputs,
                         std::size_t lambda) {
  if (!trace.legal) return true;  // bound speaks only about legal pebblings
  double n = static_cast<double>(n_inputs);
  double s = static_cast<double>(trace.max_space);
  if (s > n / 20.0) return true;
  double factor = lambda * n / (64.0 * s);
  double bound = n;
  for (std::size_t i = 0; i < lambda; ++i) bound *= factor;
  return static_cast<double>(trace.placements) >= bound;
}

std::string trace_to_csv(const PebbleTrace& trace) {
  std::string out = "step,placements,pebbles\n";
  std::uint64_t in_use = 0;
  std::uint64_t step = 0;
  for (const PebbleStep& s : trace.steps) {
    in_use += 1;
    in_use -= s.removed.size();
    ++step;
    out += std::to_string(step) + "," + std::to_string(step) + "," +
           std::to_string(in_use) + "\n";
  }
  return out;
}

}  // namespace rscram
