#ifndef RSCRAM_ANALYSIS_HPP_
#define RSCRAM_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rscram/graph.hpp"

namespace rscram {

enum class EdgeFilter {
  kAll,
  kInterLayerOnly,  // permutation-kind edges only
};

// Exact maximum number of vertex-disjoint directed paths from `sources` to
// `sinks`, via unit-capacity max-flow on the node-split network (every node,
// terminals included, has splitting capacity 1).
std::size_t max_vertex_disjoint_paths(const RiffleGraph& graph,
                                      std::span<const NodeId> sources,
                                      std::span<const NodeId> sinks,
                                      EdgeFilter filter = EdgeFilter::kAll);

enum class CheckMode { kExhaustive, kSampled };

struct CheckReport {
  std::string check;
  std::string params_json;    // free-form parameter echo
  std::uint64_t trials = 0;
  std::vector<std::string> failures;  // witness descriptions
  bool pass = false;

  std::string to_json() const;
};

// Verifies the defining flow property on one block (lambda must be 1):
// every pair of equal-size input/output subsets is connected by that many
// vertex-disjoint paths.  Exhaustive mode enumerates all k and all subset
// pairs (refused for g > 3); sampled mode draws uniform (k, V_in, V_out)
// triples from `seed`.  `jobs` fans the flow runs out over threads.
CheckReport check_superconcentrator(const RiffleGraph& graph, CheckMode mode,
                                    std::uint64_t samples = 0,
                                    std::uint64_t seed = 0, unsigned jobs = 1);

// Random size-h subsets of block inputs/outputs must be joined by h
// vertex-disjoint paths through permutation edges alone (length exactly 2g).
bool check_layer_dispersion(const RiffleGraph& graph, std::size_t block,
                            std::size_t h, std::uint64_t trials,
                            std::uint64_t seed);
CheckReport check_layer_dispersion_report(const RiffleGraph& graph,
                                          std::size_t block, std::size_t h,
                                          std::uint64_t trials,
                                          std::uint64_t seed);

// Same rows/columns/horizontal/wrap skeleton, but every permutation layer
// replaced by identity edges; the classic refutation target.
RiffleGraph identity_control_graph(std::size_t g, std::size_t lambda);

// ---- Pebbling ----

enum class PebbleStrategy { kHonestRowwise, kGreedyBudget };

inline constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};

struct PebbleStep {
  std::uint32_t placed;                 // node index
  std::vector<std::uint32_t> removed;   // removed in the same transition
};

struct PebbleTrace {
  std::uint64_t time = 0;        // configurations after P_0
  std::uint64_t placements = 0;  // equals time (one placement per step)
  std::uint64_t max_space = 0;
  std::uint64_t cumulative = 0;  // sum of |P_i| over steps
  bool legal = false;
  bool target_pebbled = false;
  bool failed = false;
  std::string failure;
  std::optional<std::uint32_t> blocking_node;
  std::vector<PebbleStep> steps;  // full log when it fits retain_steps
  bool steps_complete = true;
};

// honest-rowwise replays the evaluation order with a two-row window;
// greedy-budget works toward the sink with at most `budget` pebbles,
// restoring evicted parents on demand and discarding by furthest next use.
// Exceeding max_placements or wedging on an unevictable working set yields
// a failure report, never an illegal trace.
PebbleTrace simulate_pebbling(const RiffleGraph& graph, PebbleStrategy strategy,
                              std::uint64_t budget = kUnlimitedBudget,
                              std::uint64_t max_placements = 1u << 26,
                              std::size_t retain_steps = 1u << 20);

struct ComplexityReport {
  std::uint64_t time = 0;
  std::uint64_t space = 0;
  std::uint64_t space_time = 0;
  std::uint64_t cumulative = 0;
};

ComplexityReport pebble_metrics(const PebbleTrace& trace);  // UsageError if illegal

// Replays a step log against the pebbling rules: parents pebbled at the
// previous configuration, one placement per step, space within budget, and
// the sink pebbled at some point.
bool check_trace_legality(const RiffleGraph& graph,
                          std::span<const PebbleStep> steps,
                          std::uint64_t budget = kUnlimitedBudget,
                          std::string* why = nullptr);

// Longest directed path (edge count) after deleting `removed`; empty graph
// convention: 0.
std::uint64_t graph_depth(const RiffleGraph& graph,
                          std::span<const NodeId> removed = {});

// Sequential trade-off sanity: a legal trace with space S <= N/20 must spend
// at least N * (lambda*N / (64*S))^lambda placements.  True (vacuously) when
// the trace's space exceeds N/20.
bool sequential_bound_ok(const PebbleTrace& trace, std::size_t n_inputs,
                         std::size_t lambda);

// step, placements-so-far, pebbles-in-use
std::string trace_to_csv(const PebbleTrace& trace);

}  // namespace rscram

#endif  // RSCRAM_ANALYSIS_HPP_
