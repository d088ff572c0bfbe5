#ifndef RSCRAM_GRAPH_HPP_
#define RSCRAM_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rscram/bitword.hpp"
#include "rscram/permutation.hpp"

namespace rscram {

struct NodeId {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

enum EdgeKind : std::uint8_t {
  kEdgeHorizontal = 1,  // (row, col-1) -> (row, col)
  kEdgeWrap = 2,        // (row, 2^g-1) -> (row+1, 0)
  kEdgePermutation = 4, // layer edges induced by the traced words
};

struct ParentRef {
  NodeId node;
  std::uint8_t kinds = 0;  // EdgeKind bitmask; parallel edges collapse here
  friend bool operator==(const ParentRef&, const ParentRef&) = default;
};

// Layered DAG with 2*lambda*g + 1 rows of 2^g columns.  Rows [0, g] of a
// block carry the word-induced permutation edges, rows [g, 2g] their
// edge-reversed mirror; blocks are stacked by identifying boundary rows.
// Immutable after construction.
class RiffleGraph {
 public:
  std::size_t garlic() const { return g_; }
  std::size_t lambda() const { return lambda_; }
  std::size_t width() const { return width_; }
  std::size_t rows() const { return 2 * lambda_ * g_ + 1; }
  std::size_t node_count() const { return rows() * width_; }
  const std::vector<BitWord>& layer_words() const { return words_; }

  std::size_t node_index(NodeId id) const { return id.row * width_ + id.col; }
  NodeId node_at(std::size_t index) const {
    return NodeId{static_cast<std::uint32_t>(index / width_),
                  static_cast<std::uint32_t>(index % width_)};
  }
  bool contains(NodeId id) const { return id.row < rows() && id.col < width_; }

  // Canonical order: horizontal predecessor first, then the other parents by
  // ascending source column.  Duplicate (u, v) pairs are merged.
  std::span<const ParentRef> parents(NodeId id) const;

  // The word governing the permutation edges between rows `layer`, `layer`+1.
  const BitWord& word_for_layer(std::size_t layer) const;
  bool layer_is_mirrored(std::size_t layer) const;

  // Copy with one parent relation dropped; exists so validators can be fed
  // damaged graphs as negative controls.
  RiffleGraph without_edge(NodeId from, NodeId to) const;

 private:
  friend RiffleGraph gen_graph_from_words(std::size_t g,
                                          std::vector<BitWord> words,
                                          std::size_t lambda);
  RiffleGraph() = default;

  std::size_t g_ = 0;
  std::size_t lambda_ = 0;
  std::size_t width_ = 0;
  std::vector<BitWord> words_;
  std::vector<std::vector<ParentRef>> parents_;
};

// Builds the graph for sigma: binary representation, trajectory tracing,
// then the stacked construction above.
RiffleGraph gen_graph(std::size_t g, const Permutation& sigma,
                      std::size_t lambda);

// Same construction from explicit per-layer words (no balance requirement);
// the entry point for synthetic control graphs and JSON import.
RiffleGraph gen_graph_from_words(std::size_t g, std::vector<BitWord> words,
                                 std::size_t lambda);

// Permutation-kind edges between rows layer, layer+1 as sorted (src, dst)
// column pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> permutation_layer_edges(
    const RiffleGraph& graph, std::size_t layer);

struct ValidationReport {
  std::size_t node_count = 0;
  std::size_t expected_node_count = 0;
  std::size_t edge_count = 0;
  std::size_t horizontal_edges = 0;
  std::size_t expected_horizontal_edges = 0;
  std::size_t wrap_edges = 0;
  std::size_t permutation_edges = 0;
  std::size_t max_indegree = 0;
  std::size_t source_count = 0;
  std::size_t sink_count = 0;
  bool source_is_origin = false;
  bool sink_is_last = false;
  bool row0_indegree_ok = false;
  bool mirror_symmetric = false;
  bool topological_order_ok = false;
  bool all_pass = false;
  std::vector<std::string> notes;

  std::string to_json() const;
};

ValidationReport validate_structure(const RiffleGraph& graph);

enum class ExportFormat { kDot, kAdjacencyJson };

std::string export_graph(const RiffleGraph& graph, ExportFormat format);
std::string export_dot(const RiffleGraph& graph);
std::string export_json(const RiffleGraph& graph);

// Parses the adjacency JSON, rebuilds the graph from its words and verifies
// the listed parent table matches; throws DecodeError on any inconsistency.
RiffleGraph import_json(std::string_view text);

}  // namespace rscram

#endif  // RSCRAM_GRAPH_HPP_
