#include "rscram/graph.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include <nlohmann/json.hpp>

#include "rscram/errors.hpp"
#include "rscram/trajectory.hpp"

namespace rscram {

namespace {

// (2^16 columns) x (2*64*16+1 rows) is already ~134M nodes; beyond that the
// materialized parent table stops being a desk-scale object.
constexpr std::size_t kMaxMaterializedGarlic = 16;

void canonicalize(std::vector<ParentRef>& list, std::uint32_t row) {
  std::sort(list.begin(), list.end(), [&](const ParentRef& a, const ParentRef& b) {
    bool ah = a.node.row == row, bh = b.node.row == row;
    if (ah != bh) return ah;  // horizontal predecessor first
    return a.node < b.node;
  });
  std::vector<ParentRef> merged;
  for (const ParentRef& p : list) {
    if (!merged.empty() && merged.back().node == p.node)
      merged.back().kinds |= p.kinds;
    else
      merged.push_back(p);
  }
  list = std::move(merged);
}

}  // namespace

std::span<const ParentRef> RiffleGraph::parents(NodeId id) const {
  if (!contains(id)) throw UsageError("parents: node outside graph");
  return parents_[node_index(id)];
}

const BitWord& RiffleGraph::word_for_layer(std::size_t layer) const {
  if (layer + 1 >= rows()) throw UsageError("word_for_layer: no such layer");
  std::size_t m = layer % (2 * g_);
  return m < g_ ? words_[m] : words_[2 * g_ - 1 - m];
}

bool RiffleGraph::layer_is_mirrored(std::size_t layer) const {
  if (layer + 1 >= rows()) throw UsageError("layer_is_mirrored: no such layer");
  return layer % (2 * g_) >= g_;
}

RiffleGraph RiffleGraph::without_edge(NodeId from, NodeId to) const {
  if (!contains(from) || !contains(to))
    throw UsageError("without_edge: node outside graph");
  RiffleGraph copy = *this;
  auto& list = copy.parents_[node_index(to)];
  std::erase_if(list, [&](const ParentRef& p) { return p.node == from; });
  return copy;
}

RiffleGraph gen_graph(std::size_t g, const Permutation& sigma,
                      std::size_t lambda) {
  if (g == 0) throw UsageError("gen_graph: garlic must be >= 1");
  if (lambda == 0) throw UsageError("gen_graph: lambda must be >= 1");
  if (sigma.size() != (std::size_t{1} << g))
    throw UsageError("gen_graph: permutation size is not 2^g");
  BitMatrix traced = trace_trajectories(binary_representation(sigma, g));
  return gen_graph_from_words(g, traced.columns(), lambda);
}

RiffleGraph gen_graph_from_words(std::size_t g, std::vector<BitWord> words,
                                 std::size_t lambda) {
  if (g == 0 || lambda == 0)
    throw UsageError("gen_graph_from_words: g and lambda must be >= 1");
  if (g > kMaxMaterializedGarlic)
    throw ResourceError("gen_graph_from_words: garlic too large to materialize");
  std::size_t n = std::size_t{1} << g;
  if (words.size() != g)
    throw UsageError("gen_graph_from_words: need exactly g words");
  for (const BitWord& w : words)
    if (w.size() != n)
      throw UsageError("gen_graph_from_words: word length is not 2^g");

  RiffleGraph graph;
  graph.g_ = g;
  graph.lambda_ = lambda;
  graph.width_ = n;
  graph.words_ = std::move(words);

  std::size_t rows = 2 * lambda * g + 1;
  graph.parents_.assign(rows * n, {});
  auto add = [&](NodeId parent, NodeId child, std::uint8_t kind) {
    graph.parents_[graph.node_index(child)].push_back(ParentRef{parent, kind});
  };

  for (std::uint32_t row = 0; row < rows; ++row)
    for (std::uint32_t col = 1; col < n; ++col)
      add({row, col - 1}, {row, col}, kEdgeHorizontal);

  for (std::uint32_t layer = 0; layer + 1 < rows; ++layer) {
    add({layer, static_cast<std::uint32_t>(n - 1)}, {layer + 1, 0}, kEdgeWrap);
    const BitWord& word = graph.word_for_layer(layer);
    Permutation pi = riffle_permutation(word);
    Permutation pibar = riffle_permutation(word.complemented());
    if (graph.layer_is_mirrored(layer)) {
      // Edge-reversed copy of the matching upper layer.
      for (std::uint32_t i = 0; i < n; ++i) {
        add({layer, pi(i)}, {layer + 1, i}, kEdgePermutation);
        add({layer, pibar(i)}, {layer + 1, i}, kEdgePermutation);
      }
    } else {
      for (std::uint32_t i = 0; i < n; ++i) {
        add({layer, i}, {layer + 1, pi(i)}, kEdgePermutation);
        add({layer, i}, {layer + 1, pibar(i)}, kEdgePermutation);
      }
    }
  }

  for (std::size_t idx = 0; idx < graph.parents_.size(); ++idx)
    canonicalize(graph.parents_[idx], graph.node_at(idx).row);
  return graph;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> permutation_layer_edges(
    const RiffleGraph& graph, std::size_t layer) {
  if (layer + 1 >= graph.rows())
    throw UsageError("permutation_layer_edges: no such layer");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t col = 0; col < graph.width(); ++col) {
    NodeId child{static_cast<std::uint32_t>(layer + 1), col};
    for (const ParentRef& p : graph.parents(child))
      if ((p.kinds & kEdgePermutation) && p.node.row == layer)
        edges.emplace_back(p.node.col, col);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

ValidationReport validate_structure(const RiffleGraph& graph) {
  ValidationReport r;
  std::size_t g = graph.garlic(), n = graph.width(), rows = graph.rows();
  r.node_count = graph.node_count();
  r.expected_node_count = n * (2 * graph.lambda() * g + 1);
  r.expected_horizontal_edges = rows * (n - 1);

  std::vector<std::size_t> outdeg(graph.node_count(), 0);
  bool topo_ok = true;
  std::size_t sources = 0;
  bool row0_ok = true;
  for (std::size_t idx = 0; idx < graph.node_count(); ++idx) {
    NodeId id = graph.node_at(idx);
    auto plist = graph.parents(id);
    r.edge_count += plist.size();
    r.max_indegree = std::max(r.max_indegree, plist.size());
    if (plist.empty()) {
      ++sources;
      if (!(id.row == 0 && id.col == 0)) r.notes.push_back("unexpected source");
      else r.source_is_origin = true;
    }
    if (id.row == 0 && id.col > 0 && plist.size() != 1) row0_ok = false;
    for (const ParentRef& p : plist) {
      if (p.kinds & kEdgeHorizontal) ++r.horizontal_edges;
      if (p.kinds & kEdgeWrap) ++r.wrap_edges;
      if (p.kinds & kEdgePermutation) ++r.permutation_edges;
      ++outdeg[graph.node_index(p.node)];
      if (!(p.node.row < id.row || (p.node.row == id.row && p.node.col < id.col)))
        topo_ok = false;
    }
  }
  r.source_count = sources;
  r.row0_indegree_ok = row0_ok;
  r.topological_order_ok = topo_ok;

  for (std::size_t idx = 0; idx < graph.node_count(); ++idx) {
    if (outdeg[idx] == 0) {
      ++r.sink_count;
      NodeId id = graph.node_at(idx);
      if (id.row == rows - 1 && id.col == n - 1) r.sink_is_last = true;
    }
  }

  // Every lower layer must be the edge reversal of its partner upper layer.
  r.mirror_symmetric = true;
  for (std::size_t block = 0; block < graph.lambda(); ++block) {
    std::size_t base = block * 2 * g;
    for (std::size_t m = 0; m < g; ++m) {
      auto lower = permutation_layer_edges(graph, base + g + m);
      auto upper = permutation_layer_edges(graph, base + g - 1 - m);
      for (auto& e : upper) std::swap(e.first, e.second);
      std::sort(upper.begin(), upper.end());
      if (lower != upper) r.mirror_symmetric = false;
    }
  }

  r.all_pass = r.node_count == r.expected_node_count && r.max_indegree <= 3 &&
               r.horizontal_edges == r.expected_horizontal_edges &&
               r.wrap_edges == rows - 1 && r.source_count == 1 &&
               r.sink_count == 1 && r.source_is_origin && r.sink_is_last &&
               r.row0_indegree_ok && r.mirror_symmetric &&
               r.topological_order_ok;
  return r;
}

std::string ValidationReport::to_json() const {
  nlohmann::json j{{"node_count", node_count},
                   {"expected_node_count", expected_node_count},
                   {"edge_count", edge_count},
                   {"horizontal_edges", horizontal_edges},
                   {"expected_horizontal_edges", expected_horizontal_edges},
                   {"wrap_edges", wrap_edges},
                   {"permutation_edges", permutation_edges},
                   {"max_indegree", max_indegree},
                   {"source_count", source_count},
                   {"sink_count", sink_count},
                   {"source_is_origin", source_is_origin},
                   {"sink_is_last", sink_is_last},
                   {"row0_indegree_ok", row0_indegree_ok},
                   {"mirror_symmetric", mirror_symmetric},
                   {"topological_order_ok", topological_order_ok},
                   {"all_pass", all_pass},
                   {"notes", notes}};
  return j.dump();
}

std::string export_dot(const RiffleGraph& graph) {
  std::string out = "digraph rscram {\n";
  auto name = [](NodeId id) {
    return "\"v_" + std::to_string(id.col) + "^" + std::to_string(id.row) + "\"";
  };
  for (std::size_t idx = 0; idx < graph.node_count(); ++idx)
    out += "  " + name(graph.node_at(idx)) + ";\n";
  for (std::size_t idx = 0; idx < graph.node_count(); ++idx) {
    NodeId id = graph.node_at(idx);
    for (const ParentRef& p : graph.parents(id))
      out += "  " + name(p.node) + " -> " + name(id) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const RiffleGraph& graph) {
  nlohmann::json j;
  j["g"] = graph.garlic();
  j["lambda"] = graph.lambda();
  nlohmann::json words = nlohmann::json::array();
  for (const BitWord& w : graph.layer_words()) words.push_back(w.to_string());
  j["words"] = std::move(words);
  nlohmann::json parents = nlohmann::json::array();
  for (std::size_t idx = 0; idx < graph.node_count(); ++idx) {
    nlohmann::json list = nlohmann::json::array();
    for (const ParentRef& p : graph.parents(graph.node_at(idx)))
      list.push_back({p.node.row, p.node.col});
    parents.push_back(std::move(list));
  }
  j["parents"] = std::move(parents);
  return j.dump();
}

std::string export_graph(const RiffleGraph& graph, ExportFormat format) {
  switch (format) {
    case ExportFormat::kDot:
      return export_dot(graph);
    case ExportFormat::kAdjacencyJson:
      return export_json(graph);
  }
  throw UsageError("export_graph: unsupported format");
}

RiffleGraph import_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("graph JSON: ") + e.what());
  }
  std::optional<RiffleGraph> graph;
  try {
    std::size_t g = j.at("g").get<std::size_t>();
    std::size_t lambda = j.at("lambda").get<std::size_t>();
    std::vector<BitWord> words;
    for (const auto& w : j.at("words"))
      words.push_back(BitWord::from_string(w.get<std::string>()));
    graph.emplace(gen_graph_from_words(g, std::move(words), lambda));

    const auto& parents = j.at("parents");
    if (parents.size() != graph->node_count())
      throw DecodeError("graph JSON: parent table size mismatch");
    for (std::size_t idx = 0; idx < graph->node_count(); ++idx) {
      auto plist = graph->parents(graph->node_at(idx));
      const auto& jlist = parents[idx];
      if (jlist.size() != plist.size())
        throw DecodeError("graph JSON: parent list inconsistent with words");
      for (std::size_t k = 0; k < plist.size(); ++k) {
        NodeId listed{jlist[k].at(0).get<std::uint32_t>(),
                      jlist[k].at(1).get<std::uint32_t>()};
        if (listed != plist[k].node)
          throw DecodeError("graph JSON: parent list inconsistent with words");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("graph JSON: ") + e.what());
  } catch (const DecodeError&) {
    throw;
  } catch (const UsageError& e) {
    throw DecodeError(std::string("graph JSON: ") + e.what());
  }
  return std::move(*graph);
}

}  // namespace rscram
