#pragma once

#include <bitset>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "binf/root_system.hpp"

namespace binf {

using NodeId = int;

// ASCII label of a minuscule weight: barred indices as "-i", unbarred as
// "+i", bars first, each group ascending. -L2-L6-L7+L1+L3 -> "-2-6-7+1+3".
std::string element_label(const WeightVector& w);
// Same ordering with combining overlines ("2̄6̄7̄13"); display only.
std::string pretty_label(const WeightVector& w);
// Inverse of element_label. Throws std::invalid_argument on malformed text.
WeightVector parse_label(LieType t, std::string_view text);

struct BasicElement {
  WeightVector weight;

  std::string label() const { return element_label(weight); }
};

struct Arrow {
  NodeId from = -1;
  int color = 0;
  NodeId to = -1;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// The minuscule crystal B(L1) (E6) or B(L7) (E7). Node ids follow the
// breadth-first generation order, which is a topological order.
class BasicCrystalGraph {
 public:
  static constexpr int kMaxNodes = 64;

  LieType type() const { return type_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const BasicElement& element(NodeId id) const { return nodes_.at(id); }
  std::string label(NodeId id) const { return element(id).label(); }
  const std::vector<BasicElement>& nodes() const { return nodes_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<NodeId> find(const WeightVector& w) const;
  // Throws std::invalid_argument for an unparsable or absent label.
  NodeId find_label(std::string_view label) const;

  std::optional<NodeId> out(NodeId id, int color) const { return to_opt(out_[id][color - 1]); }
  std::optional<NodeId> in(NodeId id, int color) const { return to_opt(in_[id][color - 1]); }
  int in_degree(NodeId id) const;
  int out_degree(NodeId id) const;
  NodeId highest() const { return 0; }

  // True iff from == to or a directed path from -> to exists, i.e. to <= from.
  // Throws std::out_of_range for unknown ids.
  bool reaches(NodeId from, NodeId to) const;

  // minuscule statistics
  int eps(NodeId id, int color) const { return element(id).weight[color] == -1 ? 1 : 0; }
  int phi(NodeId id, int color) const { return element(id).weight[color] == 1 ? 1 : 0; }
  int pairing(NodeId id, int color) const { return element(id).weight[color]; }

  friend BasicCrystalGraph generate_basic(LieType t);

 private:
  static std::optional<NodeId> to_opt(int v) { return v < 0 ? std::nullopt : std::optional<NodeId>(v); }

  LieType type_;
  std::vector<BasicElement> nodes_;
  std::vector<Arrow> arrows_;
  std::vector<std::array<int, kMaxRank>> out_;
  std::vector<std::array<int, kMaxRank>> in_;
  std::vector<std::bitset<kMaxNodes>> reach_;
};

// Closure from the highest weight: x ->_i (wt(x) - alpha_i) whenever <h_i, wt(x)> = 1.
BasicCrystalGraph generate_basic(LieType t);

struct ArrowGroup {
  int color = 0;
  std::vector<int> arrows;  // indices into RowGraph::arrows()
  NodeId head = -1;          // the unique arrow head lying in the in-degree-1 subset
};

// Full subgraph C_r of the basic crystal spanned by an interval
// {c : sink <= c <= source}.
class RowGraph {
 public:
  RowGraph(std::shared_ptr<const BasicCrystalGraph> basic, int row, NodeId source_hint, NodeId sink_hint);

  int row() const { return row_; }
  LieType type() const { return basic_->type(); }
  const BasicCrystalGraph& basic() const { return *basic_; }

  // Sorted by distance from the source, then node id.
  const std::vector<NodeId>& nodes() const { return nodes_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  bool contains(NodeId id) const { return id >= 0 && id < static_cast<int>(local_.size()) && local_[id] >= 0; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }

  int in_degree(NodeId id) const { return static_cast<int>(in_arrows_.at(local(id)).size()); }
  int out_degree(NodeId id) const { return static_cast<int>(out_arrows_.at(local(id)).size()); }
  const std::vector<int>& in_arrows(NodeId id) const { return in_arrows_.at(local(id)); }
  const std::vector<int>& out_arrows(NodeId id) const { return out_arrows_.at(local(id)); }
  std::vector<NodeId> parents(NodeId id) const;
  std::optional<NodeId> out(NodeId id, int color) const;

  // x <= c within this row graph (x == c or a path c -> x).
  bool comes_from(NodeId x, NodeId c) const;

  int distance_from_source(NodeId id) const { return dist_source_.at(local(id)); }
  int distance_to_sink(NodeId id) const { return dist_sink_.at(local(id)); }
  // All source->c paths and all c->sink paths have a common length.
  bool is_graded() const { return graded_; }

  // C-bar_r: nodes of in-degree exactly 1, in nodes() order.
  const std::vector<NodeId>& indeg1_subset() const { return bar_; }
  bool in_bar(NodeId id) const;
  // C-circle_r: every node but the source, in nodes() order.
  std::vector<NodeId> circ() const;

  const std::vector<ArrowGroup>& arrow_groups() const { return groups_; }
  int group_of_arrow(int arrow_index) const { return group_of_arrow_.at(arrow_index); }
  // Index into arrow_groups() of the group headed by c. Throws if c is not in C-bar_r.
  int group_of_head(NodeId c) const;

  // Color of the unique incoming arrow of c in C-bar_r; throws std::invalid_argument otherwise.
  int component_color(NodeId c) const;

  // Source to sink, following the smallest outgoing color at each node.
  // Returned as arrow indices.
  const std::vector<int>& canonical_path() const { return canonical_; }
  // Uniform choice among outgoing arrows at each step.
  std::vector<int> random_path(std::mt19937_64& rng) const;

 private:
  int local(NodeId id) const;
  void build_groups();

  std::shared_ptr<const BasicCrystalGraph> basic_;
  int row_ = 0;
  std::vector<NodeId> nodes_;
  std::vector<int> local_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> in_arrows_, out_arrows_;
  NodeId source_ = -1, sink_ = -1;
  std::vector<int> dist_source_, dist_sink_;
  bool graded_ = true;
  std::vector<NodeId> bar_;
  std::vector<ArrowGroup> groups_;
  std::vector<int> group_of_arrow_;
  std::vector<int> canonical_;
};

// Interval endpoints (source, sink) defining row r, as labels.
struct RowInterval {
  std::string source;
  std::string sink;  // empty: computed (the whole crystal)
};
RowInterval row_interval(LieType t, int r);

}  // namespace binf
