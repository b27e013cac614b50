#include "binf/basic_crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace binf {

std::string element_label(const WeightVector& w) {
  std::string bars, plain;
  for (int i = 1; i <= w.rank; ++i) {
    if (w[i] == -1) bars += "-" + std::to_string(i);
    if (w[i] == 1) plain += "+" + std::to_string(i);
  }
  return bars + plain;
}

std::string pretty_label(const WeightVector& w) {
  std::string bars, plain;
  for (int i = 1; i <= w.rank; ++i) {
    if (w[i] == -1) bars += std::to_string(i) + "̄";
    if (w[i] == 1) plain += std::to_string(i);
  }
  return bars + plain;
}

WeightVector parse_label(LieType t, std::string_view text) {
  WeightVector w(t.rank());
  if (text.empty()) throw std::invalid_argument("empty element label");
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char sign = text[pos];
    if (sign != '+' && sign != '-') throw std::invalid_argument("malformed element label '" + std::string(text) + "'");
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9')
      throw std::invalid_argument("malformed element label '" + std::string(text) + "'");
    const int i = text[pos] - '0';
    ++pos;
    if (i > t.rank() || w[i] != 0)
      throw std::invalid_argument("bad index in element label '" + std::string(text) + "'");
    w[i] = sign == '+' ? 1 : -1;
  }
  if (element_label(w) != text)
    throw std::invalid_argument("element label '" + std::string(text) + "' is not in canonical order");
  return w;
}

std::optional<NodeId> BasicCrystalGraph::find(const WeightVector& w) const {
  for (NodeId id = 0; id < size(); ++id)
    if (nodes_[id].weight == w) return id;
  return std::nullopt;
}

NodeId BasicCrystalGraph::find_label(std::string_view label) const {
  const auto id = find(parse_label(type_, label));
  if (!id) throw std::invalid_argument("'" + std::string(label) + "' is not an element of the " + type_.name() + " basic crystal");
  return *id;
}

int BasicCrystalGraph::in_degree(NodeId id) const {
  int d = 0;
  for (int v : in_.at(id)) d += v >= 0;
  return d;
}

int BasicCrystalGraph::out_degree(NodeId id) const {
  int d = 0;
  for (int v : out_.at(id)) d += v >= 0;
  return d;
}

bool BasicCrystalGraph::reaches(NodeId from, NodeId to) const {
  if (from < 0 || from >= size() || to < 0 || to >= size()) throw std::out_of_range("unknown basic crystal node");
  return reach_[from][to];
}

BasicCrystalGraph generate_basic(LieType t) {
  BasicCrystalGraph g;
  g.type_ = t;
  const int n = t.rank();

  WeightVector top(n);
  top[t.kind() == LieKind::E6 ? 1 : 7] = 1;

  std::map<WeightVector, NodeId> index;
  std::deque<NodeId> queue;
  auto add = [&](const WeightVector& w) {
    const auto [it, fresh] = index.emplace(w, g.size());
    if (fresh) {
      g.nodes_.push_back(BasicElement{w});
      std::array<int, kMaxRank> none;
      none.fill(-1);
      g.out_.push_back(none);
      g.in_.push_back(none);
      queue.push_back(it->second);
    }
    return it->second;
  };
  add(top);
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      if (g.nodes_[x].weight[i] != 1) continue;
      const NodeId y = add(g.nodes_[x].weight - simple_root_as_weight(t, i));
      g.out_[x][i - 1] = y;
      g.in_[y][i - 1] = x;
      g.arrows_.push_back(Arrow{x, i, y});
    }
  }
  if (g.size() > BasicCrystalGraph::kMaxNodes) throw std::logic_error("basic crystal exceeds node capacity");

  // Arrows only increase the id, so a reverse sweep closes reachability.
  g.reach_.assign(g.size(), {});
  for (NodeId x = g.size() - 1; x >= 0; --x) {
    g.reach_[x].set(x);
    for (int i = 0; i < n; ++i)
      if (g.out_[x][i] >= 0) g.reach_[x] |= g.reach_[g.out_[x][i]];
  }
  return g;
}

RowInterval row_interval(LieType t, int r) {
  const int top = t.row_count();
  if (r < 1 || r > top) throw std::out_of_range("row index " + std::to_string(r) + " out of range for " + t.name());
  if (r == top) return {t.kind() == LieKind::E6 ? "+1" : "+7", ""};
  if (t.kind() == LieKind::E7 && r == 5) return {"-7+1", "-5+7"};
  switch (r) {
    case 4: return {"-1+2", "-6+1"};
    case 3: return {"-2+3", "-4+2"};
    case 2: return {"-3+4+6", "-5-6+3"};
    default: return {"-4+5+6", "-5+6"};
  }
}

RowGraph::RowGraph(std::shared_ptr<const BasicCrystalGraph> basic, int row, NodeId source_hint, NodeId sink_hint)
    : basic_(std::move(basic)), row_(row) {
  const BasicCrystalGraph& g = *basic_;
  local_.assign(g.size(), -1);
  std::vector<NodeId> members;
  for (NodeId c = 0; c < g.size(); ++c)
    if (g.reaches(source_hint, c) && g.reaches(c, sink_hint)) members.push_back(c);

  auto is_member = [&](NodeId c) { return std::binary_search(members.begin(), members.end(), c); };
  for (const Arrow& a : g.arrows())
    if (is_member(a.from) && is_member(a.to)) arrows_.push_back(a);

  // Temporary local numbering in id (topological) order.
  std::vector<int> tmp(g.size(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) tmp[members[k]] = static_cast<int>(k);
  const int m = static_cast<int>(members.size());
  std::vector<int> indeg(m, 0), outdeg(m, 0);
  for (const Arrow& a : arrows_) {
    ++outdeg[tmp[a.from]];
    ++indeg[tmp[a.to]];
  }
  std::vector<NodeId> sources, sinks;
  for (int k = 0; k < m; ++k) {
    if (indeg[k] == 0) sources.push_back(members[k]);
    if (outdeg[k] == 0) sinks.push_back(members[k]);
  }
  if (sources.size() != 1 || sinks.size() != 1)
    throw std::logic_error("row graph " + std::to_string(row) + " lacks a unique source and sink");
  source_ = sources.front();
  sink_ = sinks.front();

  // Shortest and longest distances; equal everywhere iff graded.
  constexpr int kUnset = -1;
  std::vector<int> src_min(m, kUnset), src_max(m, kUnset), snk_min(m, kUnset), snk_max(m, kUnset);
  src_min[tmp[source_]] = src_max[tmp[source_]] = 0;
  for (int k = 0; k < m; ++k) {
    for (const Arrow& a : arrows_) {
      if (a.from != members[k] || src_min[k] == kUnset) continue;
      const int t = tmp[a.to];
      src_min[t] = src_min[t] == kUnset ? src_min[k] + 1 : std::min(src_min[t], src_min[k] + 1);
      src_max[t] = std::max(src_max[t], src_max[k] + 1);
    }
  }
  snk_min[tmp[sink_]] = snk_max[tmp[sink_]] = 0;
  for (int k = m - 1; k >= 0; --k) {
    for (const Arrow& a : arrows_) {
      if (a.to != members[k] || snk_min[k] == kUnset) continue;
      const int f = tmp[a.from];
      snk_min[f] = snk_min[f] == kUnset ? snk_min[k] + 1 : std::min(snk_min[f], snk_min[k] + 1);
      snk_max[f] = std::max(snk_max[f], snk_max[k] + 1);
    }
  }
  for (int k = 0; k < m; ++k)
    if (src_min[k] != src_max[k] || snk_min[k] != snk_max[k] || src_min[k] == kUnset || snk_min[k] == kUnset)
      graded_ = false;

  nodes_ = members;
  std::stable_sort(nodes_.begin(), nodes_.end(),
                   [&](NodeId a, NodeId b) { return src_min[tmp[a]] < src_min[tmp[b]]; });
  for (std::size_t k = 0; k < nodes_.size(); ++k) local_[nodes_[k]] = static_cast<int>(k);
  dist_source_.resize(m);
  dist_sink_.resize(m);
  for (NodeId c : nodes_) {
    dist_source_[local_[c]] = src_min[tmp[c]];
    dist_sink_[local_[c]] = snk_min[tmp[c]];
  }

  std::stable_sort(arrows_.begin(), arrows_.end(), [&](const Arrow& a, const Arrow& b) {
    if (local_[a.from] != local_[b.from]) return local_[a.from] < local_[b.from];
    return a.color < b.color;
  });
  in_arrows_.assign(m, {});
  out_arrows_.assign(m, {});
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    out_arrows_[local_[arrows_[k].from]].push_back(static_cast<int>(k));
    in_arrows_[local_[arrows_[k].to]].push_back(static_cast<int>(k));
  }
  for (NodeId c : nodes_)
    if (in_arrows_[local_[c]].size() == 1) bar_.push_back(c);

  for (NodeId c = source_; c != sink_;) {
    const int a = out_arrows_[local_[c]].front();  // sorted by color
    canonical_.push_back(a);
    c = arrows_[a].to;
  }

  build_groups();
}

int RowGraph::local(NodeId id) const {
  if (!contains(id)) throw std::out_of_range("node is not in row graph " + std::to_string(row_));
  return local_[id];
}

std::vector<NodeId> RowGraph::parents(NodeId id) const {
  std::vector<NodeId> out;
  for (int a : in_arrows(id)) out.push_back(arrows_[a].from);
  return out;
}

std::optional<NodeId> RowGraph::out(NodeId id, int color) const {
  for (int a : out_arrows(id))
    if (arrows_[a].color == color) return arrows_[a].to;
  return std::nullopt;
}

bool RowGraph::comes_from(NodeId x, NodeId c) const {
  local(x);
  local(c);
  return basic_->reaches(c, x);
}

bool RowGraph::in_bar(NodeId id) const { return contains(id) && in_arrows_[local_[id]].size() == 1; }

std::vector<NodeId> RowGraph::circ() const {
  std::vector<NodeId> out;
  for (NodeId c : nodes_)
    if (c != source_) out.push_back(c);
  return out;
}

int RowGraph::group_of_head(NodeId c) const {
  for (std::size_t k = 0; k < groups_.size(); ++k)
    if (groups_[k].head == c) return static_cast<int>(k);
  throw std::invalid_argument(basic_->label(c) + " does not head an arrow group of row " + std::to_string(row_));
}

int RowGraph::component_color(NodeId c) const {
  if (!in_bar(c))
    throw std::invalid_argument(basic_->label(c) + " is not an in-degree-1 node of row " + std::to_string(row_));
  return arrows_[in_arrows_[local_[c]].front()].color;
}

std::vector<int> RowGraph::random_path(std::mt19937_64& rng) const {
  std::vector<int> path;
  for (NodeId c = source_; c != sink_;) {
    const auto& outs = out_arrows_[local_[c]];
    std::uniform_int_distribution<std::size_t> pick(0, outs.size() - 1);
    const int a = outs[pick(rng)];
    path.push_back(a);
    c = arrows_[a].to;
  }
  return path;
}

void RowGraph::build_groups() {
  const int na = static_cast<int>(arrows_.size());
  std::vector<int> parent(na);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Parallel sides of a commuting square: x ->_i y, x' ->_i y' with x ->_j x', y ->_j y'.
  for (int p = 0; p < na; ++p) {
    for (int q = 0; q < na; ++q) {
      if (p == q || arrows_[p].color != arrows_[q].color) continue;
      for (int j = 1; j <= type().rank(); ++j) {
        const auto x2 = out(arrows_[p].from, j);
        const auto y2 = out(arrows_[p].to, j);
        if (x2 && y2 && *x2 == arrows_[q].from && *y2 == arrows_[q].to) {
          parent[find(p)] = find(q);
          break;
        }
      }
    }
  }
  std::map<int, int> root_to_group;
  group_of_arrow_.assign(na, -1);
  std::vector<ArrowGroup> raw;
  for (int a = 0; a < na; ++a) {
    const int r = find(a);
    auto [it, fresh] = root_to_group.emplace(r, static_cast<int>(raw.size()));
    if (fresh) raw.push_back(ArrowGroup{arrows_[a].color, {}, -1});
    raw[it->second].arrows.push_back(a);
  }
  for (ArrowGroup& grp : raw) {
    int heads = 0;
    for (int a : grp.arrows)
      if (in_bar(arrows_[a].to)) {
        grp.head = arrows_[a].to;
        ++heads;
      }
    if (heads != 1)
      throw std::logic_error("arrow group of color " + std::to_string(grp.color) + " in row " + std::to_string(row_) +
                             " has " + std::to_string(heads) + " heads in the in-degree-1 subset");
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [&](const ArrowGroup& a, const ArrowGroup& b) { return local_[a.head] < local_[b.head]; });
  groups_ = std::move(raw);
  for (std::size_t k = 0; k < groups_.size(); ++k)
    for (int a : groups_[k].arrows) group_of_arrow_[a] = static_cast<int>(k);
}

}  // namespace binf
