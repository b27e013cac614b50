#include "binf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <omp.h>

#include "binf/coordinates.hpp"
#include "binf/io.hpp"

namespace binf {

namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
VerificationReport timed(std::string suite, LieType t, Body&& body) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.type = t;
  const auto start = Clock::now();
  body(rep);
  rep.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return rep;
}

ojson coords_only(const ReducedCounts& rc) { return coords_to_json(rc)["coords"]; }

// Closure under lowering. successors(state) returns (key, state) pairs; only
// the frontier expansion is parallel, the merge is serial so that the
// discovery order does not depend on scheduling.
template <class State, class Succ>
EnumerationResult closure(LieType t, int depth, const ReducedCounts& root_key, const State& root, Succ successors,
                          bool parallel, std::vector<State>* states) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  EnumerationResult res;
  res.type = t;
  res.depth = depth;
  std::unordered_set<ReducedCounts, ReducedCountsHash> seen{root_key};
  res.elements.push_back(root_key);
  if (states) states->push_back(root);
  std::vector<State> frontier{root};
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    const auto n = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<std::vector<std::pair<ReducedCounts, State>>> succ(frontier.size());
    std::exception_ptr error;
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
          succ[i] = successors(frontier[i]);
        } catch (...) {
#pragma omp critical(binf_closure_error)
          if (!error) error = std::current_exception();
        }
      }
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i) succ[i] = successors(frontier[i]);
    }
    if (error) std::rethrow_exception(error);
    std::vector<State> next;
    for (auto& list : succ)
      for (auto& [key, state] : list)
        if (seen.insert(key).second) {
          res.elements.push_back(key);
          if (states) states->push_back(state);
          next.push_back(std::move(state));
        }
    frontier = std::move(next);
  }
  for (const ReducedCounts& rc : res.elements) ++res.by_weight[depth_vector(rc)];
  return res;
}

std::vector<std::pair<ReducedCounts, MLTableau>> tableau_successors(const MLTableau& t) {
  std::vector<std::pair<ReducedCounts, MLTableau>> out;
  for (int i = 1; i <= t.type.rank(); ++i) {
    auto next = apply(t, i, Direction::Lower);
    if (!next) throw std::logic_error("lowering annihilated a tableau");
    out.emplace_back(reduced_counts(*next), std::move(*next));
  }
  return out;
}

std::vector<std::pair<ReducedCounts, ReducedCounts>> embedded_successors(const ReducedCounts& rc) {
  std::vector<std::pair<ReducedCounts, ReducedCounts>> out;
  const TensorOrder order = TensorOrder::canonical(rc.type);
  for (int i = 1; i <= rc.type.rank(); ++i) {
    auto next = apply_embedded(EmbeddedElement{rc}, i, Direction::Lower, order);
    out.emplace_back(next->coords, next->coords);
  }
  return out;
}

EnumerationResult run_tableaux(LieType t, int depth, bool parallel) {
  const MLTableau root = highest_tableau(t);
  std::vector<MLTableau> states;
  EnumerationResult res = closure(t, depth, reduced_counts(root), root, tableau_successors, parallel, &states);
  res.tableaux = std::move(states);
  return res;
}

EnumerationResult run_embedded(LieType t, int depth, bool parallel) {
  const ReducedCounts root = ReducedCounts::zeros(t);
  return closure<ReducedCounts>(t, depth, root, root, embedded_successors, parallel, nullptr);
}

// For each reduced coordinate, the reduced coordinates of the same row lying
// strictly above it. Coordinates are visited in row order, then by distance
// from the source, so that every upper coordinate comes first.
struct ReducedLayout {
  std::vector<int> order;
  std::vector<std::vector<int>> uppers;
};

const ReducedLayout& reduced_layout(LieType t) {
  static const auto build = [](LieType ty) {
    const CrystalModel& m = CrystalModel::get(ty);
    ReducedLayout l;
    l.uppers.resize(m.reduced_size());
    std::vector<int> order(m.reduced_size());
    std::iota(order.begin(), order.end(), 0);
    const auto& idx = m.reduced_index();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (idx[a].row != idx[b].row) return idx[a].row < idx[b].row;
      const RowGraph& rg = m.row(idx[a].row);
      return rg.distance_from_source(idx[a].node) < rg.distance_from_source(idx[b].node);
    });
    l.order = order;
    for (int a = 0; a < m.reduced_size(); ++a)
      for (int b = 0; b < m.reduced_size(); ++b)
        if (a != b && idx[a].row == idx[b].row && m.row(idx[a].row).comes_from(idx[a].node, idx[b].node))
          l.uppers[a].push_back(b);
    return l;
  };
  static const ReducedLayout e6 = build(LieType::e6());
  static const ReducedLayout e7 = build(LieType::e7());
  return t == LieType::e6() ? e6 : e7;
}

int upper_bound_of(const ReducedLayout& l, int pos, const std::vector<int>& values, int cap) {
  int bound = cap;
  for (int u : l.uppers[pos]) bound = std::min(bound, values[u]);
  return bound;
}

NodeId node(LieType t, const char* label) { return CrystalModel::get(t).basic().find_label(label); }

std::vector<std::string> labels(const BasicCrystalGraph& g, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (NodeId c : ids) out.push_back(g.label(c));
  return out;
}

// In-degree-1 subsets of each row, top row last.
std::vector<std::vector<std::string>> expected_bar_lists(LieType t) {
  std::vector<std::vector<std::string>> rows = {
      {"-5+6"},
      {"-5+6", "-4+5+6", "-6+4"},
      {"-4+2", "-3+2+5", "-5+6", "-4+5+6", "-6+4", "-3+4+6"},
      {"-6+1", "-3+1+6", "-4+2", "-2+1+5", "-3+2+5", "-5+6", "-4+5+6", "-6+4", "-3+4+6", "-2+3"},
  };
  if (t == LieType::e6()) {
    rows.push_back({"-5", "-4+5", "-3+4", "-2+6", "-6+1", "-3+1+6", "-4+2", "-1+5", "-2+1+5", "-3+2+5", "-5+6",
                    "-4+5+6", "-6+4", "-3+4+6", "-2+3", "-1+2"});
  } else {
    rows.push_back({"-5+7", "-4+5+7", "-3+4+7", "-2+6+7", "-6+1", "-3+1+6", "-4+2", "-1+5+7", "-2+1+5", "-3+2+5",
                    "-5+6", "-4+5+6", "-6+4", "-3+4+6", "-2+3", "-1+2"});
    rows.push_back({"-7",    "-1+7",    "-2+1",    "-3+2",    "-4+6",    "-6+5", "-3+5+6", "-2+4",    "-5+7",
                    "-4+5+7", "-1+6",    "-3+4+7", "-2+6+7", "-6+1",    "-3+1+6", "-7+5", "-1+5+7", "-4+2",
                    "-2+1+5", "-3+2+5", "-5+6",    "-6+4",    "-4+5+6", "-3+4+6", "-2+3", "-1+2",  "-7+1"});
  }
  return rows;
}

std::vector<std::pair<std::string, std::string>> expected_endpoints(LieType t) {
  std::vector<std::pair<std::string, std::string>> rows = {
      {"-4+5+6", "-5+6"}, {"-3+4+6", "-5-6+3"}, {"-2+3", "-4+2"}, {"-1+2", "-6+1"}};
  if (t == LieType::e6()) {
    rows.push_back({"+1", "-5"});
  } else {
    rows.push_back({"-7+1", "-5+7"});
    rows.push_back({"+7", "-7"});
  }
  return rows;
}

int barred_index(const WeightVector& w) {
  int found = 0;
  for (int i = 1; i <= w.rank; ++i)
    if (w[i] == -1) {
      if (found) return 0;
      found = i;
    }
  return found;
}

// Undirected component of `start` in the basic crystal with arrows of `color` removed.
std::set<NodeId> component_without(const BasicCrystalGraph& g, int color, NodeId start) {
  std::set<NodeId> seen{start};
  std::vector<NodeId> stack{start};
  while (!stack.empty()) {
    const NodeId c = stack.back();
    stack.pop_back();
    for (const Arrow& a : g.arrows()) {
      if (a.color == color) continue;
      NodeId other = -1;
      if (a.from == c) other = a.to;
      if (a.to == c) other = a.from;
      if (other >= 0 && seen.insert(other).second) stack.push_back(other);
    }
  }
  return seen;
}

}  // namespace

EnumerationResult enumerate_tableaux(LieType t, int depth) { return run_tableaux(t, depth, true); }
EnumerationResult enumerate_embedded(LieType t, int depth) { return run_embedded(t, depth, true); }

namespace serial {
EnumerationResult enumerate_tableaux(LieType t, int depth) { return run_tableaux(t, depth, false); }
EnumerationResult enumerate_embedded(LieType t, int depth) { return run_embedded(t, depth, false); }
}  // namespace serial

std::vector<ReducedCounts> enumerate_path_consistent(LieType t, int total) {
  const ReducedLayout& l = reduced_layout(t);
  std::vector<ReducedCounts> out;
  std::vector<int> values(l.uppers.size(), 0);
  auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
    if (k == l.order.size()) {
      out.push_back(ReducedCounts{t, values});
      return;
    }
    const int pos = l.order[k];
    const int bound = upper_bound_of(l, pos, values, budget);
    for (int v = 0; v <= bound; ++v) {
      values[pos] = v;
      self(self, k + 1, budget - v);
    }
    values[pos] = 0;
  };
  if (total >= 0) rec(rec, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

ReducedCounts random_path_consistent(LieType t, int max_entry, std::mt19937_64& rng) {
  const ReducedLayout& l = reduced_layout(t);
  ReducedCounts rc = ReducedCounts::zeros(t);
  for (int pos : l.order) {
    std::uniform_int_distribution<int> pick(0, upper_bound_of(l, pos, rc.values, max_entry));
    rc.values[pos] = pick(rng);
  }
  return rc;
}

MLTableau random_tableau(LieType t, int max_run, std::mt19937_64& rng) {
  const CrystalModel& m = CrystalModel::get(t);
  std::uniform_int_distribution<int> count(0, max_run);
  MLTableau out{t, {}};
  for (int r = 1; r <= m.row_count(); ++r) {
    const RowGraph& rg = m.row(r);
    std::vector<Run> runs{Run{rg.source(), out.row_length(r - 1) + 1}};
    for (int a : rg.random_path(rng))
      if (const int n = count(rng); n > 0) runs.push_back(Run{rg.arrows()[a].to, n});
    out.rows.push_back(std::move(runs));
  }
  if (!is_marginally_large(out)) throw std::logic_error("random tableau is not marginally large");
  return out;
}

void VerificationReport::fail(nlohmann::ordered_json example) {
  if (!pass) return;
  pass = false;
  counterexample = std::move(example);
}

nlohmann::ordered_json VerificationReport::to_json() const {
  ojson j{{"suite", suite}, {"type", type.name()}, {"pass", pass}};
  if (skipped) j["skipped"] = true;
  j["checked"] = checked;
  j["runtime_ms"] = runtime_ms;
  if (seed) j["seed"] = *seed;
  j["stats"] = stats;
  if (!counterexample.is_null()) j["counterexample"] = counterexample;
  return j;
}

int default_depth(LieType t) { return t == LieType::e6() ? 5 : 4; }

VerificationReport check_paper_lists(LieType t) {
  return timed("paper-lists", t, [&](VerificationReport& rep) {
    const CrystalModel& m = CrystalModel::get(t);
    const BasicCrystalGraph& g = m.basic();
    const auto bars = expected_bar_lists(t);
    const auto ends = expected_endpoints(t);
    for (int r = 1; r <= m.row_count(); ++r) {
      const RowGraph& rg = m.row(r);
      auto got = labels(g, rg.indeg1_subset());
      auto want = bars[r - 1];
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      ++rep.checked;
      if (got != want) rep.fail(ojson{{"row", r}, {"expected", want}, {"computed", got}});
      ++rep.checked;
      if (g.label(rg.source()) != ends[r - 1].first || g.label(rg.sink()) != ends[r - 1].second)
        rep.fail(ojson{{"row", r},
                       {"expected", {ends[r - 1].first, ends[r - 1].second}},
                       {"computed", {g.label(rg.source()), g.label(rg.sink())}}});
      // The incoming color of each flagged node is its single barred index.
      for (NodeId c : rg.indeg1_subset()) {
        ++rep.checked;
        const int want_color = barred_index(g.element(c).weight);
        const int got_color = rg.component_color(c);
        if (want_color != got_color)
          rep.fail(ojson{{"row", r}, {"node", g.label(c)}, {"expected_color", want_color}, {"computed_color", got_color}});
      }
      rep.stats["row" + std::to_string(r)] = rg.indeg1_subset().size();
    }
    if (t == LieType::e6()) {
      const std::pair<const char*, int> table[] = {
          {"-5", 5},     {"-4+5", 4},   {"-3+4", 3},   {"-2+6", 2},   {"-6+1", 6},   {"-3+1+6", 3},
          {"-4+2", 4},   {"-1+5", 1},   {"-2+1+5", 2}, {"-3+2+5", 3}, {"-5+6", 5},   {"-4+5+6", 4},
          {"-6+4", 6},   {"-3+4+6", 3}, {"-2+3", 2},   {"-1+2", 1}};
      for (auto [label, color] : table) {
        ++rep.checked;
        const int got = m.row(5).component_color(node(t, label));
        if (got != color) rep.fail(ojson{{"row", 5}, {"node", label}, {"expected_color", color}, {"computed_color", got}});
      }
      // C_4 is the component of -1+2 once the 1-arrows are removed.
      const std::set<NodeId> comp = component_without(g, 1, node(t, "-1+2"));
      const std::set<NodeId> row4(m.row(4).nodes().begin(), m.row(4).nodes().end());
      ++rep.checked;
      if (comp != row4) {
        std::vector<NodeId> a(comp.begin(), comp.end()), b(row4.begin(), row4.end());
        rep.fail(ojson{{"check", "row 4 as component without 1-arrows"},
                       {"component", labels(g, a)},
                       {"row", labels(g, b)}});
      }
    } else {
      ++rep.checked;
      const NodeId c = node(t, "-2-6-7+1+3");
      if (m.row(6).in_degree(c) != 3)
        rep.fail(ojson{{"check", "in-degree 3 node"}, {"node", g.label(c)}, {"in_degree", m.row(6).in_degree(c)}});
    }
  });
}

VerificationReport check_roots(LieType t) {
  return timed("roots", t, [&](VerificationReport& rep) {
    const CrystalModel& m = CrystalModel::get(t);
    const auto roots = positive_roots(t);
    const std::size_t want = t == LieType::e6() ? 36 : 63;
    const int top_height = t == LieType::e6() ? 11 : 17;
    rep.checked = 3;
    rep.stats["positive_roots"] = roots.size();
    rep.stats["reduced_coordinates"] = m.reduced_size();
    if (roots.size() != want) rep.fail(ojson{{"expected_roots", want}, {"computed_roots", roots.size()}});
    if (static_cast<std::size_t>(m.reduced_size()) != roots.size())
      rep.fail(ojson{{"reduced_coordinates", m.reduced_size()}, {"positive_roots", roots.size()}});
    if (roots.empty() || roots.back().sum() != top_height)
      rep.fail(ojson{{"expected_highest_height", top_height}, {"computed", roots.empty() ? 0 : roots.back().sum()}});
  });
}

VerificationReport check_structure(LieType t) {
  return timed("structure", t, [&](VerificationReport& rep) {
    const CrystalModel& m = CrystalModel::get(t);
    const BasicCrystalGraph& g = m.basic();
    const int want_nodes = t == LieType::e6() ? 27 : 56;
    ++rep.checked;
    if (g.size() != want_nodes) rep.fail(ojson{{"expected_nodes", want_nodes}, {"computed_nodes", g.size()}});
    // An i-arrow leaves exactly the nodes with <h_i, wt> = 1.
    for (NodeId c = 0; c < g.size(); ++c)
      for (int i = 1; i <= t.rank(); ++i) {
        ++rep.checked;
        if (g.out(c, i).has_value() != (g.pairing(c, i) == 1))
          rep.fail(ojson{{"node", g.label(c)}, {"color", i}, {"check", "arrow iff pairing 1"}});
      }
    std::vector<NodeId> deg3;
    for (NodeId c = 0; c < g.size(); ++c) {
      ++rep.checked;
      if (g.in_degree(c) > 3) rep.fail(ojson{{"node", g.label(c)}, {"in_degree", g.in_degree(c)}});
      if (g.in_degree(c) == 3) deg3.push_back(c);
    }
    ++rep.checked;
    const std::vector<std::string> want3 =
        t == LieType::e6() ? std::vector<std::string>{} : std::vector<std::string>{"-2-6-7+1+3"};
    if (labels(g, deg3) != want3) rep.fail(ojson{{"expected_in_degree_3", want3}, {"computed", labels(g, deg3)}});
    for (int r = 1; r <= m.row_count(); ++r) {
      const RowGraph& rg = m.row(r);
      ++rep.checked;
      if (!rg.is_graded()) rep.fail(ojson{{"row", r}, {"check", "graded"}});
      const int span = rg.distance_from_source(rg.sink());
      for (NodeId c : rg.nodes()) {
        ++rep.checked;
        if (rg.distance_from_source(c) + rg.distance_to_sink(c) != span)
          rep.fail(ojson{{"row", r}, {"node", g.label(c)}, {"check", "distance sum"}});
        ++rep.checked;
        if (!rg.comes_from(c, rg.source()) || !rg.comes_from(rg.sink(), c))
          rep.fail(ojson{{"row", r}, {"node", g.label(c)}, {"check", "between source and sink"}});
      }
      rep.stats["row" + std::to_string(r)] = ojson{{"nodes", rg.size()}, {"arrows", rg.arrows().size()}, {"length", span}};
    }
  });
}

VerificationReport check_groups(LieType t, int paths_per_row, std::uint64_t seed) {
  return timed("groups", t, [&](VerificationReport& rep) {
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const CrystalModel& m = CrystalModel::get(t);
    const BasicCrystalGraph& g = m.basic();
    for (int r = 1; r <= m.row_count(); ++r) {
      const RowGraph& rg = m.row(r);
      const auto& groups = rg.arrow_groups();
      ++rep.checked;
      if (groups.size() != rg.indeg1_subset().size())
        rep.fail(ojson{{"row", r}, {"groups", groups.size()}, {"flagged_nodes", rg.indeg1_subset().size()}});
      for (const ArrowGroup& grp : groups) {
        ++rep.checked;
        if (!rg.in_bar(grp.head) || rg.component_color(grp.head) != grp.color)
          rep.fail(ojson{{"row", r}, {"head", g.label(grp.head)}, {"color", grp.color}});
        for (int a : grp.arrows) {
          ++rep.checked;
          if (rg.arrows()[a].color != grp.color)
            rep.fail(ojson{{"row", r}, {"head", g.label(grp.head)}, {"arrow_color", rg.arrows()[a].color}});
        }
      }
      auto check_path = [&](const std::vector<int>& path, const char* kind) {
        std::vector<int> hits(groups.size(), 0);
        for (int a : path) ++hits[rg.group_of_arrow(a)];
        for (std::size_t k = 0; k < groups.size(); ++k) {
          ++rep.checked;
          if (hits[k] != 1) {
            ojson arrows = ojson::array();
            for (int a : path) arrows.push_back(rg.arrows()[a].color);
            rep.fail(ojson{{"row", r}, {"path", kind}, {"colors", arrows}, {"group_head", g.label(groups[k].head)},
                           {"crossings", hits[k]}});
          }
        }
      };
      check_path(rg.canonical_path(), "canonical");
      for (int k = 0; k < paths_per_row; ++k) check_path(rg.random_path(rng), "random");
      rep.stats["row" + std::to_string(r)] = groups.size();
    }
    if (t == LieType::e6()) {
      const RowGraph& top = m.row(5);
      const int per_color[] = {2, 3, 4, 3, 2, 2};
      for (int color = 1; color <= 6; ++color) {
        ++rep.checked;
        const auto n = std::count_if(top.arrow_groups().begin(), top.arrow_groups().end(),
                                     [&](const ArrowGroup& grp) { return grp.color == color; });
        if (n != per_color[color - 1])
          rep.fail(ojson{{"row", 5}, {"color", color}, {"expected_groups", per_color[color - 1]}, {"computed", n}});
      }
      const std::pair<const char*, std::size_t> heads[] = {
          {"-1+5", 5}, {"-1+2", 1}, {"-2+6", 2}, {"-2+1+5", 3}, {"-2+3", 1}};
      for (auto [label, size] : heads) {
        ++rep.checked;
        const auto got = top.arrow_groups()[top.group_of_head(node(t, label))].arrows.size();
        if (got != size) rep.fail(ojson{{"row", 5}, {"head", label}, {"expected_size", size}, {"computed", got}});
      }
    }
  });
}

VerificationReport check_commutation(LieType t, int depth, const Selector& selector) {
  return timed("commutation", t, [&](VerificationReport& rep) {
    const EnumerationResult en = enumerate_tableaux(t, depth);
    const TensorOrder order = TensorOrder::canonical(t);
    const auto n = static_cast<std::ptrdiff_t>(en.elements.size());
    std::ptrdiff_t first_bad = n;
    ojson first_example;
    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : checked)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      for (int i = 1; i <= t.rank(); ++i)
        for (Direction dir : {Direction::Raise, Direction::Lower}) {
          ++checked;
          std::optional<ReducedCounts> lhs, rhs;
          std::string lhs_error, rhs_error;
          try {
            if (auto r = apply(en.tableaux[k], i, dir)) lhs = reduced_counts(*r);
          } catch (const std::exception& e) {
            lhs_error = e.what();
          }
          try {
            if (auto r = apply_embedded(EmbeddedElement{en.elements[k]}, i, dir, order, selector)) rhs = r->coords;
          } catch (const std::exception& e) {
            rhs_error = e.what();
          }
          if (lhs_error.empty() && rhs_error.empty() && lhs == rhs) continue;
          ojson ex{{"coords", coords_only(en.elements[k])}, {"color", i}, {"direction", to_string(dir)}};
          ex["tableau_side"] = !lhs_error.empty() ? ojson(lhs_error) : lhs ? coords_only(*lhs) : ojson("zero");
          ex["embedded_side"] = !rhs_error.empty() ? ojson(rhs_error) : rhs ? coords_only(*rhs) : ojson("zero");
#pragma omp critical(binf_commutation)
          if (k < first_bad) {
            first_bad = k;
            first_example = std::move(ex);
          }
        }
    }
    rep.checked = checked;
    if (first_bad < n) rep.fail(std::move(first_example));
    rep.stats["depth"] = depth;
    rep.stats["elements"] = en.elements.size();
    rep.stats["threads"] = omp_get_max_threads();
  });
}

VerificationReport check_image(LieType t, int total) {
  return timed("image", t, [&](VerificationReport& rep) {
    auto closure_set = enumerate_embedded(t, total).elements;
    std::sort(closure_set.begin(), closure_set.end());
    const auto consistent = enumerate_path_consistent(t, total);
    rep.checked = consistent.size();
    rep.stats["total"] = total;
    rep.stats["closure"] = closure_set.size();
    rep.stats["path_consistent"] = consistent.size();
    std::vector<ReducedCounts> only_closure, only_consistent;
    std::set_difference(closure_set.begin(), closure_set.end(), consistent.begin(), consistent.end(),
                        std::back_inserter(only_closure));
    std::set_difference(consistent.begin(), consistent.end(), closure_set.begin(), closure_set.end(),
                        std::back_inserter(only_consistent));
    if (!only_closure.empty()) rep.fail(ojson{{"reached_but_not_path_consistent", coords_only(only_closure.front())}});
    if (!only_consistent.empty())
      rep.fail(ojson{{"path_consistent_but_not_reached", coords_only(only_consistent.front())}});
  });
}

VerificationReport check_kostant(LieType t, int max_height) {
  return timed("kostant", t, [&](VerificationReport& rep) {
    const EnumerationResult en = enumerate_embedded(t, max_height);
    const auto table = kostant_table(t, max_height);
    rep.stats["max_height"] = max_height;
    rep.stats["weights"] = en.by_weight.size();
    rep.stats["elements"] = en.elements.size();
    for (const auto& [mu, want] : table) {
      ++rep.checked;
      const auto it = en.by_weight.find(mu);
      const std::uint64_t got = it == en.by_weight.end() ? 0 : it->second;
      if (got != want) rep.fail(ojson{{"mu", to_string(mu)}, {"kostant", want}, {"enumerated", got}});
    }
    for (const auto& [mu, got] : en.by_weight) {
      ++rep.checked;
      if (!table.contains(mu)) rep.fail(ojson{{"mu", to_string(mu)}, {"kostant", 0}, {"enumerated", got}});
    }
  });
}

VerificationReport check_bijection(LieType t, int depth, int samples, int max_entry, std::uint64_t seed) {
  return timed("bijection", t, [&](VerificationReport& rep) {
    rep.seed = seed;
    const EnumerationResult en = enumerate_tableaux(t, depth);
    for (std::size_t k = 0; k < en.elements.size(); ++k) {
      ++rep.checked;
      std::string error;
      try {
        if (tableau_from_reduced(en.elements[k]) == en.tableaux[k]) continue;
      } catch (const std::exception& e) {
        error = e.what();
      }
      rep.fail(ojson{{"source", "enumerated"}, {"tableau", tableau_to_json(en.tableaux[k])}, {"error", error}});
      break;
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
      const ReducedCounts v = random_path_consistent(t, max_entry, rng);
      ++rep.checked;
      std::string error;
      try {
        const MLTableau tab = tableau_from_reduced(v);
        if (is_marginally_large(tab) && reduced_counts(tab) == v) continue;
      } catch (const std::exception& e) {
        error = e.what();
      }
      rep.fail(ojson{{"source", "random"}, {"sample", k}, {"coords", coords_only(v)}, {"error", error}});
      break;
    }
    rep.stats["enumerated"] = en.elements.size();
    rep.stats["samples"] = samples;
    rep.stats["max_entry"] = max_entry;
  });
}

VerificationReport check_lemma_tmin(LieType t, int depth, int samples, std::uint64_t seed) {
  return timed("lemma-tmin", t, [&](VerificationReport& rep) {
    rep.seed = seed;
    auto check = [&](const MLTableau& tab, ojson where) {
      ++rep.checked;
      const FullCounts fc = accumulated_counts(tab);
      std::string problem;
      if (!is_path_consistent_full(fc)) {
        problem = "accumulated counts are not path consistent";
      } else {
        try {
          if (extend_reduced(reduced_counts(tab)) != fc) problem = "extension from reduced counts differs";
        } catch (const std::exception& e) {
          problem = e.what();
        }
      }
      if (problem.empty()) return true;
      where["tableau"] = tableau_to_json(tab);
      where["problem"] = problem;
      rep.fail(std::move(where));
      return false;
    };
    const EnumerationResult en = enumerate_tableaux(t, depth);
    for (const MLTableau& tab : en.tableaux)
      if (!check(tab, ojson{{"source", "enumerated"}})) break;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k)
      if (!check(random_tableau(t, 3, rng), ojson{{"source", "random"}, {"sample", k}})) break;
    rep.stats["enumerated"] = en.tableaux.size();
    rep.stats["samples"] = samples;
  });
}

VerificationReport check_capmin(LieType t, int depth, int samples, std::uint64_t seed) {
  return timed("capmin", t, [&](VerificationReport& rep) {
    rep.seed = seed;
    const CrystalModel& m = CrystalModel::get(t);
    const BasicCrystalGraph& g = m.basic();
    struct Triple {
      int row;
      NodeId c1, c2, c0;
    };
    std::vector<Triple> triples;
    for (int r = 1; r <= m.row_count(); ++r) {
      const RowGraph& rg = m.row(r);
      const auto circ = rg.circ();
      auto below = [&](NodeId c) {
        std::vector<NodeId> out;
        for (NodeId x : circ)
          if (rg.comes_from(x, c)) out.push_back(x);
        return out;
      };
      for (std::size_t a = 0; a < circ.size(); ++a)
        for (std::size_t b = a + 1; b < circ.size(); ++b) {
          const NodeId c1 = circ[a], c2 = circ[b];
          if (rg.comes_from(c1, c2) || rg.comes_from(c2, c1)) continue;
          ++rep.checked;
          const auto d1 = below(c1), d2 = below(c2);
          std::vector<NodeId> meet;
          for (NodeId x : d1)
            if (std::find(d2.begin(), d2.end(), x) != d2.end()) meet.push_back(x);
          // The intersection is principal iff it contains an element above all its members.
          std::optional<NodeId> top;
          for (NodeId x : meet)
            if (std::all_of(meet.begin(), meet.end(), [&](NodeId y) { return rg.comes_from(y, x); })) top = x;
          if (!top) {
            rep.fail(ojson{{"row", r}, {"pair", {g.label(c1), g.label(c2)}}, {"intersection", labels(g, meet)}});
            continue;
          }
          triples.push_back(Triple{r, c1, c2, *top});
        }
    }
    rep.stats["incomparable_pairs"] = triples.size();
    if (t == LieType::e7()) {
      const NodeId hub = node(t, "-2-6-7+1+3");
      for (auto [x, y] : {std::pair{"-2+6+7", "-6-7+2"}, std::pair{"-3-7+2+6", "-2-6+3+7"}}) {
        ++rep.checked;
        const NodeId c1 = node(t, x), c2 = node(t, y);
        const bool found = std::any_of(triples.begin(), triples.end(), [&](const Triple& tr) {
          return tr.row == 6 && tr.c0 == hub && ((tr.c1 == c1 && tr.c2 == c2) || (tr.c1 == c2 && tr.c2 == c1));
        });
        if (!found) rep.fail(ojson{{"row", 6}, {"pair", {x, y}}, {"expected_meet", "-2-6-7+1+3"}});
      }
      // Parents of the in-degree-3 node and of its parents.
      const std::vector<std::pair<std::string, std::vector<std::string>>> parents = {
          {"-2-6-7+1+3", {"-2-6+3+7", "-2-7+1+6", "-6-7+2"}},
          {"-2-7+1+6", {"-2+6+7", "-3-7+2+6"}},
          {"-2-6+3+7", {"-1-6+2+7", "-2+6+7"}},
          {"-6-7+2", {"-1-6+2+7", "-3-7+2+6"}},
      };
      for (const auto& [child, want] : parents) {
        ++rep.checked;
        auto got = labels(g, m.row(6).parents(node(t, child.c_str())));
        std::sort(got.begin(), got.end());
        auto sorted_want = want;
        std::sort(sorted_want.begin(), sorted_want.end());
        if (got != sorted_want) rep.fail(ojson{{"row", 6}, {"node", child}, {"expected_parents", sorted_want}, {"computed", got}});
      }
    }
    std::vector<NodeId> hub_parents;
    if (t == LieType::e7()) hub_parents = m.row(6).parents(node(t, "-2-6-7+1+3"));
    auto check_counts = [&](const FullCounts& fc, const ojson& where) {
      if (!hub_parents.empty()) {
        ++rep.checked;
        auto s = [&](NodeId c) { return fc.values[m.full_position(6, c)]; };
        int lo = s(hub_parents[0]);
        for (NodeId p : hub_parents) lo = std::min(lo, s(p));
        if (s(node(t, "-2-6-7+1+3")) != lo) {
          ojson ex = where;
          ex["three_way_min_at"] = "-2-6-7+1+3";
          rep.fail(std::move(ex));
          return false;
        }
      }
      for (const Triple& tr : triples) {
        ++rep.checked;
        const int s0 = fc.values[m.full_position(tr.row, tr.c0)];
        const int s1 = fc.values[m.full_position(tr.row, tr.c1)];
        const int s2 = fc.values[m.full_position(tr.row, tr.c2)];
        if (s0 != std::min(s1, s2)) {
          ojson ex = where;
          ex["row"] = tr.row;
          ex["pair"] = {g.label(tr.c1), g.label(tr.c2)};
          ex["meet"] = g.label(tr.c0);
          ex["values"] = {s1, s2, s0};
          rep.fail(std::move(ex));
          return false;
        }
      }
      return true;
    };
    const EnumerationResult en = enumerate_tableaux(t, depth);
    for (std::size_t k = 0; k < en.tableaux.size(); ++k)
      if (!check_counts(accumulated_counts(en.tableaux[k]), ojson{{"source", "enumerated"}, {"coords", coords_only(en.elements[k])}}))
        break;
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
      const ReducedCounts v = random_path_consistent(t, 5, rng);
      if (!check_counts(extend_reduced(v), ojson{{"source", "random"}, {"sample", k}, {"coords", coords_only(v)}})) break;
    }
    rep.stats["enumerated"] = en.tableaux.size();
    rep.stats["samples"] = samples;
  });
}

VerificationReport check_color1(int depth) {
  const LieType t = LieType::e6();
  return timed("color1", t, [&](VerificationReport& rep) {
    const EnumerationResult en = enumerate_embedded(t, depth);
    const TensorOrder order = TensorOrder::canonical(t);
    auto show = [](const EmbeddedSelection& s) {
      return s.infinity ? std::string("b_inf") : std::to_string(s.index);
    };
    for (const ReducedCounts& rc : en.elements)
      for (Direction dir : {Direction::Raise, Direction::Lower}) {
        ++rep.checked;
        const EmbeddedElement x{rc};
        const EmbeddedSelection want = color1_oracle_e6(x, dir);
        const EmbeddedSelection got = select_embedded(x, 1, dir, order);
        if (want != got)
          rep.fail(ojson{{"coords", coords_only(rc)}, {"direction", to_string(dir)}, {"oracle", show(want)},
                         {"tensor_rule", show(got)}});
      }
    rep.stats["depth"] = depth;
    rep.stats["elements"] = en.elements.size();
  });
}

VerificationReport check_path_order(LieType t, int depth, int trials, std::uint64_t seed) {
  return timed("path-order", t, [&](VerificationReport& rep) {
    rep.seed = seed;
    const EnumerationResult en = enumerate_embedded(t, depth);
    const TensorOrder canonical = TensorOrder::canonical(t);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      const TensorOrder order = TensorOrder::random(t, rng);
      bool ok = true;
      for (const ReducedCounts& rc : en.elements) {
        for (int i = 1; i <= t.rank() && ok; ++i)
          for (Direction dir : {Direction::Raise, Direction::Lower}) {
            ++rep.checked;
            const EmbeddedElement x{rc};
            if (select_embedded(x, i, dir, order) == select_embedded(x, i, dir, canonical)) continue;
            rep.fail(ojson{{"trial", trial}, {"order", order.positions()}, {"coords", coords_only(rc)}, {"color", i},
                           {"direction", to_string(dir)}});
            ok = false;
            break;
          }
        if (!ok) break;
      }
    }
    rep.stats["depth"] = depth;
    rep.stats["elements"] = en.elements.size();
    rep.stats["trials"] = trials;
  });
}

std::optional<std::size_t> flipped_raise_select(std::span<const ComponentView> components, Direction dir) {
  // The lowering tie-break (latest maximum) used for both directions.
  (void)dir;
  return tensor_select(components, Direction::Lower);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"paper-lists", "roots",      "structure", "groups",
                                                 "commutation", "image",      "kostant",   "bijection",
                                                 "lemma-tmin",  "capmin",     "color1",    "path-order"};
  return names;
}

VerificationReport run_suite(std::string_view name, LieType t, const VerifyConfig& config) {
  const int depth = config.depth.value_or(default_depth(t));
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  if (name == "paper-lists") return check_paper_lists(t);
  if (name == "roots") return check_roots(t);
  if (name == "structure") return check_structure(t);
  if (name == "groups") return check_groups(t, config.paths, config.seed);
  if (name == "commutation") return check_commutation(t, depth);
  if (name == "image") return check_image(t, depth);
  if (name == "kostant") return check_kostant(t, depth);
  if (name == "bijection") return check_bijection(t, depth, config.samples, config.max_entry, config.seed);
  if (name == "lemma-tmin") return check_lemma_tmin(t, depth, config.samples, config.seed);
  if (name == "capmin") return check_capmin(t, depth, config.samples, config.seed);
  if (name == "path-order") return check_path_order(t, depth, config.trials, config.seed);
  if (name == "color1") {
    if (t == LieType::e6()) return check_color1(depth);
    VerificationReport rep;
    rep.suite = "color1";
    rep.type = t;
    rep.skipped = true;
    rep.stats["reason"] = "case table is stated for e6";
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace binf
