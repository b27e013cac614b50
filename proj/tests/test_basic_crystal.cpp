#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "binf/model.hpp"
#include "support.hpp"

using namespace binf;
using binf::testing::N;

namespace {

std::set<std::string> label_set(const BasicCrystalGraph& g, const std::vector<NodeId>& ids) {
  std::set<std::string> out;
  for (NodeId c : ids) out.insert(g.label(c));
  return out;
}

std::map<int, int> color_multiset(const RowGraph& rg, const std::vector<int>& path) {
  std::map<int, int> out;
  for (int a : path) ++out[rg.arrows()[a].color];
  return out;
}

}  // namespace

TEST_SUITE("basic-crystal") {
  TEST_CASE("labels") {
    const LieType t = LieType::e7();
    const WeightVector w = parse_label(t, "-2-6-7+1+3");
    CHECK(w == WeightVector(7, {1, -1, 1, 0, 0, -1, -1}));
    CHECK(element_label(w) == "-2-6-7+1+3");
    CHECK_THROWS_AS(parse_label(t, "+1-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_label(t, "-9"), std::invalid_argument);
    CHECK_THROWS_AS(CrystalModel::get(t).basic().find_label("-1-2"), std::invalid_argument);
  }

  TEST_CASE("generation") {
    const auto& e6 = CrystalModel::get(LieType::e6()).basic();
    const auto& e7 = CrystalModel::get(LieType::e7()).basic();
    CHECK(e6.size() == 27);
    CHECK(e7.size() == 56);
    CHECK(e6.label(e6.highest()) == "+1");
    CHECK(e7.label(e7.highest()) == "+7");
    CHECK(e6.out(N(LieType::e6(), "+1"), 1) == N(LieType::e6(), "-1+2"));
    CHECK(e7.find(parse_label(LieType::e7(), "-2-6-7+1+3")).has_value());
    for (const auto* g : {&e6, &e7}) {
      int sources = 0;
      for (NodeId c = 0; c < g->size(); ++c) {
        sources += g->in_degree(c) == 0;
        for (int i = 1; i <= g->type().rank(); ++i) {
          CHECK(std::abs(g->pairing(c, i)) <= 1);
          if (auto y = g->out(c, i)) {
            CHECK(g->pairing(c, i) == 1);
            CHECK(g->element(*y).weight == g->element(c).weight - simple_root_as_weight(g->type(), i));
            CHECK(g->in(*y, i) == c);
          }
        }
      }
      CHECK(sources == 1);
    }
  }

  TEST_CASE("reachability") {
    const LieType t = LieType::e6();
    const auto& g = CrystalModel::get(t).basic();
    CHECK(g.reaches(N(t, "-1+2"), N(t, "-1+2")));
    CHECK(g.reaches(N(t, "+1"), N(t, "-1+2")));
    CHECK_FALSE(g.reaches(N(t, "-1+2"), N(t, "+1")));
  }

  TEST_CASE("row graphs and endpoints") {
    const auto& m6 = CrystalModel::get(LieType::e6());
    const auto& m7 = CrystalModel::get(LieType::e7());
    const auto& g6 = m6.basic();
    CHECK(g6.label(m6.row(4).source()) == "-1+2");
    CHECK(g6.label(m6.row(4).sink()) == "-6+1");
    CHECK(m7.basic().label(m7.row(5).source()) == "-7+1");
    CHECK(m7.basic().label(m7.row(5).sink()) == "-5+7");
    CHECK(label_set(g6, m6.row(1).nodes()) == std::set<std::string>{"-4+5+6", "-5+6"});
    CHECK(m6.row(5).size() == 27);
    CHECK(m7.row(6).size() == 56);
    CHECK_THROWS_AS(m6.row(6), std::out_of_range);
    CHECK_THROWS_AS(m6.row(0), std::out_of_range);
  }

  TEST_CASE("in-degree-1 subsets") {
    const auto& m6 = CrystalModel::get(LieType::e6());
    const auto& m7 = CrystalModel::get(LieType::e7());
    CHECK(label_set(m6.basic(), m6.row(2).indeg1_subset()) == std::set<std::string>{"-5+6", "-4+5+6", "-6+4"});
    const std::vector<std::size_t> sizes6{1, 3, 6, 10, 16}, sizes7{1, 3, 6, 10, 16, 27};
    for (int r = 1; r <= 5; ++r) CHECK(m6.row(r).indeg1_subset().size() == sizes6[r - 1]);
    for (int r = 1; r <= 6; ++r) CHECK(m7.row(r).indeg1_subset().size() == sizes7[r - 1]);
    CHECK(m6.reduced_size() == 36);
    CHECK(m7.reduced_size() == 63);
  }

  TEST_CASE("component colors") {
    const LieType t = LieType::e6();
    const RowGraph& top = CrystalModel::get(t).row(5);
    CHECK(top.component_color(N(t, "-1+2")) == 1);
    CHECK(top.component_color(N(t, "-5+6")) == 5);
    std::map<int, int> colors;
    for (NodeId c : top.indeg1_subset()) ++colors[top.component_color(c)];
    CHECK(colors == std::map<int, int>{{1, 2}, {2, 3}, {3, 4}, {4, 3}, {5, 2}, {6, 2}});
    CHECK_THROWS_AS(top.component_color(N(t, "+1")), std::invalid_argument);
  }

  TEST_CASE("arrow groups") {
    const LieType t = LieType::e6();
    const auto& m = CrystalModel::get(t);
    const RowGraph& top = m.row(5);
    std::map<int, std::multiset<std::size_t>> sizes;
    for (const ArrowGroup& grp : top.arrow_groups()) sizes[grp.color].insert(grp.arrows.size());
    CHECK(sizes[1] == std::multiset<std::size_t>{1, 5});
    CHECK(sizes[2] == std::multiset<std::size_t>{1, 2, 3});
    const RowGraph& r1 = m.row(1);
    REQUIRE(r1.arrow_groups().size() == 1);
    CHECK(r1.arrow_groups()[0].arrows.size() == 1);
    CHECK(r1.arrow_groups()[0].head == N(t, "-5+6"));
    for (LieType ty : {LieType::e6(), LieType::e7()})
      for (int r = 1; r <= ty.row_count(); ++r) {
        const RowGraph& rg = CrystalModel::get(ty).row(r);
        std::vector<int> owner(rg.arrows().size(), -1);
        for (std::size_t k = 0; k < rg.arrow_groups().size(); ++k)
          for (int a : rg.arrow_groups()[k].arrows) {
            CHECK(owner[a] == -1);
            owner[a] = static_cast<int>(k);
          }
        CHECK(std::count(owner.begin(), owner.end(), -1) == 0);
        CHECK(rg.arrow_groups().size() == rg.indeg1_subset().size());
      }
  }

  TEST_CASE("canonical path") {
    const LieType t = LieType::e6();
    const auto& m = CrystalModel::get(t);
    const RowGraph& top = m.row(5);
    const auto& path = top.canonical_path();
    CHECK(path.size() == 16);
    CHECK(color_multiset(top, path) == std::map<int, int>{{1, 2}, {2, 3}, {3, 4}, {4, 3}, {5, 2}, {6, 2}});
    std::vector<int> first;
    for (int k = 0; k < 4; ++k) first.push_back(top.arrows()[path[k]].color);
    CHECK(first == std::vector<int>{1, 2, 3, 4});
    CHECK(top.arrows()[path[3]].to == N(t, "-4+5+6"));
    const RowGraph& r1 = m.row(1);
    REQUIRE(r1.canonical_path().size() == 1);
    CHECK(r1.arrows()[r1.canonical_path()[0]] == Arrow{N(t, "-4+5+6"), 5, N(t, "-5+6")});
  }

  TEST_CASE("distances and gradedness") {
    const LieType t = LieType::e6();
    const RowGraph& top = CrystalModel::get(t).row(5);
    CHECK(top.distance_from_source(top.source()) == 0);
    CHECK(top.distance_from_source(N(t, "-1+2")) == 1);
    CHECK(top.distance_to_sink(top.source()) == 16);
    for (LieType ty : {LieType::e6(), LieType::e7()})
      for (int r = 1; r <= ty.row_count(); ++r) {
        const RowGraph& rg = CrystalModel::get(ty).row(r);
        CHECK(rg.is_graded());
        for (NodeId c : rg.nodes())
          CHECK(rg.distance_from_source(c) + rg.distance_to_sink(c) == rg.distance_to_sink(rg.source()));
      }
  }

  TEST_CASE("random paths cross every group once") {
    std::mt19937_64 rng(11);
    for (LieType ty : {LieType::e6(), LieType::e7()})
      for (int r = 1; r <= ty.row_count(); ++r) {
        const RowGraph& rg = CrystalModel::get(ty).row(r);
        for (int k = 0; k < 200; ++k) {
          std::vector<int> hits(rg.arrow_groups().size(), 0);
          for (int a : rg.random_path(rng)) ++hits[rg.group_of_arrow(a)];
          CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
      }
  }

  TEST_CASE("in-degree bound") {
    const LieType t = LieType::e7();
    const auto& g = CrystalModel::get(t).basic();
    std::vector<std::string> deg3;
    for (NodeId c = 0; c < g.size(); ++c) {
      CHECK(g.in_degree(c) <= 3);
      if (g.in_degree(c) == 3) deg3.push_back(g.label(c));
    }
    CHECK(deg3 == std::vector<std::string>{"-2-6-7+1+3"});
    const auto& g6 = CrystalModel::get(LieType::e6()).basic();
    for (NodeId c = 0; c < g6.size(); ++c) CHECK(g6.in_degree(c) <= 2);
  }

  TEST_CASE("C_4 as a component without 1-arrows") {
    // Undirected component of -1+2 once the 1-arrows are gone.
    const LieType t = LieType::e6();
    const auto& m = CrystalModel::get(t);
    const auto& g = m.basic();
    std::set<NodeId> seen{N(t, "-1+2")};
    for (bool grew = true; grew;) {
      grew = false;
      for (const Arrow& a : g.arrows()) {
        if (a.color == 1) continue;
        if (seen.contains(a.from) != seen.contains(a.to)) {
          seen.insert(a.from);
          seen.insert(a.to);
          grew = true;
        }
      }
    }
    CHECK(seen == std::set<NodeId>(m.row(4).nodes().begin(), m.row(4).nodes().end()));
  }
}
