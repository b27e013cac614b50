#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "binf/root_system.hpp"

using namespace binf;

namespace {

int form(const CartanMatrix& a, const RootVector& x, const RootVector& y) {
  int s = 0;
  for (int i = 1; i <= a.rank(); ++i)
    for (int j = 1; j <= a.rank(); ++j) s += x[i] * a(i, j) * y[j];
  return s;
}

// Positive roots of a simply-laced finite type are the nonzero nonnegative
// lattice vectors of norm 2.
std::set<RootVector> roots_by_norm(LieType t) {
  const CartanMatrix a(t);
  std::set<RootVector> out;
  RootVector v(t.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i > t.rank()) {
      if (!v.is_zero() && form(a, v, v) == 2) out.insert(v);
      return;
    }
    for (int k = 0; k <= 4; ++k) {
      v[i] = k;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

// Multisets of roots summing to mu, roots taken in nondecreasing index order.
std::uint64_t brute_kostant(const std::vector<RootVector>& roots, RootVector mu, std::size_t from) {
  if (mu.is_zero()) return 1;
  std::uint64_t n = 0;
  for (std::size_t k = from; k < roots.size(); ++k) {
    const RootVector rest = mu - roots[k];
    if (std::all_of(rest.c.begin(), rest.c.begin() + rest.rank, [](int x) { return x >= 0; }))
      n += brute_kostant(roots, rest, k);
  }
  return n;
}

}  // namespace

TEST_SUITE("root-system") {
  TEST_CASE("cartan entries") {
    const CartanMatrix e6 = cartan_matrix(LieType::e6());
    const CartanMatrix e7 = cartan_matrix(LieType::e7());
    CHECK(e6(3, 6) == -1);
    CHECK(e6(1, 1) == 2);
    CHECK(e7(7, 1) == -1);
    CHECK(e6(1, 6) == 0);
    for (const CartanMatrix* a : {&e6, &e7})
      for (int i = 1; i <= a->rank(); ++i)
        for (int j = 1; j <= a->rank(); ++j) {
          CHECK((*a)(i, j) == (*a)(j, i));
          if (i == j)
            CHECK((*a)(i, j) == 2);
          else
            CHECK(((*a)(i, j) == 0 || (*a)(i, j) == -1));
        }
    // edges 1-2, 2-3, 3-4, 4-5, 3-6 (+ 7-1)
    int edges6 = 0, edges7 = 0;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) edges6 += e6.adjacent(i, j);
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) edges7 += e7.adjacent(i, j);
    CHECK(edges6 == 5);
    CHECK(edges7 == 6);
    CHECK(e6.adjacent(4, 5));
    CHECK(e7.adjacent(1, 7));
  }

  TEST_CASE("simple roots in the weight basis") {
    CHECK(simple_root_as_weight(LieType::e6(), 6) == WeightVector(6, {0, 0, -1, 0, 0, 2}));
    CHECK(simple_root_as_weight(LieType::e6(), 1) == WeightVector(6, {2, -1, 0, 0, 0, 0}));
    CHECK(simple_root_as_weight(LieType::e7(), 7) == WeightVector(7, {-1, 0, 0, 0, 0, 0, 2}));
    CHECK_THROWS_AS(simple_root_as_weight(LieType::e6(), 7), std::out_of_range);
    CHECK_THROWS_AS(simple_root_as_weight(LieType::e6(), 0), std::out_of_range);
  }

  TEST_CASE("positive roots match the norm-2 vectors") {
    for (LieType t : {LieType::e6(), LieType::e7()}) {
      const auto roots = positive_roots(t);
      CHECK(roots.size() == (t == LieType::e6() ? 36u : 63u));
      const std::set<RootVector> as_set(roots.begin(), roots.end());
      CHECK(as_set.size() == roots.size());
      CHECK(as_set == roots_by_norm(t));
      for (int i = 1; i <= t.rank(); ++i) CHECK(as_set.contains(simple_root(t, i)));
    }
  }

  TEST_CASE("kostant partition function") {
    const LieType t = LieType::e6();
    CHECK(kostant_count(t, RootVector(6)) == 1);
    for (int i = 1; i <= 6; ++i) CHECK(kostant_count(t, simple_root(t, i)) == 1);
    CHECK(kostant_count(t, simple_root(t, 3) + simple_root(t, 6)) == 2);
    const CartanMatrix a(t);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        CHECK(kostant_count(t, simple_root(t, i) + simple_root(t, j)) == (a.adjacent(i, j) ? 2u : 1u));
  }

  TEST_CASE("kostant agrees with brute force") {
    for (LieType t : {LieType::e6(), LieType::e7()}) {
      const auto roots = positive_roots(t);
      const auto table = kostant_table(t, 4);
      for (int h = 0; h <= 4; ++h)
        for (const RootVector& mu : vectors_of_height(t, h)) {
          const auto want = brute_kostant(roots, mu, 0);
          CHECK(kostant_count(t, mu) == want);
          CHECK(table.at(mu) == want);
        }
    }
  }

  TEST_CASE("type parsing") {
    CHECK(LieType::parse("e6") == LieType::e6());
    CHECK(LieType::parse("E7") == LieType::e7());
    CHECK_THROWS_AS(LieType::parse("e8"), std::invalid_argument);
    CHECK(LieType::e7().row_count() == 6);
  }
}
