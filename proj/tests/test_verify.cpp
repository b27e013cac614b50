#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "binf/coordinates.hpp"
#include "binf/verify.hpp"
#include "support.hpp"

using namespace binf;
using binf::testing::reduced;

TEST_SUITE("verify") {
  TEST_CASE("small enumerations") {
    for (LieType t : {LieType::e6(), LieType::e7()}) {
      const EnumerationResult d0 = enumerate_embedded(t, 0);
      CHECK(d0.elements == std::vector<ReducedCounts>{ReducedCounts::zeros(t)});
      CHECK(enumerate_tableaux(t, 0).tableaux == std::vector<MLTableau>{highest_tableau(t)});
      const EnumerationResult d1 = enumerate_embedded(t, 1);
      CHECK(d1.elements.size() == static_cast<std::size_t>(t.rank()) + 1);
      std::uint64_t total = 0;
      for (const auto& [mu, n] : d1.by_weight) total += n;
      CHECK(total == d1.elements.size());
    }
    CHECK_THROWS_AS(enumerate_embedded(LieType::e6(), -1), std::invalid_argument);
  }

  TEST_CASE("depth-one support") {
    const LieType t = LieType::e6();
    std::set<ReducedCounts> got;
    for (const ReducedCounts& rc : enumerate_embedded(t, 1).elements)
      if (rc.total() == 1) got.insert(rc);
    const std::set<ReducedCounts> want{reduced(t, {{{5, "-1+2"}, 1}}), reduced(t, {{{4, "-2+3"}, 1}}),
                                       reduced(t, {{{3, "-3+4+6"}, 1}}), reduced(t, {{{2, "-4+5+6"}, 1}}),
                                       reduced(t, {{{2, "-6+4"}, 1}}), reduced(t, {{{1, "-5+6"}, 1}})};
    CHECK(got == want);
  }

  TEST_CASE("path-consistent enumeration") {
    const LieType t = LieType::e6();
    CHECK(enumerate_path_consistent(t, 0) == std::vector<ReducedCounts>{ReducedCounts::zeros(t)});
    CHECK(enumerate_path_consistent(t, 1).size() == 7);
    CHECK(enumerate_path_consistent(t, -1).empty());
    for (LieType ty : {LieType::e6(), LieType::e7()})
      for (int total = 0; total <= 3; ++total) {
        auto closure = enumerate_embedded(ty, total).elements;
        std::sort(closure.begin(), closure.end());
        const auto direct = enumerate_path_consistent(ty, total);
        CHECK(closure == direct);
        for (const ReducedCounts& rc : direct) CHECK(is_path_consistent_reduced(rc));
      }
  }

  TEST_CASE("parallel and serial enumeration agree") {
    for (LieType t : {LieType::e6(), LieType::e7()}) {
      const EnumerationResult a = enumerate_tableaux(t, 3), b = serial::enumerate_tableaux(t, 3);
      CHECK(a.elements == b.elements);
      CHECK(a.tableaux == b.tableaux);
      CHECK(a.by_weight == b.by_weight);
      const EnumerationResult c = enumerate_embedded(t, 3), d = serial::enumerate_embedded(t, 3);
      CHECK(c.elements == d.elements);
      CHECK(c.elements == a.elements);
    }
  }

  TEST_CASE("random generators stay in range") {
    std::mt19937_64 rng(29);
    for (LieType t : {LieType::e6(), LieType::e7()})
      for (int k = 0; k < 200; ++k) {
        const ReducedCounts rc = random_path_consistent(t, 4, rng);
        CHECK(is_path_consistent_reduced(rc));
        CHECK(*std::max_element(rc.values.begin(), rc.values.end()) <= 4);
        CHECK(is_marginally_large(random_tableau(t, 2, rng)));
      }
  }

  TEST_CASE("kostant suite examples") {
    const VerificationReport r = check_kostant(LieType::e6(), 2);
    CHECK(r.pass);
    const EnumerationResult en = enumerate_embedded(LieType::e6(), 2);
    const LieType t = LieType::e6();
    CHECK(en.by_weight.at(simple_root(t, 3) + simple_root(t, 6)) == 2);
    for (int i = 1; i <= 6; ++i) CHECK(en.by_weight.at(simple_root(t, i)) == 1);
  }

  TEST_CASE("a broken tie-break is caught") {
    const VerificationReport good = check_commutation(LieType::e6(), 2);
    CHECK(good.pass);
    const VerificationReport bad = check_commutation(LieType::e6(), 2, flipped_raise_select);
    CHECK_FALSE(bad.pass);
    CHECK(bad.counterexample.contains("coords"));
    CHECK(bad.counterexample["direction"] == "raise");
  }

  TEST_CASE("report json") {
    VerificationReport r = check_groups(LieType::e6(), 10, 99);
    const auto j = r.to_json();
    CHECK(j["suite"] == "groups");
    CHECK(j["type"] == "e6");
    CHECK(j["pass"] == true);
    CHECK(j["seed"] == 99);
    CHECK_FALSE(j.contains("counterexample"));
    r.fail({{"x", 1}});
    r.fail({{"x", 2}});
    CHECK(r.to_json()["counterexample"]["x"] == 1);
  }

  TEST_CASE("suites are deterministic under a seed") {
    VerifyConfig cfg;
    cfg.depth = 2;
    cfg.samples = 50;
    for (const std::string& name : {std::string("bijection"), std::string("capmin"), std::string("lemma-tmin")}) {
      const auto a = run_suite(name, LieType::e7(), cfg), b = run_suite(name, LieType::e7(), cfg);
      CHECK(a.pass);
      CHECK(a.checked == b.checked);
      CHECK(a.stats == b.stats);
    }
    CHECK(run_suite("color1", LieType::e7(), cfg).skipped);
    CHECK_THROWS_AS(run_suite("nope", LieType::e6(), cfg), std::invalid_argument);
  }
}
