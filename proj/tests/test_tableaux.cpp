#include <doctest.h>

#include "binf/tableaux.hpp"
#include "binf/verify.hpp"
#include "support.hpp"

using namespace binf;
using binf::testing::full_at;
using binf::testing::N;
using binf::testing::reduced_at;

namespace {

std::vector<Run> runs(LieType t, std::initializer_list<std::pair<const char*, int>> items) {
  std::vector<Run> out;
  for (auto [label, n] : items) out.push_back(Run{N(t, label), n});
  return out;
}

}  // namespace

TEST_SUITE("tableaux") {
  TEST_CASE("highest tableau") {
    const LieType t = LieType::e6();
    const MLTableau h = highest_tableau(t);
    CHECK(h.rows == std::vector<std::vector<Run>>{runs(t, {{"-4+5+6", 1}}), runs(t, {{"-3+4+6", 2}}),
                                                  runs(t, {{"-2+3", 3}}), runs(t, {{"-1+2", 4}}),
                                                  runs(t, {{"+1", 5}})});
    const MLTableau h7 = highest_tableau(LieType::e7());
    CHECK(h7.rows.size() == 6);
    CHECK(h7.row(6) == runs(LieType::e7(), {{"+7", 6}}));
    CHECK(std::all_of(accumulated_counts(h).values.begin(), accumulated_counts(h).values.end(),
                      [](int v) { return v == 0; }));
    CHECK(reduced_counts(h) == ReducedCounts::zeros(t));
    CHECK(reduced_counts(h).values.size() == 36);
    CHECK(reduced_counts(h7).values.size() == 63);
  }

  TEST_CASE("largeness") {
    const LieType t = LieType::e6();
    MLTableau a = highest_tableau(t);
    CHECK(is_large(a));
    CHECK(is_marginally_large(a));
    a.rows[4] = runs(t, {{"+1", 5}, {"-1+2", 1}});
    CHECK(is_large(a));
    CHECK(is_marginally_large(a));
    MLTableau b = highest_tableau(t);
    b.rows[4] = runs(t, {{"+1", 4}});
    CHECK_FALSE(is_marginally_large(b));
    CHECK_FALSE(is_large(b));
    MLTableau c = highest_tableau(t);
    c.rows[4] = runs(t, {{"+1", 7}});
    CHECK(is_large(c));
    CHECK_FALSE(is_marginally_large(c));
    // -2+6 and -1+5 are incomparable in row 5
    MLTableau d = highest_tableau(t);
    d.rows[4] = runs(t, {{"+1", 5}, {"-2+6", 1}, {"-1+5", 1}});
    CHECK_FALSE(is_marginally_large(d));
    // entries outside C_r
    MLTableau e = highest_tableau(t);
    e.rows[0] = runs(t, {{"-4+5+6", 1}, {"-1+2", 1}});
    CHECK_FALSE(is_marginally_large(e));
  }

  TEST_CASE("reading word") {
    const LieType t = LieType::e6();
    const MLTableau h = highest_tableau(t);
    const auto w = reading_word(h);
    std::vector<std::string> got;
    for (const BoxRef& b : w) got.push_back(CrystalModel::get(t).basic().label(b.elem));
    std::vector<std::string> want;
    for (auto [label, n] : std::initializer_list<std::pair<const char*, int>>{
             {"+1", 5}, {"-1+2", 4}, {"-2+3", 3}, {"-3+4+6", 2}, {"-4+5+6", 1}})
      want.insert(want.end(), n, label);
    CHECK(got == want);
    MLTableau a = highest_tableau(t);
    a.rows[4] = runs(t, {{"+1", 5}, {"-1+2", 1}});
    const auto wa = reading_word(a);
    CHECK(wa.front() == BoxRef{5, N(t, "-1+2")});
    CHECK(wa.size() == static_cast<std::size_t>(a.box_count()));
  }

  TEST_CASE("operators on the highest tableau") {
    const LieType t = LieType::e6();
    const MLTableau h = highest_tableau(t);
    for (int i = 1; i <= 6; ++i) CHECK_FALSE(apply(h, i, Direction::Raise).has_value());
    const auto f1 = apply(h, 1, Direction::Lower);
    REQUIRE(f1);
    MLTableau want1 = h;
    want1.rows[4] = runs(t, {{"+1", 5}, {"-1+2", 1}});
    CHECK(*f1 == want1);
    const auto f5 = apply(h, 5, Direction::Lower);
    REQUIRE(f5);
    CHECK(f5->rows == std::vector<std::vector<Run>>{runs(t, {{"-4+5+6", 1}, {"-5+6", 1}}), runs(t, {{"-3+4+6", 3}}),
                                                    runs(t, {{"-2+3", 4}}), runs(t, {{"-1+2", 5}}),
                                                    runs(t, {{"+1", 6}})});
    const ReducedCounts r1 = reduced_counts(*f1);
    CHECK(r1.total() == 1);
    CHECK(reduced_at(r1, 5, "-1+2") == 1);
    const ReducedCounts r5 = reduced_counts(*f5);
    CHECK(r5.total() == 1);
    CHECK(reduced_at(r5, 1, "-5+6") == 1);
  }

  TEST_CASE("non-marginally-large input is rejected") {
    const LieType t = LieType::e6();
    MLTableau b = highest_tableau(t);
    b.rows[4] = runs(t, {{"+1", 4}});
    CHECK_THROWS_AS(apply(b, 1, Direction::Lower), std::invalid_argument);
  }

  TEST_CASE("accumulated counts") {
    const LieType t = LieType::e6();
    MLTableau a = highest_tableau(t);
    a.rows[2] = runs(t, {{"-2+3", 3}, {"-3+4+6", 2}, {"-6+4", 1}});
    renormalize(a);
    REQUIRE(is_marginally_large(a));
    const FullCounts fc = accumulated_counts(a);
    CHECK(full_at(fc, 3, "-3+4+6") == 3);
    CHECK(full_at(fc, 3, "-6+4") == 1);
    CHECK(full_at(fc, 3, "-4+2") == 0);
    CHECK(a.row(4).front().count == a.row_length(3) + 1);
    CHECK(a.row(5).front().count == a.row_length(4) + 1);
  }

  TEST_CASE("inverse pairs, weights, renormalization") {
    for (LieType t : {LieType::e6(), LieType::e7()}) {
      const EnumerationResult en = enumerate_tableaux(t, 3);
      for (const MLTableau& tab : en.tableaux) {
        const ReducedCounts rc = reduced_counts(tab);
        for (int i = 1; i <= t.rank(); ++i) {
          const auto down = apply(tab, i, Direction::Lower);
          REQUIRE(down);
          CHECK(apply(*down, i, Direction::Raise) == tab);
          CHECK(weight(reduced_counts(*down)) == weight(rc) - simple_root_as_weight(t, i));
          if (const auto up = apply(tab, i, Direction::Raise)) CHECK(apply(*up, i, Direction::Lower) == tab);
        }
        MLTableau widened = tab;
        widened.rows.back().front().count += 3;
        renormalize(widened);
        CHECK(widened == tab);
        CHECK(reduced_counts(widened) == rc);
      }
    }
  }
}
