#include <stdexcept>

#include "doctest.h"
#include "shortlist/submodular.hpp"

using namespace shortlist;

TEST_CASE("coverage evaluates total covered weight") {
  auto f = make_coverage(4, {ItemSet{0, 1}, ItemSet{1, 2}, ItemSet{3}},
                         {1.0, 2.0, 4.0, 8.0});
  CHECK(f->ground_size() == 3);
  CHECK(f->eval(ItemSet{}) == doctest::Approx(0.0));
  CHECK(f->eval(ItemSet{0}) == doctest::Approx(3.0));
  CHECK(f->eval(ItemSet{0, 1}) == doctest::Approx(7.0));
  CHECK(f->eval(ItemSet{0, 1, 2}) == doctest::Approx(15.0));
  CHECK(marginal(*f, 1, ItemSet{0}) == doctest::Approx(4.0));
}

TEST_CASE("coverage validates its construction") {
  CHECK_THROWS_AS(make_coverage(2, {ItemSet{0, 5}}, {1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_coverage(2, {ItemSet{0}}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_coverage(2, {ItemSet{0}}, {1.0, -0.5}),
                  std::invalid_argument);
  auto f = make_coverage(2, {ItemSet{0}}, {1.0, 1.0});
  CHECK_THROWS_AS(f->eval(ItemSet{1}), std::invalid_argument);
  CHECK_THROWS_AS(f->eval(ItemSet{-1}), std::invalid_argument);
}

TEST_CASE("modular adds weights") {
  auto f = make_modular({1.5, 2.5, 4.0});
  CHECK(f->eval(ItemSet{}) == doctest::Approx(0.0));
  CHECK(f->eval(ItemSet{0, 2}) == doctest::Approx(5.5));
  CHECK(marginal(*f, 1, ItemSet{0, 2}) == doctest::Approx(2.5));
  CHECK_THROWS_AS(make_modular({1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("facility location takes the best open similarity per client") {
  auto f = make_facility_location({{0.2, 0.9}, {0.7, 0.1}});
  CHECK(f->ground_size() == 2);
  CHECK(f->eval(ItemSet{}) == doctest::Approx(0.0));
  CHECK(f->eval(ItemSet{0}) == doctest::Approx(0.9));
  CHECK(f->eval(ItemSet{1}) == doctest::Approx(1.0));
  CHECK(f->eval(ItemSet{0, 1}) == doctest::Approx(1.6));
  CHECK_THROWS_AS(make_facility_location({{0.2}, {0.7, 0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_facility_location({{-0.2, 0.1}}),
                  std::invalid_argument);
}

TEST_CASE("marginal short-circuits members without an oracle call") {
  auto inner = make_modular({1.0, 2.0});
  CountingOracle f{inner};
  CHECK(marginal(f, 0, ItemSet{0, 1}) == doctest::Approx(0.0));
  CHECK(f.calls() == 0);
  CHECK(marginal(f, 0, ItemSet{1}) == doctest::Approx(1.0));
  CHECK(f.calls() == 2);
  f.reset();
  CHECK(f.calls() == 0);
}

TEST_CASE("staircase helper values") {
  // k = 2: full steps contribute k/2^j, the partial step decays by halves.
  const double expected[] = {0.0, 1.0, 2.0, 2.5, 3.0, 3.25, 3.5, 3.625, 3.75};
  for (int t = 0; t <= 8; ++t) {
    CHECK(hardness_staircase(2, t) == doctest::Approx(expected[t]));
  }
  CHECK(hardness_staircase(4, 4) == doctest::Approx(4.0));
  CHECK(hardness_staircase(4, 6) == doctest::Approx(5.0));
}

TEST_CASE("adversarial objective: fixed probe values") {
  // Layout for k=2, L=2, ground=12: type A = {0,1}, matched blocks
  // {2,3} and {4,5}, filler {6..11}.
  auto f = make_hardness_function(2, 2, 12);
  CHECK(f->eval(ItemSet{}) == doctest::Approx(0.0));
  CHECK(f->eval(ItemSet{6}) == doctest::Approx(1.0));
  CHECK(f->eval(ItemSet{0}) == doctest::Approx(2.0));
  CHECK(f->eval(ItemSet{0, 1}) == doctest::Approx(5.0));  // both type A
  CHECK(f->eval(ItemSet{0, 2}) == doctest::Approx(3.0));
  CHECK(f->eval(ItemSet{0, 2, 3}) == doctest::Approx(3.5));
  CHECK(f->eval(ItemSet{0, 2, 3, 6}) == doctest::Approx(3.75));
  CHECK(f->eval(ItemSet{6, 7, 8, 9}) == doctest::Approx(3.5));
  CHECK(f->eval(ItemSet{1, 4, 5}) == doctest::Approx(3.5));
  CHECK(f->eval(ItemSet{0, 4, 5}) == doctest::Approx(3.0));  // unmatched block
  CHECK(f->eval(ItemSet{0, 2, 3, 6, 7, 8, 9}) == doctest::Approx(3.875));
}

TEST_CASE("adversarial objective: known monotonicity defect stays put") {
  // Documented non-monotone spot: adding the matched type-A item to a large
  // pile of type-B items lowers the value. The exhaustive checker reports
  // this; the function itself is kept exactly as constructed.
  auto f = make_hardness_function(2, 2, 12);
  const double without = f->eval(ItemSet{2, 3, 4, 5, 6});
  const double with = f->eval(ItemSet{0, 2, 3, 4, 5, 6});
  CHECK(without == doctest::Approx(4.0));
  CHECK(with == doctest::Approx(3.875));
  CHECK(with < without);
}

TEST_CASE("adversarial objective: k=4 block values") {
  // Layout for k=4, L=2, ground=12: blocks {2..5} and {6..9}.
  auto f = make_hardness_function(4, 2, 12);
  CHECK(f->eval(ItemSet{0, 1}) == doctest::Approx(9.0));  // 2k + 1
  // A type-A item with its full matched block caps at 7k/4.
  CHECK(f->eval(ItemSet{0, 2, 3, 4, 5}) == doctest::Approx(7.0));
}

TEST_CASE("adversarial objective: construction and layout") {
  CHECK_THROWS_AS(make_hardness_function(0, 2, 12), std::invalid_argument);
  CHECK_THROWS_AS(make_hardness_function(2, 0, 12), std::invalid_argument);
  CHECK_THROWS_AS(make_hardness_function(2, 2, 5), std::invalid_argument);

  HardnessLayout hl{2, 2, 12};
  CHECK(hl.a_item(1) == 1);
  CHECK(hl.block_item(0, 0) == 2);
  CHECK(hl.block_item(1, 1) == 5);
  CHECK(hl.first_filler() == 6);
  CHECK(hl.is_type_a(1));
  CHECK(!hl.is_type_a(2));
  CHECK(hl.block_of(3) == 0);
  CHECK(hl.block_of(4) == 1);
  CHECK(hl.block_of(6) == -1);
  CHECK(hl.block_of(0) == -1);
}
