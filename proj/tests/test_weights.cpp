#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "gl3sw/weights.hpp"

using namespace gl3sw;

namespace {

std::mt19937_64 rng(std::getenv("GL3SW_TEST_SEED") ? std::strtoull(std::getenv("GL3SW_TEST_SEED"), nullptr, 10)
                                                   : 12345ULL);

Weight random_weight(Int lo = -20, Int hi = 20) {
  std::uniform_int_distribution<Int> d(lo, hi);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("pairing is the coordinate difference") {
  CHECK(pairing({2, 1, 0}, Root::a12) == 1);
  CHECK(pairing({2, 1, 0}, Root::a13) == 2);
  for (Root r : kAllRoots) CHECK(pairing({0, 0, 0}, r) == 0);
  Weight w = random_weight();
  for (Root r : kAllRoots) CHECK(pairing(w, r) == -pairing(w, root_negated(r)));
}

TEST_CASE("dominance order basics") {
  CHECK(dominance_leq({1, 1, 1}, {2, 1, 0}));
  CHECK(dominance_leq({2, 1, 0}, {2, 1, 0}));
  CHECK_FALSE(dominance_leq({2, 1, 0}, {1, 1, 1}));
}

TEST_CASE("dominance order is a partial order on each sum class") {
  for (int trial = 0; trial < 300; ++trial) {
    Weight a = random_weight(-6, 6);
    Weight b = random_weight(-6, 6);
    b[2] = a.sum() - b[0] - b[1];  // same coordinate sum
    Weight c = random_weight(-6, 6);
    c[2] = a.sum() - c[0] - c[1];
    CHECK(dominance_leq(a, a));
    if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
  }
}

TEST_CASE("p-restriction windows") {
  CHECK(is_p_restricted(Weight{4, 0, 0}, 5));
  CHECK_FALSE(is_p_restricted(Weight{5, 0, 0}, 5));
  CHECK(is_p_restricted(Weight{0, 0, 0}, 5, 0));
  CHECK_FALSE(is_p_restricted(Weight{1, 0, 0}, 5, 0));
  CHECK(is_p_restricted(Weight{24, 0, 0}, 5, 2));
}

TEST_CASE("reflection formulas and fixed points") {
  CHECK(reflect(Reflection::s2, {4, 2, 0}, 5) == Weight{3, 2, 1});
  CHECK(reflect(Reflection::s3, {6, 1, 0}, 5) == Weight{5, 2, 0});
  CHECK(reflect(Reflection::s2, {3, 1, 0}, 5) == Weight{3, 1, 0});  // wall a-c = p-2
}

TEST_CASE("reflections are involutions") {
  for (int trial = 0; trial < 200; ++trial) {
    Weight w = random_weight();
    for (Int p : {5LL, 7LL, 11LL})
      for (Reflection k : {Reflection::s2, Reflection::s3, Reflection::s3p})
        CHECK(reflect(k, reflect(k, w, p), p) == w);
  }
}

TEST_CASE("Weyl group acts and sgn is a character") {
  CHECK(w0().act({2, 1, 0}) == Weight{0, 1, 2});
  const auto& group = weyl_group();
  CHECK(group[0].sign() == 1);
  CHECK(group[1].sign() == -1);
  CHECK(group[3].sign() == 1);   // 3-cycle
  CHECK(group[5].sign() == -1);  // (13)
  Weight w = random_weight();
  for (const auto& g : group)
    for (const auto& h : group) {
      // compose g after h
      WeylElement gh;
      for (int i = 0; i < 3; ++i) gh.img[static_cast<size_t>(i)] = g.img[static_cast<size_t>(h.img[static_cast<size_t>(i)])];
      CHECK(g.act(h.act(w)) == gh.act(w));
      CHECK(gh.sign() == g.sign() * h.sign());
    }
}

TEST_CASE("dual weight and tuple dualization") {
  CHECK(dual_weight({2, 1, 0}) == Weight{0, -1, -2});
  WeightTuple t{{6, 1, 0}, {2, 1, 0}};
  CHECK(dualize(dualize(t)) == t);
  // sl3 restriction swaps under duality
  for (int trial = 0; trial < 100; ++trial) {
    Weight w = random_weight();
    auto [a, b] = sl3_restrict(w);
    auto [da, db] = sl3_restrict(dual_weight(w));
    CHECK(da == b);
    CHECK(db == a);
  }
}

TEST_CASE("dualize preserves p-restriction") {
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Int> d(0, 4);
    WeightTuple t{{d(rng) + d(rng), d(rng), 0}};
    t.slots[0] = Weight{t.slots[0][0], t.slots[0][1], 0};
    if (is_p_restricted(t, 5)) CHECK(is_p_restricted(dualize(t), 5));
  }
}

TEST_CASE("sl3 restriction") {
  CHECK(sl3_restrict({2, 1, 0}) == std::pair<Int, Int>{1, 1});
  CHECK(sl3_restrict({6, 1, 0}) == std::pair<Int, Int>{5, 1});
  CHECK(sl3_restrict({3, 3, 3}) == std::pair<Int, Int>{0, 0});
}

TEST_CASE("text round trips") {
  Weight w{-3, 0, 7};
  CHECK(parse_weight(to_string(w)) == w);
  WeightTuple t{{1, 0, -1}, {4, 2, 0}};
  CHECK(to_string(t) == "1,0,-1;4,2,0");
  CHECK(parse_tuple(to_string(t)) == t);
  CHECK_THROWS_AS(parse_weight("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1,2,x"), std::invalid_argument);
  for (Root r : kAllRoots) CHECK(parse_shift(shift_name(r)) == RootShift{r});
  CHECK(parse_shift("0") == RootShift{});
}

TEST_CASE("context powers") {
  CHECK(Context{5, 1}.q() == 5);
  CHECK(Context{5, 2}.q() == 25);
  CHECK(Context{7, 3}.q1() == 342);
}

TEST_CASE("cyclic slot indexing") {
  WeightTuple t{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(t.slot(-1) == t.slot(2));
  CHECK(t.slot(3) == t.slot(0));
}
