#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "gl3sw/alcoves.hpp"
#include "gl3sw/chars.hpp"

using namespace gl3sw;

namespace {

std::mt19937_64 rng(std::getenv("GL3SW_TEST_SEED") ? std::strtoull(std::getenv("GL3SW_TEST_SEED"), nullptr, 10)
                                                   : 6789ULL);

std::vector<Weight> restricted_weights(Int p) {
  std::vector<Weight> out;
  for (Int d1 = 0; d1 <= p - 1; ++d1)
    for (Int d2 = 0; d2 <= p - 1; ++d2) out.push_back({d1 + d2, d2, 0});
  return out;
}

}  // namespace

TEST_CASE("partition function values") {
  CHECK(kostant_partition({0, 0, 0}) == 1);
  CHECK(kostant_partition(root_vector(Root::a13)) == 2);
  CHECK(kostant_partition({1, -1, 0}) == 1);
  CHECK(kostant_partition({-1, 1, 0}) == 0);
  CHECK(kostant_partition({2, 0, -2}) == 3);
  CHECK(kostant_partition({1, 1, -2}) == 2);  // n1=1, n2=2
  CHECK(kostant_partition({1, 0, 0}) == 0);   // off the root lattice
}

TEST_CASE("Kostant multiplicities: frozen instances") {
  CHECK(weyl_mult({1, 0, -1}, {0, 0, 0}) == 2);
  CHECK(weyl_mult({2, 1, 0}, {2, 1, 0}) == 1);
  CHECK(weyl_mult({2, 1, 0}, {3, 0, 0}) == 0);
  CHECK(weyl_mult({2, 1, 0}, {1, 1, 1}) == 2);
}

TEST_CASE("SSYT oracle: frozen instances") {
  CHECK(ssyt_count({2, 1, 0}, {1, 1, 1}) == 2);
  CHECK(ssyt_count({2, 1, 0}, {2, 1, 0}) == 1);
  CHECK(ssyt_count({1, 1, 1}, {1, 1, 1}) == 1);
  CHECK(ssyt_count({2, 0, 0}, {1, 1, 0}) == 1);
  CHECK(ssyt_count({2, 0, 0}, {0, 1, 1}) == 1);
  CHECK(ssyt_count({1, 1, 0}, {1, 1, 0}) == 1);
  // shifted copies count the same
  CHECK(ssyt_count({1, 0, -1}, {0, 0, 0}) == ssyt_count({2, 1, 0}, {1, 1, 1}));
}

TEST_CASE("Kostant equals SSYT enumeration on a sweep") {
  for (Int top = 0; top <= 12; ++top)
    for (Int mid = 0; mid <= top; ++mid) {
      Weight lam{top, mid, 0};
      for (Int a = 0; a <= top; ++a)
        for (Int b = 0; b <= top; ++b) {
          Weight nu = lam - a * root_vector(Root::a12) - b * root_vector(Root::a23);
          CHECK(weyl_mult(lam, nu) == ssyt_count(lam, nu));
        }
    }
}

TEST_CASE("Weyl dimension: product formula vs multiplicity sum vs SSYT") {
  CHECK(weyl_dim({1, 0, -1}) == 8);
  CHECK(weyl_dim({2, 1, 0}) == 8);
  CHECK(weyl_dim({1, 1, 1}) == 1);
  CHECK(weyl_dim({4, 2, 0}) == 27);
  for (Int top = 0; top <= 9; ++top)
    for (Int mid = 0; mid <= top; ++mid) {
      Weight lam{top, mid, 0};
      CHECK(weyl_char(lam).dim() == weyl_dim(lam));
    }
}

TEST_CASE("weyl_char of the determinant line") {
  FormalCharacter det = weyl_char({1, 1, 1});
  CHECK(det.entries().size() == 1);
  CHECK(det.mult({1, 1, 1}) == 1);
}

TEST_CASE("weyl_char vanishes off the dominant cone") {
  CHECK(weyl_char({0, 1, 0}).zero());
  CHECK(simple_char({0, 1, 0}, 5).zero());
  CHECK(tilting_char({0, 1, 0}, 5).zero());
}

TEST_CASE("characters of modules are S3-stable") {
  std::uniform_int_distribution<Int> d(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Int d1 = d(rng), d2 = d(rng);
    Weight lam{d1 + d2, d2, 0};
    FormalCharacter v = weyl_char(lam);
    FormalCharacter l = simple_char(lam, 5);
    for (const auto& w : weyl_group())
      for (const auto& [nu, m] : v.entries()) {
        CHECK(v.mult(w.act(nu)) == m);
        CHECK(l.mult(w.act(nu)) == l.mult(nu));
      }
  }
}

TEST_CASE("simple characters: alcove cases at p=5") {
  CHECK(simple_char({2, 1, 0}, 5).dim() == 8);    // C(1): L = V
  CHECK(simple_char({4, 2, 0}, 5).dim() == 19);   // C(2): 27 - 8
  CHECK(simple_char({4, 0, 0}, 5).dim() == 15);   // C(2|3): L = V
  CHECK_THROWS_AS(simple_char({6, 1, 0}, 5), std::domain_error);
}

TEST_CASE("simple character multiplicities are nonnegative") {
  for (Int p : {5LL, 7LL, 11LL})
    for (const Weight& lam : restricted_weights(p)) {
      FormalCharacter c = simple_char(lam, p);
      for (const auto& [nu, m] : c.entries()) CHECK(m > 0);
    }
}

TEST_CASE("tilting characters: alcove cases at p=5") {
  CHECK(tilting_char({2, 1, 0}, 5) == weyl_char({2, 1, 0}));
  CHECK(tilting_char({4, 2, 0}, 5).dim() == 35);  // V(4,2,0) + V(3,2,1)
  CHECK(tilting_char({6, 1, 0}, 5).dim() == 90);  // C(3): V(6,1,0) + V(5,2,0), 48 + 42
  CHECK(tilting_char({6, 1, 0}, 5) == weyl_char({6, 1, 0}) + weyl_char({5, 2, 0}));
  CHECK_THROWS_AS(tilting_char({9, 1, 0}, 5), std::domain_error);  // other-dominant
}

TEST_CASE("tilting characters on C(p) shapes stay honest in dimension") {
  // (p,p-1), (p-1,p), (p,p) at p=5, third coordinate 0
  Weight a{9, 4, 0}, b{9, 5, 0}, c{10, 5, 0};
  CHECK(tilting_char(a, 5) == weyl_char(a) + weyl_char(a - root_vector(Root::a12)) +
                                  weyl_char(a - root_vector(Root::a13)));
  CHECK(tilting_char(b, 5) == weyl_char(b) + weyl_char(b - root_vector(Root::a23)) +
                                  weyl_char(b - root_vector(Root::a13)));
  FormalCharacter six;
  for (Root r : kAllRoots) six += weyl_char(c - root_vector(Root::a13) + root_vector(r));
  CHECK(tilting_char(c, 5) == six);
}

TEST_CASE("tilting characters are compatible with duality") {
  // T(-w0 lambda) is the dual of T(lambda): its character is the reflection
  // nu -> -nu of the original. Relates the C(3) and C(3') rows and pins the
  // C(p) rows against each other.
  for (Int p : {5LL, 7LL})
    for (Int d1 = 0; d1 <= 2 * p + 2; ++d1)
      for (Int d2 = 0; d2 <= 2 * p + 2; ++d2) {
        Weight lam{d1 + d2, d2, 0};
        Region r = classify_alcove(lam, p);
        if (!(region_restricted(r) || r == Region::C3 || r == Region::C3p || r == Region::Cp))
          continue;
        FormalCharacter a = tilting_char(lam, p);
        FormalCharacter b = tilting_char(dual_weight(lam), p);
        for (const auto& [nu, m] : a.entries()) CHECK(b.mult(-nu) == m);
        CHECK(a.dim() == b.dim());
      }
}

TEST_CASE("tilting characters dominate their socle") {
  for (Int p : {5LL, 7LL})
    for (Int d1 = 0; d1 <= 2 * p + 2; ++d1)
      for (Int d2 = 0; d2 <= 2 * p + 2; ++d2) {
        Weight lam{d1 + d2, d2, 0};
        Region r = classify_alcove(lam, p);
        if (!(region_restricted(r) || r == Region::C3 || r == Region::C3p || r == Region::Cp))
          continue;
        FormalCharacter t = tilting_char(lam, p);
        FormalCharacter socle = simple_char(lambda_prime(lam, p), p);
        for (const auto& [nu, m] : socle.entries()) CHECK(t.mult(nu) >= m);
      }
}

TEST_CASE("char_mul basics") {
  FormalCharacter any = weyl_char({3, 1, 0});
  CHECK(char_mul(FormalCharacter::unit(), any) == any);
  FormalCharacter std3 = weyl_char({1, 0, 0});
  FormalCharacter prod = char_mul(std3, std3);
  CHECK(prod.dim() == 9);
  auto dec = decompose_weyl(prod);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == std::pair<Weight, Int>{{2, 0, 0}, 1});
  CHECK(dec[1] == std::pair<Weight, Int>{{1, 1, 0}, 1});
}

TEST_CASE("char_mul commutes") {
  std::uniform_int_distribution<Int> d(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    FormalCharacter a = weyl_char({d(rng) + d(rng), d(rng), 0});
    FormalCharacter b = weyl_char({d(rng) + d(rng), d(rng), 0});
    CHECK(char_mul(a, b) == char_mul(b, a));
  }
}

TEST_CASE("decompose_weyl on V(lambda) ⊗ V(a13): six roots plus twice the middle") {
  // [V(lam) ⊗ V(a13)] = sum over roots of [V(lam+a)] + 2[V(lam)], non-dominant
  // terms dropped.
  Weight lam{2, 1, 0};
  auto dec = decompose_weyl(char_mul(weyl_char(lam), weyl_char({1, 0, -1})));
  FormalCharacter expect;
  for (Root r : kAllRoots) expect += weyl_char(lam + root_vector(r));
  expect += weyl_char(lam);
  expect += weyl_char(lam);
  FormalCharacter got;
  for (const auto& [w, m] : dec)
    for (Int i = 0; i < m; ++i) got += weyl_char(w);
  CHECK(got == expect);
  // the multiplicity of V(lam) itself is 2
  bool found = false;
  for (const auto& [w, m] : dec)
    if (w == lam) {
      found = true;
      CHECK(m == 2);
    }
  CHECK(found);
}

TEST_CASE("decompose_weyl round trip and corner cases") {
  CHECK(decompose_weyl(weyl_char({2, 1, 0})) ==
        std::vector<std::pair<Weight, Int>>{{{2, 1, 0}, 1}});
  CHECK(decompose_weyl(FormalCharacter{}).empty());
  FormalCharacter malformed;
  malformed.add({0, 1, 0}, 1);
  CHECK_THROWS_AS(decompose_weyl(malformed), std::domain_error);
  // virtual combinations decompose too
  FormalCharacter virt = weyl_char({3, 1, 0}) - weyl_char({2, 1, 1}) - weyl_char({2, 1, 1});
  auto dec = decompose_weyl(virt);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == std::pair<Weight, Int>{{3, 1, 0}, 1});
  CHECK(dec[1] == std::pair<Weight, Int>{{2, 1, 1}, -2});
}

TEST_CASE("random Weyl decompositions invert exactly") {
  std::uniform_int_distribution<Int> d(0, 4);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    FormalCharacter c;
    std::map<Weight, Int> truth;
    for (int k = 0; k < 4; ++k) {
      Int d1 = d(rng), d2 = d(rng);
      Weight w{d1 + d2, d2, 0};
      Int m = coeff(rng);
      truth[w] += m;
      FormalCharacter piece = weyl_char(w);
      for (const auto& [nu, mm] : piece.entries()) c.add(nu, m * mm);
    }
    std::erase_if(truth, [](const auto& kv) { return kv.second == 0; });
    auto dec = decompose_weyl(c);
    std::map<Weight, Int> got(dec.begin(), dec.end());
    CHECK(got == truth);
  }
}
