#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gl3sw {

using Int = long long;

/// A character of the diagonal torus of GL3 in coordinates (lambda1, lambda2, lambda3).
struct Weight {
  std::array<Int, 3> c{0, 0, 0};

  Weight() = default;
  Weight(Int a, Int b, Int d) : c{a, b, d} {}

  Int operator[](int i) const { return c[static_cast<size_t>(i)]; }
  Int& operator[](int i) { return c[static_cast<size_t>(i)]; }

  auto operator<=>(const Weight&) const = default;

  friend Weight operator+(const Weight& a, const Weight& b) {
    return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]};
  }
  friend Weight operator*(Int k, const Weight& w) {
    return {k * w.c[0], k * w.c[1], k * w.c[2]};
  }
  Weight operator-() const { return {-c[0], -c[1], -c[2]}; }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }

  Int sum() const { return c[0] + c[1] + c[2]; }
  bool dominant() const { return c[0] >= c[1] && c[1] >= c[2]; }
};

/// Roots of GL3: alpha_ij = e_i - e_j. Phi+ = {a12, a23, a13}.
enum class Root { a12, a23, a13, a21, a32, a31 };

inline constexpr std::array<Root, 3> kPositiveRoots{Root::a12, Root::a23, Root::a13};
inline constexpr std::array<Root, 6> kAllRoots{Root::a12, Root::a23, Root::a13,
                                               Root::a21, Root::a32, Root::a31};

Weight root_vector(Root r);
bool root_positive(Root r);
Root root_negated(Root r);

/// An element of Phi ∪ {0}; nullopt encodes 0.
using RootShift = std::optional<Root>;

Weight shift_vector(RootShift s);

/// <lambda, alpha_ij^vee> = lambda_i - lambda_j.
Int pairing(const Weight& w, Root r);

/// lo <= hi in the dominance order: hi - lo is a nonnegative sum of simple roots.
bool dominance_leq(const Weight& lo, const Weight& hi);

/// Both consecutive differences lie in [0, p^n - 1].
bool is_p_restricted(const Weight& w, Int p, int n = 1);

/// (lambda1 - lambda2, lambda2 - lambda3).
std::pair<Int, Int> sl3_restrict(const Weight& w);

/// Affine reflections across the walls lambda1-lambda3 = p-2, lambda1-lambda2 = p-1,
/// lambda2-lambda3 = p-1.
enum class Reflection { s2, s3, s3p };

Weight reflect(Reflection kind, const Weight& w, Int p);

/// A permutation of coordinate slots {0,1,2}; img[i] is the image of i.
struct WeylElement {
  std::array<int, 3> img{0, 1, 2};

  auto operator<=>(const WeylElement&) const = default;

  int sign() const;
  Weight act(const Weight& w) const;
};

/// The six elements in the fixed order id, (12), (23), (123), (132), (13).
const std::array<WeylElement, 6>& weyl_group();
WeylElement w0();

/// -w0 lambda = (-lambda3, -lambda2, -lambda1).
Weight dual_weight(const Weight& w);

/// Ambient parameters: p >= 5 and the number of embeddings f >= 1.
struct Context {
  Int p = 5;
  int f = 1;

  Int q() const;                      // p^f
  Int q1() const { return q() - 1; }  // order of F_q^x
};

/// An f-indexed family of weights; slot indices are cyclic mod f.
struct WeightTuple {
  std::vector<Weight> slots;

  WeightTuple() = default;
  explicit WeightTuple(std::vector<Weight> s) : slots(std::move(s)) {}
  WeightTuple(std::initializer_list<Weight> s) : slots(s) {}

  int f() const { return static_cast<int>(slots.size()); }
  const Weight& slot(int j) const;  // cyclic index
  Weight& slot(int j);

  auto operator<=>(const WeightTuple&) const = default;
};

bool is_p_restricted(const WeightTuple& t, Int p);
WeightTuple dualize(const WeightTuple& t);

/// Adds vec to slot j0 (cyclic) and returns the shifted tuple.
WeightTuple shift_slot(const WeightTuple& t, int j0, const Weight& vec);

// Text formats: Weight "a,b,c"; WeightTuple parts joined by ";" in slot order.
std::string to_string(const Weight& w);
std::string to_string(const WeightTuple& t);
Weight parse_weight(const std::string& text);
WeightTuple parse_tuple(const std::string& text);

std::string shift_name(RootShift s);
RootShift parse_shift(const std::string& text);

}  // namespace gl3sw
