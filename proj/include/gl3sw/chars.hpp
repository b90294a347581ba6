#pragma once

#include <map>
#include <vector>

#include "gl3sw/weights.hpp"

namespace gl3sw {

/// Element of the character ring: a finite map Weight -> Z with no zero entries.
/// Virtual characters (negative multiplicities) are allowed.
class FormalCharacter {
 public:
  using Map = std::map<Weight, Int>;

  FormalCharacter() = default;

  static FormalCharacter unit() {
    FormalCharacter c;
    c.add(Weight{}, 1);
    return c;
  }

  void add(const Weight& w, Int m) {
    if (m == 0) return;
    auto it = entries_.find(w);
    if (it == entries_.end()) {
      entries_.emplace(w, m);
    } else if ((it->second += m) == 0) {
      entries_.erase(it);
    }
  }

  Int mult(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Sum of multiplicities; the dimension when the character is a module's.
  Int dim() const {
    Int d = 0;
    for (const auto& [w, m] : entries_) d += m;
    return d;
  }

  bool zero() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  bool operator==(const FormalCharacter&) const = default;

  FormalCharacter& operator+=(const FormalCharacter& o) {
    for (const auto& [w, m] : o.entries_) add(w, m);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    for (const auto& [w, m] : o.entries_) add(w, -m);
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) {
    return a += b;
  }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) {
    return a -= b;
  }

 private:
  Map entries_;
};

/// Convolution product, the Grothendieck-ring multiplication.
FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);

/// Number of ways to write mu = n1*a12 + n2*a23 with n1, n2 >= 0, counted as
/// min{n1, n2} + 1; zero off the nonnegative root cone.
Int kostant_partition(const Weight& mu);

/// dim V(lambda)_nu by the alternating Kostant sum (rho realized as a13).
Int weyl_mult(const Weight& lambda, const Weight& nu);

/// Kostka oracle: direct enumeration of semistandard Young tableaux of shape
/// lambda and content nu (both shifted together into nonnegative coordinates).
Int ssyt_count(const Weight& lambda, const Weight& nu);

/// Product formula (x+1)(y+1)(x+y+2)/2; zero for non-dominant lambda.
Int weyl_dim(const Weight& lambda);

/// Full weight-multiplicity map of V(lambda); zero character off X(T)+.
FormalCharacter weyl_char(const Weight& lambda);

/// [L(lambda)] for p-restricted lambda: Weyl character, minus the s2-reflected
/// one on the upper alcove C(2). Zero character for non-dominant lambda;
/// dominant weights outside X_1(T) are rejected.
FormalCharacter simple_char(const Weight& lambda, Int p);

/// [T(lambda)] on X_1(T) ∪ C(3) ∪ C(3') ∪ C(p) as a short sum of Weyl characters.
FormalCharacter tilting_char(const Weight& lambda, Int p);

/// Unique expansion c = sum mult * weyl_char(w), peeled greedily from the
/// highest weight; throws std::domain_error on inputs outside the span.
std::vector<std::pair<Weight, Int>> decompose_weyl(const FormalCharacter& c);

/// Expansion of the character of a tilting module into indecomposable tilting
/// characters, peeled from the highest weight. Multiplicities of a genuine
/// tilting character are nonnegative; anything else is rejected.
std::vector<std::pair<Weight, Int>> decompose_tilting(const FormalCharacter& c, Int p);

}  // namespace gl3sw
