#pragma once

#include "gl3sw/fq.hpp"
#include "gl3sw/weights.hpp"

namespace gl3sw {

/// Linkage regions. A p-restricted weight lies in exactly one of C1, C1_2, C2, C2_3.
enum class Region { C1, C1_2, C2, C2_3, C3, C3p, Cp, OtherDominant, NonDominant };

std::string region_name(Region r);
Region parse_region(const std::string& name);

Region classify_alcove(const Weight& w, Int p);

/// True for the four regions partitioning X_1(T).
bool region_restricted(Region r);

/// Highest weight of the tilting socle: soc T(lambda) = L(lambda').
/// Defined on X_1(T) ∪ C(3) ∪ C(3') ∪ C(p); throws std::domain_error elsewhere.
Weight lambda_prime(const Weight& w, Int p);

/// Membership in C(alpha)+ for alpha in Phi+ ∪ {0}; C(0)+ = X_1(T).
bool in_C_alpha_plus(const Weight& w, RootShift alpha, Int p);

/// The ten-entry region-pair table; false when either weight is not p-restricted.
bool good_pair(const Weight& a, const Weight& b, Int p);

/// Membership in C(alpha, j0); separate definitions for f = 1 and f >= 2.
bool in_C_alpha_j0(const WeightTuple& t, RootShift alpha, int j0, const Context& ctx);

/// Is (lam, lamp) a bad pair? Both tuples must be p-restricted. Shape matching
/// follows the given twist policy.
bool bad_pair(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
              TwistPolicy policy = TwistPolicy::UpToTwist);

/// The (j0, alpha) shape whose side condition makes the pair bad, if any.
std::optional<std::pair<int, RootShift>> bad_pair_witness(
    const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
    TwistPolicy policy = TwistPolicy::UpToTwist);

struct PairVerdict {
  bool good = false;  // good_pair of the two weights; meaningful at f = 1
  bool bad_forward = false;
  bool bad_backward = false;
  std::optional<std::pair<int, RootShift>> matched_shape;
};

PairVerdict pair_verdict(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
                         TwistPolicy policy = TwistPolicy::UpToTwist);

}  // namespace gl3sw
