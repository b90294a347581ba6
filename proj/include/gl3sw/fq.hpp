#pragma once

#include "gl3sw/weights.hpp"

namespace gl3sw {

/// How tuple shapes are compared: as Serre-weight classes (default) or literally.
enum class TwistPolicy { UpToTwist, OnTheNose };

/// Canonical form of the H-eigencharacter chi_t: componentwise residues of
/// sum_j p^j t_j mod (q-1), each in [0, q-1).
std::array<Int, 3> chi_residues(const WeightTuple& t, const Context& ctx);

bool chi_equal(const WeightTuple& a, const WeightTuple& b, const Context& ctx);

/// Same predicate via explicit membership of a-b in (p - pi) X(T_f); the shift pi
/// is the one under which (p - pi)c has slot-j coefficient p*c_j - c_{j-1}.
bool chi_equal_lattice(const WeightTuple& a, const WeightTuple& b, const Context& ctx);

/// F(a) ≅ F(b) for p-restricted tuples: summed weights differ by a uniform triple
/// divisible by q-1.
bool serre_equiv(const WeightTuple& a, const WeightTuple& b, const Context& ctx);

/// Slot-wise twist equivalence: a_j - b_j = c_j*(1,1,1) with (q-1) | sum_j p^j c_j.
bool twist_equiv(const WeightTuple& a, const WeightTuple& b, const Context& ctx);

/// Does target match base + alpha_{j0} (up to twist, or literally)?
bool twist_shift_match(const WeightTuple& target, const WeightTuple& base, RootShift alpha,
                       int j0, const Context& ctx,
                       TwistPolicy policy = TwistPolicy::UpToTwist);

/// Canonical twist representative: per-slot SL3 parts are kept and the third
/// coordinates become the p-adic digits of sum_j p^j t_{j,3} mod (q-1).
WeightTuple normalize_twist(const WeightTuple& t, const Context& ctx);

/// One weight of L(lambda) contributing to the H-eigenspace F(lambda)^chi.
struct SupportEntry {
  WeightTuple nu;
  std::vector<Int> dims;  // per-slot dim L(lambda_j)_{nu_j}
  Int total = 0;

  auto operator<=>(const SupportEntry&) const = default;
};

/// All nu with chi_nu = chi_mu and every slot weight space of L(lambda) nonzero,
/// enumerated through the (p - pi)-lattice c-grid. lambda must be p-restricted.
std::vector<SupportEntry> eigenspace_support(const WeightTuple& lambda, const WeightTuple& mu,
                                             const Context& ctx);

/// Independent route: sweep the whole per-slot weight-support box and filter by
/// chi equality. Exponential in f; intended for cross-checks at f = 1.
std::vector<SupportEntry> eigenspace_support_bruteforce(const WeightTuple& lambda,
                                                        const WeightTuple& mu,
                                                        const Context& ctx);

}  // namespace gl3sw
