#pragma once

#include <map>
#include <vector>

#include "gl3sw/alcoves.hpp"
#include "gl3sw/fq.hpp"
#include "gl3sw/weights.hpp"

namespace gl3sw {

enum class ExtStatus { EqualByVanishing, EqualByTheorem, NotCovered };

std::string ext_status_name(ExtStatus s);

struct ShiftMatch {
  int j0 = 0;
  RootShift alpha;
  bool good = false;

  auto operator<=>(const ShiftMatch&) const = default;
};

/// All (j0, alpha in Phi ∪ {0}) with lamp ~ lam + alpha_{j0} under the twist policy,
/// tagged with good_pair(lam_{j0}, lam_{j0} + alpha). An empty list, or one with no
/// good tag, certifies Hom(tau, sigma ⊗ F(a13)^{[j0]}) = 0 for every j0.
std::vector<ShiftMatch> hom_obstruction(const WeightTuple& lam, const WeightTuple& lamp,
                                        const Context& ctx,
                                        TwistPolicy policy = TwistPolicy::UpToTwist);

struct ExtVerdict {
  ExtStatus status = ExtStatus::NotCovered;
  std::vector<ShiftMatch> matches;
  bool bad_forward = false;
  bool bad_backward = false;
  // Witnessing (j0, alpha) shapes for the flags above, when they are set.
  std::optional<std::pair<int, RootShift>> bad_forward_witness, bad_backward_witness;
  Int h1_dim = 0;  // dim H^1(K_1/Z_1, F) = 8f
  TwistPolicy policy = TwistPolicy::UpToTwist;
};

/// Does Ext^1 over K/Z_1 between F(lamp) and F(lam) agree with the finite-group
/// Ext^1? EqualByVanishing and EqualByTheorem are guarantees; NotCovered means no
/// conclusion, never an inequality claim.
ExtVerdict ext_compare(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
                       TwistPolicy policy = TwistPolicy::UpToTwist);

/// p-restricted tuples with every slot third coordinate zero, ordered.
std::vector<WeightTuple> enumerate_restricted(const Context& ctx);

struct ScanOptions {
  bool exhaustive = false;  // all ordered pairs instead of single-slot shifts
  int jobs = 1;
  Int max_pairs = 4'000'000;
  TwistPolicy policy = TwistPolicy::UpToTwist;
};

struct ScanRecord {
  WeightTuple lam, lamp;
  ExtVerdict verdict;
};

struct ScanResult {
  std::map<ExtStatus, Int> counts;
  std::vector<ScanRecord> records;  // canonical pair order
  Int total = 0;
};

/// Deterministic sweep of verdicts; pair order and output are independent of jobs.
ScanResult scan(const Context& ctx, const ScanOptions& opts);

}  // namespace gl3sw
