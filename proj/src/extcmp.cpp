#include "gl3sw/extcmp.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "gl3sw/chars.hpp"

namespace gl3sw {

std::string ext_status_name(ExtStatus s) {
  switch (s) {
    case ExtStatus::EqualByVanishing: return "EqualByVanishing";
    case ExtStatus::EqualByTheorem: return "EqualByTheorem";
    case ExtStatus::NotCovered: return "NotCovered";
  }
  throw std::logic_error("unreachable status tag");
}

std::vector<ShiftMatch> hom_obstruction(const WeightTuple& lam, const WeightTuple& lamp,
                                        const Context& ctx, TwistPolicy policy) {
  if (!is_p_restricted(lam, ctx.p) || !is_p_restricted(lamp, ctx.p))
    throw std::domain_error("hom_obstruction: both tuples must be p-restricted");
  std::vector<ShiftMatch> out;
  for (int j0 = 0; j0 < ctx.f; ++j0) {
    auto consider = [&](RootShift alpha) {
      if (!twist_shift_match(lamp, lam, alpha, j0, ctx, policy)) return;
      Weight shifted = lam.slot(j0) + shift_vector(alpha);
      out.push_back({j0, alpha, good_pair(lam.slot(j0), shifted, ctx.p)});
    };
    consider(std::nullopt);
    for (Root r : kAllRoots) consider(r);
  }
  return out;
}

ExtVerdict ext_compare(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
                       TwistPolicy policy) {
  ExtVerdict v;
  v.policy = policy;
  v.matches = hom_obstruction(lam, lamp, ctx, policy);
  v.bad_forward_witness = bad_pair_witness(lam, lamp, ctx, policy);
  v.bad_backward_witness = bad_pair_witness(lamp, lam, ctx, policy);
  v.bad_forward = v.bad_forward_witness.has_value();
  v.bad_backward = v.bad_backward_witness.has_value();
  v.h1_dim = simple_char(root_vector(Root::a13), ctx.p).dim() * ctx.f;

  bool any_good = false;
  bool all_slots_off_center = true;
  for (const ShiftMatch& m : v.matches) {
    if (m.good) any_good = true;
    if (sl3_restrict(lam.slot(m.j0)) == std::pair<Int, Int>{0, 0}) all_slots_off_center = false;
  }
  if (!any_good && all_slots_off_center) {
    // The socle superset excludes tau at every slot, and the exclusion is exact.
    v.status = ExtStatus::EqualByVanishing;
  } else if (!v.bad_forward && !v.bad_backward) {
    v.status = ExtStatus::EqualByTheorem;
  } else {
    v.status = ExtStatus::NotCovered;
  }
  return v;
}

std::vector<WeightTuple> enumerate_restricted(const Context& ctx) {
  std::vector<Weight> slot_values;
  for (Int d1 = 0; d1 <= ctx.p - 1; ++d1)
    for (Int d2 = 0; d2 <= ctx.p - 1; ++d2) slot_values.push_back({d1 + d2, d2, 0});
  std::sort(slot_values.begin(), slot_values.end());

  std::vector<WeightTuple> out;
  std::vector<size_t> idx(static_cast<size_t>(ctx.f), 0);
  while (true) {
    WeightTuple t;
    for (int j = 0; j < ctx.f; ++j) t.slots.push_back(slot_values[idx[static_cast<size_t>(j)]]);
    out.push_back(std::move(t));
    int j = ctx.f - 1;  // last slot varies fastest: lexicographic tuple order
    for (; j >= 0; --j) {
      if (++idx[static_cast<size_t>(j)] < slot_values.size()) break;
      idx[static_cast<size_t>(j)] = 0;
    }
    if (j < 0) break;
  }
  return out;
}

ScanResult scan(const Context& ctx, const ScanOptions& opts) {
  const std::vector<WeightTuple> tuples = enumerate_restricted(ctx);

  // Materialize the pair list in canonical order first; workers only fill verdicts.
  std::vector<std::pair<WeightTuple, WeightTuple>> pairs;
  if (opts.exhaustive) {
    const Int total = static_cast<Int>(tuples.size()) * static_cast<Int>(tuples.size());
    if (total > opts.max_pairs)
      throw std::domain_error("scan: " + std::to_string(total) +
                              " ordered pairs exceed the configured bound " +
                              std::to_string(opts.max_pairs));
    pairs.reserve(static_cast<size_t>(total));
    for (const auto& a : tuples)
      for (const auto& b : tuples) pairs.emplace_back(a, b);
  } else {
    for (const auto& a : tuples) {
      auto consider = [&](RootShift alpha, int j0) {
        WeightTuple b = shift_slot(a, j0, shift_vector(alpha));
        if (!is_p_restricted(b, ctx.p)) return;
        pairs.emplace_back(a, normalize_twist(b, ctx));
      };
      consider(std::nullopt, 0);
      for (int j0 = 0; j0 < ctx.f; ++j0)
        for (Root r : kAllRoots) consider(r, j0);
    }
  }

  ScanResult result;
  result.records.resize(pairs.size());
  const int jobs = std::max(1, opts.jobs);
  auto worker = [&](size_t start) {
    for (size_t i = start; i < pairs.size(); i += static_cast<size_t>(jobs)) {
      result.records[i] = {pairs[i].first, pairs[i].second,
                           ext_compare(pairs[i].first, pairs[i].second, ctx, opts.policy)};
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < jobs; ++k) threads.emplace_back(worker, static_cast<size_t>(k));
    for (auto& th : threads) th.join();
  }

  result.total = static_cast<Int>(pairs.size());
  for (ExtStatus s :
       {ExtStatus::EqualByVanishing, ExtStatus::EqualByTheorem, ExtStatus::NotCovered})
    result.counts[s] = 0;
  for (const ScanRecord& r : result.records) ++result.counts[r.verdict.status];
  return result;
}

}  // namespace gl3sw
