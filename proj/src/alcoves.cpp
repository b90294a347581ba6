#include "gl3sw/alcoves.hpp"

#include <stdexcept>

namespace gl3sw {

std::string region_name(Region r) {
  switch (r) {
    case Region::C1: return "C(1)";
    case Region::C1_2: return "C(1|2)";
    case Region::C2: return "C(2)";
    case Region::C2_3: return "C(2|3)";
    case Region::C3: return "C(3)";
    case Region::C3p: return "C(3')";
    case Region::Cp: return "C(p)";
    case Region::OtherDominant: return "other-dominant";
    case Region::NonDominant: return "non-dominant";
  }
  throw std::logic_error("unreachable region tag");
}

Region parse_region(const std::string& name) {
  for (Region r : {Region::C1, Region::C1_2, Region::C2, Region::C2_3, Region::C3, Region::C3p,
                   Region::Cp, Region::OtherDominant, Region::NonDominant})
    if (region_name(r) == name) return r;
  throw std::invalid_argument("unknown region '" + name + "'");
}

Region classify_alcove(const Weight& w, Int p) {
  if (!w.dominant()) return Region::NonDominant;
  auto [d1, d2] = sl3_restrict(w);
  const Int d13 = d1 + d2;
  if (is_p_restricted(w, p)) {
    if (d13 <= p - 3) return Region::C1;
    if (d13 == p - 2) return Region::C1_2;
    if (d1 <= p - 2 && d2 <= p - 2) return Region::C2;  // here d13 >= p-1
    return Region::C2_3;
  }
  if ((d1 == p || d1 == p + 1) && d13 <= 2 * p - 2) return Region::C3;
  if ((d2 == p || d2 == p + 1) && d13 <= 2 * p - 2) return Region::C3p;
  if ((d1 == p && d2 == p - 1) || (d1 == p - 1 && d2 == p) || (d1 == p && d2 == p))
    return Region::Cp;
  return Region::OtherDominant;
}

bool region_restricted(Region r) {
  return r == Region::C1 || r == Region::C1_2 || r == Region::C2 || r == Region::C2_3;
}

Weight lambda_prime(const Weight& w, Int p) {
  switch (classify_alcove(w, p)) {
    case Region::C1:
    case Region::C1_2:
    case Region::C2_3:
      return w;
    case Region::C2:
      return reflect(Reflection::s2, w, p);
    case Region::C3:
      return reflect(Reflection::s3, w, p);
    case Region::C3p:
      return reflect(Reflection::s3p, w, p);
    case Region::Cp: {
      auto [d1, d2] = sl3_restrict(w);
      if (d1 == p && d2 == p) return w - 2 * root_vector(Root::a13);
      return w - root_vector(Root::a13);  // (p-1, p) and (p, p-1)
    }
    default:
      throw std::domain_error("lambda_prime: weight " + to_string(w) +
                              " is outside X_1(T) ∪ C(3) ∪ C(3') ∪ C(p)");
  }
}

bool in_C_alpha_plus(const Weight& w, RootShift alpha, Int p) {
  if (!is_p_restricted(w, p)) return false;
  if (!alpha) return true;  // C(0)+ = X_1(T)
  auto [d1, d2] = sl3_restrict(w);
  const Int d13 = d1 + d2;
  switch (*alpha) {
    case Root::a13:
      if (d1 <= p - 2 && d2 <= p - 2 && (d13 <= p - 4 || (p - 1 <= d13 && d13 <= 2 * p - 4)))
        return true;
      return (d1 == p - 2 && d2 == 0) || (d1 == 0 && d2 == p - 2);
    case Root::a12:
      if (d1 <= p - 3 && 1 <= d2 && d2 <= p - 1 &&
          ((1 <= d13 && d13 <= p - 3) || (p - 1 <= d13 && d13 <= 2 * p - 4)))
        return true;
      return d1 == p - 3 && d2 == 1;
    case Root::a23:
      if (1 <= d1 && d1 <= p - 1 && d2 <= p - 3 &&
          ((1 <= d13 && d13 <= p - 3) || (p - 1 <= d13 && d13 <= 2 * p - 4)))
        return true;
      return d1 == 1 && d2 == p - 3;
    default:
      throw std::domain_error("in_C_alpha_plus: alpha must lie in Phi+ ∪ {0}");
  }
}

bool good_pair(const Weight& a, const Weight& b, Int p) {
  if (!is_p_restricted(a, p) || !is_p_restricted(b, p)) return false;
  const Region ra = classify_alcove(a, p);
  const Region rb = classify_alcove(b, p);
  using R = Region;
  static constexpr std::pair<R, R> table[] = {
      {R::C1, R::C1},     {R::C1_2, R::C1_2}, {R::C2_3, R::C2_3}, {R::C2, R::C2},
      {R::C1, R::C1_2},   {R::C1_2, R::C1},   {R::C1_2, R::C2_3}, {R::C2_3, R::C1_2},
      {R::C2_3, R::C2},   {R::C2, R::C2_3},
  };
  for (const auto& [x, y] : table)
    if (ra == x && rb == y) return true;
  return false;
}

bool in_C_alpha_j0(const WeightTuple& t, RootShift alpha, int j0, const Context& ctx) {
  const Int p = ctx.p;
  if (!is_p_restricted(t, p)) return false;
  if (alpha && !root_positive(*alpha))
    throw std::domain_error("in_C_alpha_j0: alpha must lie in Phi+ ∪ {0}");
  j0 = ((j0 % ctx.f) + ctx.f) % ctx.f;

  if (ctx.f == 1) {
    const Weight& w = t.slot(0);
    auto [d1, d2] = sl3_restrict(w);
    if (!alpha)
      return d1 <= p - 3 && d2 <= p - 3 && d1 + d2 != p - 2;
    if (!in_C_alpha_plus(w, alpha, p)) return false;
    switch (*alpha) {
      case Root::a13: return std::min(d1, d2) <= p - 4;
      case Root::a12: return d1 <= p - 4;
      case Root::a23: return d2 <= p - 4;
      default: return false;
    }
  }

  // f >= 2
  auto diffs = [&](int j) { return sl3_restrict(t.slot(j)); };
  auto wide = [&](int j) {  // lambda_{j,1} - lambda_{j,3} >= p-1
    auto [d1, d2] = diffs(j);
    return d1 + d2 >= p - 1;
  };
  if (!alpha) {
    for (int j = 0; j < ctx.f; ++j) {
      auto [d1, d2] = diffs(j);
      if (d1 > p - 2 || d2 > p - 2) return false;
    }
    return true;
  }
  auto [e1, e2] = diffs(j0 - 1);
  switch (*alpha) {
    case Root::a13:
      return in_C_alpha_plus(t.slot(j0), alpha, p) && e1 + e2 <= 2 * p - 3;
    case Root::a12: {
      if (!in_C_alpha_plus(t.slot(j0), alpha, p) || e1 > p - 2) return false;
      auto [d1, d2] = diffs(j0);
      if (d1 == p - 3 && d2 == 1) {
        bool all_wide = true;
        for (int j = 0; j < ctx.f; ++j)
          if (j != j0 && !wide(j)) all_wide = false;
        if (all_wide) return false;  // subtracted exceptional set
      }
      return true;
    }
    case Root::a23: {
      if (!in_C_alpha_plus(t.slot(j0), alpha, p) || e2 > p - 2) return false;
      auto [d1, d2] = diffs(j0);
      if (d1 == 1 && d2 == p - 3) {
        bool all_wide = true;
        for (int j = 0; j < ctx.f; ++j)
          if (j != j0 && !wide(j)) all_wide = false;
        if (all_wide) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

namespace {

// Side condition attached to the bad shape lamp = lam + alpha_{j0}.
bool bad_side_condition(const WeightTuple& lam, RootShift alpha, int j0, const Context& ctx) {
  const Int p = ctx.p;
  j0 = ((j0 % ctx.f) + ctx.f) % ctx.f;
  if (ctx.f == 1) {
    auto [a, b] = sl3_restrict(lam.slot(0));
    if (!alpha)
      return a == p - 2 || a == p - 1 || b == p - 2 || b == p - 1 || a + b == p - 2;
    switch (*alpha) {
      case Root::a13:
        return (a == p - 2 || a == p - 3) && (b == p - 2 || b == p - 3);
      case Root::a12:
        return a == p - 3 && 1 <= b && b <= p - 1;
      case Root::a23:
        return b == p - 3 && 1 <= a && a <= p - 1;
      default:
        return false;
    }
  }

  if (!alpha) {
    for (int j = 0; j < ctx.f; ++j) {
      auto [a, b] = sl3_restrict(lam.slot(j));
      if (a == p - 1 || b == p - 1) return true;
    }
    return false;
  }
  auto [e1, e2] = sl3_restrict(lam.slot(j0 - 1));
  auto exceptional = [&](Int want1, Int want2) {
    auto [d1, d2] = sl3_restrict(lam.slot(j0));
    if (d1 != want1 || d2 != want2) return false;
    for (int j = 0; j < ctx.f; ++j) {
      if (j == j0) continue;
      auto [a, b] = sl3_restrict(lam.slot(j));
      if (a + b < p - 1) return false;
    }
    return true;
  };
  switch (*alpha) {
    case Root::a13:
      return e1 == p - 1 && e2 == p - 1;
    case Root::a12:
      return e1 == p - 1 || exceptional(p - 3, 1);
    case Root::a23:
      return e2 == p - 1 || exceptional(1, p - 3);
    default:
      return false;
  }
}

}  // namespace

std::optional<std::pair<int, RootShift>> bad_pair_witness(const WeightTuple& lam,
                                                          const WeightTuple& lamp,
                                                          const Context& ctx,
                                                          TwistPolicy policy) {
  if (!is_p_restricted(lam, ctx.p) || !is_p_restricted(lamp, ctx.p))
    throw std::domain_error("bad_pair: both tuples must be p-restricted");
  if (lam.f() != ctx.f || lamp.f() != ctx.f)
    throw std::domain_error("bad_pair: tuple length differs from context f");

  if (twist_shift_match(lamp, lam, std::nullopt, 0, ctx, policy) &&
      bad_side_condition(lam, std::nullopt, 0, ctx))
    return {{0, std::nullopt}};
  for (int j0 = 0; j0 < ctx.f; ++j0)
    for (Root r : kPositiveRoots)
      if (twist_shift_match(lamp, lam, r, j0, ctx, policy) &&
          bad_side_condition(lam, r, j0, ctx))
        return {{j0, RootShift{r}}};
  return std::nullopt;
}

bool bad_pair(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
              TwistPolicy policy) {
  return bad_pair_witness(lam, lamp, ctx, policy).has_value();
}

PairVerdict pair_verdict(const WeightTuple& lam, const WeightTuple& lamp, const Context& ctx,
                         TwistPolicy policy) {
  PairVerdict v;
  if (ctx.f == 1) v.good = good_pair(lam.slot(0), lamp.slot(0), ctx.p);
  v.bad_forward = bad_pair(lam, lamp, ctx, policy);
  v.bad_backward = bad_pair(lamp, lam, ctx, policy);
  for (int j0 = 0; j0 < ctx.f && !v.matched_shape; ++j0) {
    if (twist_shift_match(lamp, lam, std::nullopt, j0, ctx, policy))
      v.matched_shape = {j0, std::nullopt};
    for (Root r : kAllRoots)
      if (!v.matched_shape && twist_shift_match(lamp, lam, r, j0, ctx, policy))
        v.matched_shape = {j0, r};
  }
  return v;
}

}  // namespace gl3sw
