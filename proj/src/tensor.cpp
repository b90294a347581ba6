#include "gl3sw/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl3sw {

namespace {

Int delta(bool cond) { return cond ? 1 : 0; }

// Appends L(w) or T(w) per the good-pair rule; non-dominant highest weights vanish.
void push_LT(SummandList& list, const Weight& base, const Weight& w, Int p) {
  if (!w.dominant()) return;
  list.push_back({good_pair(base, w, p) ? SummandKind::Simple : SummandKind::Tilting, w, 1});
}

void push_L(SummandList& list, const Weight& w, Int mult) {
  if (!w.dominant() || mult == 0) return;
  if (mult < 0) throw std::logic_error("tensor_simple_alpha13: negative multiplicity");
  list.push_back({SummandKind::Simple, w, mult});
}

}  // namespace

SummandList tensor_simple_alpha13(const Weight& lambda, Int p) {
  if (!is_p_restricted(lambda, p))
    throw std::domain_error("tensor_simple_alpha13: weight " + to_string(lambda) +
                            " is not p-restricted");
  const Weight a12 = root_vector(Root::a12);
  const Weight a23 = root_vector(Root::a23);
  const Weight a13 = root_vector(Root::a13);
  auto [d1, d2] = sl3_restrict(lambda);
  const Int d13 = d1 + d2;
  const Region region = classify_alcove(lambda, p);

  SummandList out;
  if (region == Region::C2) {
    push_L(out, lambda + a13, 1);
    push_LT(out, lambda, lambda + a12, p);
    push_LT(out, lambda, lambda + a23, p);
    push_L(out, lambda - a13, delta(d13 >= p + 1));
    push_L(out, lambda - a12, delta(d13 >= p));
    push_L(out, lambda - a23, delta(d13 >= p));
    Int self = delta(d1 <= p - 3) + delta(d2 <= p - 3) - delta(d13 == p - 1);
    push_L(out, lambda, self);
    return out;
  }

  // Outside C(2) the factor L(lambda) equals T(lambda), so the tensor with the
  // tilting L(a13) is tilting and splits uniquely into indecomposable tiltings;
  // peel them off the exact character. Summands whose region forces T = L are
  // reported as simples.
  FormalCharacter product = char_mul(weyl_char(lambda), weyl_char(a13));
  for (const auto& [mu, mult] : decompose_tilting(product, p)) {
    Region r = classify_alcove(mu, p);
    SummandKind kind = (r == Region::C1 || r == Region::C1_2 || r == Region::C2_3)
                           ? SummandKind::Simple
                           : SummandKind::Tilting;
    out.push_back({kind, mu, mult});
  }

  // Transcription guard: the self multiplicity must match the delta count.
  Int expected_self = (d1 == p - 1 && d2 == p - 1)
                          ? 2
                          : delta(d1 >= 1) + delta(d2 >= 1) - delta(d13 == p - 3) -
                                delta(d13 == 2 * p - 3);
  Int got_self = 0;
  for (const Summand& s : out)
    if (s.highest == lambda) got_self += s.mult;
  if (got_self != expected_self)
    throw std::logic_error("tensor_simple_alpha13: self multiplicity " +
                           std::to_string(got_self) + " != expected " +
                           std::to_string(expected_self) + " at " + to_string(lambda));
  return out;
}

FormalCharacter summand_char(const Summand& s, Int p) {
  FormalCharacter base =
      s.kind == SummandKind::Simple ? simple_char(s.highest, p) : tilting_char(s.highest, p);
  FormalCharacter out;
  for (const auto& [w, m] : base.entries()) out.add(w, m * s.mult);
  return out;
}

FormalCharacter summand_list_char(const SummandList& list, Int p) {
  FormalCharacter out;
  for (const Summand& s : list) out += summand_char(s, p);
  return out;
}

WeightTuple tilting_socle_tuple(const WeightTuple& t, int j0, const Context& ctx) {
  if (t.f() != ctx.f) throw std::domain_error("tilting_socle_tuple: tuple length differs from f");
  j0 = ((j0 % ctx.f) + ctx.f) % ctx.f;
  for (int j = 0; j < ctx.f; ++j)
    if (j != j0 && !is_p_restricted(t.slot(j), ctx.p))
      throw std::domain_error("tilting_socle_tuple: slot " + std::to_string(j) +
                              " must be p-restricted");
  WeightTuple out = t;
  out.slot(j0) = lambda_prime(t.slot(j0), ctx.p);  // rejects out-of-domain slots
  return out;
}

SocleReport socle_tensor(const WeightTuple& t, int j0, const Context& ctx) {
  if (!is_p_restricted(t, ctx.p))
    throw std::domain_error("socle_tensor: tuple must be p-restricted");
  j0 = ((j0 % ctx.f) + ctx.f) % ctx.f;
  const Weight& base = t.slot(j0);

  SocleReport report;
  report.exact = sl3_restrict(base) != std::pair<Int, Int>{0, 0};  // lambda_{j0} not in X_0(T)
  auto consider = [&](RootShift alpha) {
    Weight shifted = base + shift_vector(alpha);
    if (!good_pair(base, shifted, ctx.p)) return;
    report.constituents.push_back(
        normalize_twist(shift_slot(t, j0, shift_vector(alpha)), ctx));
  };
  consider(std::nullopt);
  for (Root r : kAllRoots) consider(r);
  std::sort(report.constituents.begin(), report.constituents.end());
  report.constituents.erase(
      std::unique(report.constituents.begin(), report.constituents.end()),
      report.constituents.end());
  return report;
}

}  // namespace gl3sw
