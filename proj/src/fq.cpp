#include "gl3sw/fq.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "gl3sw/chars.hpp"

namespace gl3sw {

namespace {

Int pos_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

// Summed weight sum_j p^j t_j as one coordinate triple.
Weight summed_weight(const WeightTuple& t, const Context& ctx) {
  Weight s;
  Int pj = 1;
  for (int j = 0; j < t.f(); ++j, pj *= ctx.p) s += pj * t.slots[static_cast<size_t>(j)];
  return s;
}

// Solve (p - pi) u = s over Z, slot-wise scalars; nullopt when no integer solution.
// u_j = (sum_{i=0}^{f-1} p^{f-1-i} s_{j-i}) / (q - 1).
std::optional<std::vector<Int>> solve_shift_lattice(const std::vector<Int>& s,
                                                    const Context& ctx) {
  const int f = ctx.f;
  std::vector<Int> u(static_cast<size_t>(f));
  for (int j = 0; j < f; ++j) {
    Int acc = 0;
    Int pw = 1;
    for (int i = f - 1; i >= 0; --i, pw *= ctx.p)
      acc += pw * s[static_cast<size_t>(((j - i) % f + f) % f)];
    if (acc % ctx.q1() != 0) return std::nullopt;
    u[static_cast<size_t>(j)] = acc / ctx.q1();
  }
  return u;
}

}  // namespace

std::array<Int, 3> chi_residues(const WeightTuple& t, const Context& ctx) {
  if (t.f() != ctx.f) throw std::domain_error("chi_residues: tuple length differs from f");
  Weight s = summed_weight(t, ctx);
  return {pos_mod(s[0], ctx.q1()), pos_mod(s[1], ctx.q1()), pos_mod(s[2], ctx.q1())};
}

bool chi_equal(const WeightTuple& a, const WeightTuple& b, const Context& ctx) {
  return chi_residues(a, ctx) == chi_residues(b, ctx);
}

bool chi_equal_lattice(const WeightTuple& a, const WeightTuple& b, const Context& ctx) {
  if (a.f() != ctx.f || b.f() != ctx.f)
    throw std::domain_error("chi_equal_lattice: tuple length differs from f");
  // a - b = (p - pi) c must be solvable coordinate by coordinate.
  for (int i = 0; i < 3; ++i) {
    std::vector<Int> s(static_cast<size_t>(ctx.f));
    for (int j = 0; j < ctx.f; ++j)
      s[static_cast<size_t>(j)] = a.slots[static_cast<size_t>(j)][i] -
                                  b.slots[static_cast<size_t>(j)][i];
    if (!solve_shift_lattice(s, ctx)) return false;
  }
  return true;
}

bool serre_equiv(const WeightTuple& a, const WeightTuple& b, const Context& ctx) {
  if (a.f() != ctx.f || b.f() != ctx.f)
    throw std::domain_error("serre_equiv: tuple length differs from f");
  Weight d = summed_weight(a, ctx) - summed_weight(b, ctx);
  return d[0] == d[1] && d[1] == d[2] && d[0] % ctx.q1() == 0;
}

bool twist_equiv(const WeightTuple& a, const WeightTuple& b, const Context& ctx) {
  if (a.f() != b.f() || a.f() != ctx.f) return false;
  Int weighted = 0;
  Int pj = 1;
  for (int j = 0; j < ctx.f; ++j, pj *= ctx.p) {
    Weight d = a.slots[static_cast<size_t>(j)] - b.slots[static_cast<size_t>(j)];
    if (d[0] != d[1] || d[1] != d[2]) return false;
    weighted += pj * d[0];
  }
  return weighted % ctx.q1() == 0;
}

bool twist_shift_match(const WeightTuple& target, const WeightTuple& base, RootShift alpha,
                       int j0, const Context& ctx, TwistPolicy policy) {
  WeightTuple shifted = shift_slot(base, j0, shift_vector(alpha));
  if (policy == TwistPolicy::OnTheNose) return target == shifted;
  return twist_equiv(target, shifted, ctx);
}

WeightTuple normalize_twist(const WeightTuple& t, const Context& ctx) {
  if (t.f() != ctx.f) throw std::domain_error("normalize_twist: tuple length differs from f");
  Int third = 0;
  Int pj = 1;
  for (int j = 0; j < ctx.f; ++j, pj *= ctx.p) third += pj * t.slots[static_cast<size_t>(j)][2];
  Int s = pos_mod(third, ctx.q1());
  WeightTuple out = t;
  for (int j = 0; j < ctx.f; ++j) {
    Int digit = s % ctx.p;
    s /= ctx.p;
    Weight& w = out.slots[static_cast<size_t>(j)];
    w = w + (digit - w[2]) * Weight{1, 1, 1};
  }
  return out;
}

namespace {

// Box bound: L(lambda)_nu != 0 forces nu = lambda - a*a12 - b*a23 with
// 0 <= a, b <= lambda_1 - lambda_3 slot-wise.
bool root_coordinates(const Weight& lam, const Weight& nu, Int& a, Int& b) {
  Weight d = lam - nu;
  if (d.sum() != 0) return false;
  a = d[0];
  b = -d[2];
  return true;
}

std::vector<SupportEntry> finish_support(std::vector<SupportEntry> out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<SupportEntry> eigenspace_support(const WeightTuple& lambda, const WeightTuple& mu,
                                             const Context& ctx) {
  if (!is_p_restricted(lambda, ctx.p))
    throw std::domain_error("eigenspace_support: lambda must be p-restricted");
  if (lambda.f() != ctx.f || mu.f() != ctx.f)
    throw std::domain_error("eigenspace_support: tuple length differs from f");
  const int f = ctx.f;

  // Align mu with the slot-wise root-lattice coset of lambda inside its chi-class.
  std::vector<Int> sums(static_cast<size_t>(f));
  for (int j = 0; j < f; ++j)
    sums[static_cast<size_t>(j)] =
        mu.slots[static_cast<size_t>(j)].sum() - lambda.slots[static_cast<size_t>(j)].sum();
  auto u = solve_shift_lattice(sums, ctx);
  if (!u) return {};  // no weight of L(lambda) carries this eigencharacter
  WeightTuple anchor = mu;
  for (int j = 0; j < f; ++j) {
    Int coeff = ctx.p * (*u)[static_cast<size_t>(j)] - (*u)[static_cast<size_t>((j - 1 + f) % f)];
    anchor.slots[static_cast<size_t>(j)] -= Weight{coeff, 0, 0};
  }

  // Slot data: simple characters and offsets of the anchor from lambda.
  std::vector<FormalCharacter> slot_char(static_cast<size_t>(f));
  std::vector<Int> e1(static_cast<size_t>(f)), e2(static_cast<size_t>(f)),
      width(static_cast<size_t>(f));
  Int max_coeff = 0;
  for (int j = 0; j < f; ++j) {
    slot_char[static_cast<size_t>(j)] = simple_char(lambda.slots[static_cast<size_t>(j)], ctx.p);
    Int a = 0, b = 0;
    if (!root_coordinates(lambda.slots[static_cast<size_t>(j)], anchor.slots[static_cast<size_t>(j)],
                          a, b))
      throw std::logic_error("eigenspace_support: anchor left the root coset");
    e1[static_cast<size_t>(j)] = a;
    e2[static_cast<size_t>(j)] = b;
    auto [d1, d2] = sl3_restrict(lambda.slots[static_cast<size_t>(j)]);
    width[static_cast<size_t>(j)] = d1 + d2;
    max_coeff = std::max({max_coeff, width[static_cast<size_t>(j)] + std::llabs(a) + 1,
                          width[static_cast<size_t>(j)] + std::llabs(b) + 1});
  }

  // Any admissible c satisfies |p c_j - c_{j-1}| <= max_coeff, hence
  // |c_j| <= max_coeff / (p-1); 3 covers every in-box mu at desk scale.
  const Int radius = std::max<Int>(3, (max_coeff + ctx.p - 2) / (ctx.p - 1));

  std::vector<Int> c1(static_cast<size_t>(f), -radius), c2;
  std::vector<SupportEntry> out;

  auto scan_c2 = [&]() {
    c2.assign(static_cast<size_t>(f), -radius);
    while (true) {
      WeightTuple nu = lambda;
      bool inside = true;
      for (int j = 0; j < f && inside; ++j) {
        Int t1 = ctx.p * c1[static_cast<size_t>(j)] - c1[static_cast<size_t>((j - 1 + f) % f)];
        Int t2 = ctx.p * c2[static_cast<size_t>(j)] - c2[static_cast<size_t>((j - 1 + f) % f)];
        Int a = e1[static_cast<size_t>(j)] + t1;  // total a12 coefficient from lambda
        Int b = e2[static_cast<size_t>(j)] + t2;
        if (a < 0 || b < 0 || a > width[static_cast<size_t>(j)] ||
            b > width[static_cast<size_t>(j)]) {
          inside = false;
          break;
        }
        nu.slots[static_cast<size_t>(j)] =
            lambda.slots[static_cast<size_t>(j)] - a * root_vector(Root::a12) -
            b * root_vector(Root::a23);
      }
      if (inside) {
        SupportEntry entry;
        entry.nu = nu;
        entry.total = 1;
        for (int j = 0; j < f; ++j) {
          Int d = slot_char[static_cast<size_t>(j)].mult(nu.slots[static_cast<size_t>(j)]);
          entry.dims.push_back(d);
          entry.total *= d;
        }
        if (entry.total > 0) out.push_back(std::move(entry));
      }
      int j = 0;
      for (; j < f; ++j) {
        if (++c2[static_cast<size_t>(j)] <= radius) break;
        c2[static_cast<size_t>(j)] = -radius;
      }
      if (j == f) break;
    }
  };

  while (true) {
    scan_c2();
    int j = 0;
    for (; j < f; ++j) {
      if (++c1[static_cast<size_t>(j)] <= radius) break;
      c1[static_cast<size_t>(j)] = -radius;
    }
    if (j == f) break;
  }
  return finish_support(std::move(out));
}

std::vector<SupportEntry> eigenspace_support_bruteforce(const WeightTuple& lambda,
                                                        const WeightTuple& mu,
                                                        const Context& ctx) {
  if (!is_p_restricted(lambda, ctx.p))
    throw std::domain_error("eigenspace_support_bruteforce: lambda must be p-restricted");
  const int f = ctx.f;
  std::vector<FormalCharacter> slot_char(static_cast<size_t>(f));
  std::vector<Int> width(static_cast<size_t>(f));
  for (int j = 0; j < f; ++j) {
    slot_char[static_cast<size_t>(j)] = simple_char(lambda.slots[static_cast<size_t>(j)], ctx.p);
    auto [d1, d2] = sl3_restrict(lambda.slots[static_cast<size_t>(j)]);
    width[static_cast<size_t>(j)] = d1 + d2;
  }

  std::vector<SupportEntry> out;
  std::vector<Int> ab(2 * static_cast<size_t>(f), 0);
  while (true) {
    WeightTuple nu = lambda;
    for (int j = 0; j < f; ++j)
      nu.slots[static_cast<size_t>(j)] =
          lambda.slots[static_cast<size_t>(j)] - ab[2 * static_cast<size_t>(j)] * root_vector(Root::a12) -
          ab[2 * static_cast<size_t>(j) + 1] * root_vector(Root::a23);
    if (chi_equal(nu, mu, ctx)) {
      SupportEntry entry;
      entry.nu = nu;
      entry.total = 1;
      for (int j = 0; j < f; ++j) {
        Int d = slot_char[static_cast<size_t>(j)].mult(nu.slots[static_cast<size_t>(j)]);
        entry.dims.push_back(d);
        entry.total *= d;
      }
      if (entry.total > 0) out.push_back(std::move(entry));
    }
    size_t k = 0;
    for (; k < ab.size(); ++k) {
      if (++ab[k] <= width[k / 2]) break;
      ab[k] = 0;
    }
    if (k == ab.size()) break;
  }
  return finish_support(std::move(out));
}

}  // namespace gl3sw
