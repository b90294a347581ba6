#include "gl3sw/chars.hpp"

#include <algorithm>
#include <stdexcept>

#include "gl3sw/alcoves.hpp"

namespace gl3sw {

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) out.add(wa + wb, ma * mb);
  return out;
}

Int kostant_partition(const Weight& mu) {
  if (mu.sum() != 0) return 0;
  Int n1 = mu[0];
  Int n2 = -mu[2];
  if (n1 < 0 || n2 < 0) return 0;
  return std::min(n1, n2) + 1;
}

Int weyl_mult(const Weight& lambda, const Weight& nu) {
  const Weight rho = root_vector(Root::a13);
  const Weight shifted = lambda + rho;
  const Weight target = nu + rho;
  Int total = 0;
  for (const WeylElement& w : weyl_group())
    total += w.sign() * kostant_partition(w.act(shifted) - target);
  return total;
}

Int ssyt_count(const Weight& lambda, const Weight& nu) {
  if (!lambda.dominant()) return 0;
  if (lambda.sum() != nu.sum()) return 0;

  // Shift both by the same constant so every entry is nonnegative.
  Int shift = 0;
  for (int i = 0; i < 3; ++i) shift = std::max({shift, -lambda[i], -nu[i]});
  const std::array<Int, 3> len{lambda[0] + shift, lambda[1] + shift, lambda[2] + shift};
  const std::array<Int, 3> content{nu[0] + shift, nu[1] + shift, nu[2] + shift};
  if (content[0] < 0 || content[1] < 0 || content[2] < 0) return 0;

  // Column-strictness forces row r to contain only values > r (zero-based), so a
  // tableau is determined by n12, n13 (counts of 2s and 3s in row one) and n23
  // (3s in row two). Each candidate is materialized and checked cell by cell.
  Int count = 0;
  const Int n11 = content[0];
  for (Int n12 = 0; n12 <= content[1]; ++n12) {
    const Int n13 = len[0] - n11 - n12;
    if (n13 < 0) continue;
    const Int n22 = content[1] - n12;
    const Int n23 = len[1] - n22;
    if (n22 < 0 || n23 < 0) continue;
    const Int n33 = len[2];
    if (n13 + n23 + n33 != content[2]) continue;

    std::array<std::vector<int>, 3> rows;
    auto fill = [](std::vector<int>& row, Int ones, Int twos, Int threes) {
      row.insert(row.end(), static_cast<size_t>(ones), 1);
      row.insert(row.end(), static_cast<size_t>(twos), 2);
      row.insert(row.end(), static_cast<size_t>(threes), 3);
    };
    fill(rows[0], n11, n12, n13);
    fill(rows[1], 0, n22, n23);
    fill(rows[2], 0, 0, n33);

    bool strict = true;
    for (int r = 1; r < 3 && strict; ++r)
      for (size_t col = 0; col < rows[static_cast<size_t>(r)].size(); ++col)
        if (col >= rows[static_cast<size_t>(r - 1)].size() ||
            rows[static_cast<size_t>(r)][col] <= rows[static_cast<size_t>(r - 1)][col]) {
          strict = false;
          break;
        }
    if (strict) ++count;
  }
  return count;
}

Int weyl_dim(const Weight& lambda) {
  if (!lambda.dominant()) return 0;
  auto [x, y] = sl3_restrict(lambda);
  return (x + 1) * (y + 1) * (x + y + 2) / 2;
}

FormalCharacter weyl_char(const Weight& lambda) {
  if (!lambda.dominant()) return {};
  thread_local std::map<Weight, FormalCharacter> memo;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  FormalCharacter out;
  const Int width = lambda[0] - lambda[2];
  for (Int a = 0; a <= width; ++a)
    for (Int b = 0; b <= width; ++b) {
      Weight nu = lambda - a * root_vector(Root::a12) - b * root_vector(Root::a23);
      Int m = weyl_mult(lambda, nu);
      if (m != 0) out.add(nu, m);
    }
  if (memo.size() < 100000) memo.emplace(lambda, out);
  return out;
}

FormalCharacter simple_char(const Weight& lambda, Int p) {
  if (!lambda.dominant()) return {};
  if (!is_p_restricted(lambda, p))
    throw std::domain_error("simple_char: weight " + to_string(lambda) +
                            " is dominant but not p-restricted");
  FormalCharacter out = weyl_char(lambda);
  if (classify_alcove(lambda, p) == Region::C2) out -= weyl_char(reflect(Reflection::s2, lambda, p));
  return out;
}

FormalCharacter tilting_char(const Weight& lambda, Int p) {
  if (!lambda.dominant()) return {};
  switch (classify_alcove(lambda, p)) {
    case Region::C1:
    case Region::C1_2:
    case Region::C2_3:
      return weyl_char(lambda);
    case Region::C2:
      return weyl_char(lambda) + weyl_char(reflect(Reflection::s2, lambda, p));
    case Region::C3:
      return weyl_char(lambda) + weyl_char(reflect(Reflection::s3, lambda, p));
    case Region::C3p:
      return weyl_char(lambda) + weyl_char(reflect(Reflection::s3p, lambda, p));
    case Region::Cp: {
      auto [d1, d2] = sl3_restrict(lambda);
      FormalCharacter out = weyl_char(lambda);
      const Weight a12 = root_vector(Root::a12);
      const Weight a23 = root_vector(Root::a23);
      const Weight a13 = root_vector(Root::a13);
      if (d1 == p && d2 == p - 1) {
        out += weyl_char(lambda - a12);
        out += weyl_char(lambda - a13);
      } else if (d1 == p - 1 && d2 == p) {
        out += weyl_char(lambda - a23);
        out += weyl_char(lambda - a13);
      } else {  // (p, p)
        out = FormalCharacter{};
        for (Root r : kAllRoots) out += weyl_char(lambda - a13 + root_vector(r));
      }
      return out;
    }
    default:
      throw std::domain_error("tilting_char: weight " + to_string(lambda) +
                              " is outside X_1(T) ∪ C(3) ∪ C(3') ∪ C(p)");
  }
}

namespace {

// Peeling key: heights first, then lex. Every weight of V(mu) other than mu has
// strictly smaller height mu_1 - mu_3.
struct PeelKey {
  Int height;
  Weight w;
  bool operator<(const PeelKey& o) const {
    if (height != o.height) return height < o.height;
    return w < o.w;
  }
};

}  // namespace

namespace {

template <typename PieceFn>
std::vector<std::pair<Weight, Int>> peel_from_top(const FormalCharacter& c, const char* what,
                                                  PieceFn&& piece_char) {
  std::vector<std::pair<Weight, Int>> result;
  FormalCharacter rest = c;
  // Each step eliminates the maximal remaining weight, so the key strictly
  // decreases; genuine inputs terminate with empty rest.
  while (!rest.zero()) {
    PeelKey best{0, Weight{}};
    bool first = true;
    for (const auto& [w, m] : rest.entries()) {
      PeelKey key{w[0] - w[2], w};
      if (first || best < key) {
        best = key;
        first = false;
      }
    }
    if (!best.w.dominant())
      throw std::domain_error(std::string(what) + ": residual at non-dominant weight " +
                              to_string(best.w));
    Int m = rest.mult(best.w);
    result.emplace_back(best.w, m);
    FormalCharacter piece = piece_char(best.w);
    for (const auto& [w, mm] : piece.entries()) rest.add(w, -m * mm);
  }
  return result;
}

}  // namespace

std::vector<std::pair<Weight, Int>> decompose_weyl(const FormalCharacter& c) {
  return peel_from_top(c, "decompose_weyl", [](const Weight& w) { return weyl_char(w); });
}

std::vector<std::pair<Weight, Int>> decompose_tilting(const FormalCharacter& c, Int p) {
  auto result = peel_from_top(c, "decompose_tilting",
                              [p](const Weight& w) { return tilting_char(w, p); });
  for (const auto& [w, m] : result)
    if (m < 0)
      throw std::domain_error("decompose_tilting: negative multiplicity at " + to_string(w));
  return result;
}

}  // namespace gl3sw
