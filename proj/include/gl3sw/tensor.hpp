#pragma once

#include <vector>

#include "gl3sw/alcoves.hpp"
#include "gl3sw/chars.hpp"
#include "gl3sw/weights.hpp"

namespace gl3sw {

enum class SummandKind { Simple, Tilting };

struct Summand {
  SummandKind kind;
  Weight highest;
  Int mult = 1;

  auto operator<=>(const Summand&) const = default;
};

using SummandList = std::vector<Summand>;

/// Indecomposable summands of L(lambda) ⊗ L(a13) for p-restricted lambda.
SummandList tensor_simple_alpha13(const Weight& lambda, Int p);

/// Character of one summand (simple_char or tilting_char times multiplicity).
FormalCharacter summand_char(const Summand& s, Int p);

/// Sum of the characters of a whole list.
FormalCharacter summand_list_char(const SummandList& list, Int p);

/// Socle tuple of T(lambda_{j0})^{[j0]} ⊗ (⊗_{j≠j0} L(lambda_j)^{[j]}) over GL3(F_q):
/// slot j0 is replaced by lambda_prime. Slot j0 must lie in the tilting domain and
/// every other slot in X_1(T).
WeightTuple tilting_socle_tuple(const WeightTuple& t, int j0, const Context& ctx);

/// Socle constituents of F(lambda) ⊗ F(a13)^{[j0]}, as twist-normalized tuples.
struct SocleReport {
  std::vector<WeightTuple> constituents;  // sorted, deduplicated
  bool exact = false;                     // equality (not just inclusion) is known
};

SocleReport socle_tensor(const WeightTuple& t, int j0, const Context& ctx);

}  // namespace gl3sw
